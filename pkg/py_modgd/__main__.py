import sys

from py_modgd.cli import main

sys.exit(main())
