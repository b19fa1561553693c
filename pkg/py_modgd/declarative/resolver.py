from functools import partial
import inspect
from typing import Any, Callable, get_args

AnyCallable = Callable[..., Any]


class CallableResolver:
    """
    Binds callables declared in a class body back to the instance that declared them.

    Mapping tables are written at class level, so a method referenced there is
    still a plain function (or a bare `classmethod`/`staticmethod` object). Before
    calling it we bind it to `self` or to the class, whichever it expects.
    """

    def resolve_callable(self, function: AnyCallable) -> AnyCallable:
        if self.is_instance_method(function):
            return partial(function, self)
        if isinstance(function, classmethod):
            return partial(function.__func__, self.__class__)
        if isinstance(function, staticmethod):
            return function.__func__

        return function

    @classmethod
    def is_instance_method(cls, function: AnyCallable) -> bool:
        return any(
            member is function
            for _, member in inspect.getmembers(cls, inspect.isfunction)
        )

    @classmethod
    def generic_argument(cls, position: int) -> type:
        """Returns the type bound at `position` in the closest parametrised generic base."""
        for klass in cls.__mro__:
            for base in getattr(klass, "__orig_bases__", ()):
                arguments = get_args(base)
                if len(arguments) > position and isinstance(arguments[position], type):
                    return arguments[position]

        raise TypeError(f"{cls.__name__} does not parametrise its generic base.")
