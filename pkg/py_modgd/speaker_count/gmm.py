import logging

import numpy as np
from scipy.special import logsumexp
from sklearn.cluster import KMeans

from py_modgd.errors import NumericalError
from py_modgd.speaker_count.types import GmmConfig, GmmModel

logger = logging.getLogger(__name__)

MIN_VARIANCE = 1e-10
LL_DECREASE_TOLERANCE = 1e-9


def _as_matrix(vectors: np.ndarray) -> np.ndarray:
    vectors = np.asarray(vectors, dtype=np.float64)
    if vectors.ndim != 2:
        raise ValueError(f"Expected a vectors x dimensions matrix, got shape {vectors.shape}.")
    return vectors


def log_gaussians(
    vectors: np.ndarray, means: np.ndarray, variances: np.ndarray
) -> np.ndarray:
    """Log-density of every vector under every diagonal component, vectors x components."""
    deviations = vectors[:, None, :] - means[None, :, :]
    mahalanobis = np.sum(deviations**2 / variances[None, :, :], axis=-1)
    log_det = np.sum(np.log(variances), axis=-1)
    return -0.5 * (vectors.shape[1] * np.log(2.0 * np.pi) + log_det[None, :] + mahalanobis)


def _e_step(
    vectors: np.ndarray, weights: np.ndarray, means: np.ndarray, variances: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """Per-vector log-likelihood and log responsibilities."""
    with np.errstate(divide="ignore"):
        weighted = log_gaussians(vectors, means, variances) + np.log(weights)[None, :]
    log_norm = logsumexp(weighted, axis=1)
    return log_norm, weighted - log_norm[:, None]


def _m_step(
    vectors: np.ndarray, resp: np.ndarray, floor: np.ndarray
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    counts = resp.sum(axis=0) + 10.0 * np.finfo(np.float64).eps
    weights = counts / counts.sum()
    means = resp.T @ vectors / counts[:, None]
    variances = resp.T @ vectors**2 / counts[:, None] - means**2
    return weights, means, np.maximum(variances, floor[None, :])


def gmm_train(
    vectors: np.ndarray, class_label: int, cfg: GmmConfig | None = None
) -> GmmModel:
    """
    Fits a diagonal-covariance mixture with EM, starting from k-means clusters.

    Training stops after `cfg.max_iter` iterations or once the relative gain
    of the mean log-likelihood drops below `cfg.tol`. Component variances are
    kept above `cfg.variance_floor` times the global variance of each dimension.

    Raises:
        ValueError: If there are fewer vectors than components.
        NumericalError: If the log-likelihood decreases between iterations.
    """
    cfg = cfg or GmmConfig()
    vectors = _as_matrix(vectors)
    n_vectors = vectors.shape[0]
    if n_vectors < cfg.n_components:
        raise ValueError(
            f"Class {class_label} has {n_vectors} vectors; "
            f"{cfg.n_components} components need at least as many."
        )

    floor = np.maximum(cfg.variance_floor * vectors.var(axis=0), MIN_VARIANCE)

    clusters = KMeans(n_clusters=cfg.n_components, n_init=1, random_state=cfg.seed)
    labels = clusters.fit_predict(vectors)
    resp = np.zeros((n_vectors, cfg.n_components))
    resp[np.arange(n_vectors), labels] = 1.0
    weights, means, variances = _m_step(vectors, resp, floor)

    history: list[float] = []
    for iteration in range(cfg.max_iter):
        log_norm, log_resp = _e_step(vectors, weights, means, variances)
        log_likelihood = float(log_norm.mean())
        if not np.isfinite(log_likelihood):
            raise NumericalError(f"Non-finite log-likelihood at EM iteration {iteration}.")

        converged = False
        if history:
            previous = history[-1]
            gain = log_likelihood - previous
            if gain < -LL_DECREASE_TOLERANCE * (1.0 + abs(previous)):
                raise NumericalError(
                    f"EM log-likelihood decreased at iteration {iteration}: "
                    f"{previous:.9g} -> {log_likelihood:.9g}."
                )
            converged = gain < cfg.tol * abs(previous)
        history.append(log_likelihood)
        if converged:
            break

        weights, means, variances = _m_step(vectors, np.exp(log_resp), floor)

    logger.info(
        "Trained class %d: %d components on %d vectors, %d EM iterations, ll %.4f",
        class_label,
        cfg.n_components,
        n_vectors,
        len(history),
        history[-1],
    )
    return GmmModel(
        class_label=class_label,
        weights=weights,
        means=means,
        variances=variances,
        log_likelihood=history,
    )


def score_samples(model: GmmModel, vectors: np.ndarray) -> np.ndarray:
    """Log-likelihood of every vector under the mixture."""
    log_norm, _ = _e_step(_as_matrix(vectors), model.weights, model.means, model.variances)
    return log_norm


def responsibilities(model: GmmModel, vectors: np.ndarray) -> np.ndarray:
    """Posterior component probabilities; every row sums to one."""
    _, log_resp = _e_step(_as_matrix(vectors), model.weights, model.means, model.variances)
    return np.exp(log_resp)
