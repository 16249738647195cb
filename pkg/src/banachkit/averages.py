"""Rademacher and gaussian averages of vector configurations.

Sign averages are exact by enumeration up to ENUM_CAP vectors (the
global flip symmetry halves the pattern count); beyond that, and for
gaussian weights always, chunked Monte Carlo with per-chunk seeds
derived from the master seed keeps results reproducible.
"""

import math

import numpy as np

from .estimates import AverageResult
from .linmaps import ENUM_CAP, sign_patterns
from .search import child_seeds, multistart_maximize

__all__ = [
    "rademacher_average",
    "gaussian_average",
    "ell_norm",
    "contraction_check",
    "gauss_vs_rademacher",
]

_CHUNK = 20_000


def _as_config(config):
    c = np.asarray(config, dtype=float)
    if c.ndim == 1:
        c = c[None, :]
    return c


def _moments(values, moment):
    if moment == 1:
        return values
    return values**2


def _finish(mean, var_of_mean, moment, method, samples, seed):
    if moment == 1:
        return AverageResult(float(mean), method, samples, float(math.sqrt(var_of_mean)), seed)
    value = math.sqrt(max(mean, 0.0))
    # delta method for the square root of the estimated second moment
    se = math.sqrt(var_of_mean) / (2.0 * value) if value > 0 else 0.0
    return AverageResult(float(value), method, samples, float(se), seed)


def _mc_average(config, space, moment, sampler, samples, seed):
    total, total_sq, count = 0.0, 0.0, 0
    seeds = child_seeds(seed, (samples + _CHUNK - 1) // _CHUNK)
    for i, s in enumerate(seeds):
        m = min(_CHUNK, samples - i * _CHUNK)
        rng = np.random.default_rng(s)
        weights = sampler(rng, (m, config.shape[0]))
        vals = _moments(space.norm_rows(weights @ config), moment)
        total += float(np.sum(vals))
        total_sq += float(np.sum(vals**2))
        count += m
    mean = total / count
    var = max(total_sq / count - mean**2, 0.0) / count
    return _finish(mean, var, moment, "monte-carlo", count, seed)


def rademacher_average(config, space, moment=1, samples=100_000, seed=0, enum_cap=ENUM_CAP):
    """E || sum_k eps_k x_k || (moment 1) or the square root of the
    second moment (moment 2), over independent signs."""
    if moment not in (1, 2):
        raise ValueError("moment must be 1 or 2")
    config = _as_config(config)
    n = config.shape[0]
    if n <= enum_cap:
        signs = sign_patterns(n)
        vals = _moments(space.norm_rows(signs @ config), moment)
        mean = float(np.mean(vals))
        return _finish(mean, 0.0, moment, "exact-enumeration", signs.shape[0], seed)
    return _mc_average(config, space, moment,
                       lambda rng, shape: rng.choice([-1.0, 1.0], size=shape),
                       samples, seed)


def gaussian_average(config, space, moment=1, samples=100_000, seed=0):
    """Monte-Carlo E || sum_k g_k x_k || with reported standard error."""
    if moment not in (1, 2):
        raise ValueError("moment must be 1 or 2")
    config = _as_config(config)
    return _mc_average(config, space, moment,
                       lambda rng, shape: rng.standard_normal(shape),
                       samples, seed)


def ell_norm(u, samples=100_000, seed=0):
    """Gaussian second-moment average of a Euclidean-domain map applied
    to the coordinate basis; invariant under orthogonal change of basis."""
    if not u.domain.is_euclidean:
        raise ValueError("the ell norm needs a Euclidean domain")
    columns = np.asarray(u.matrix, dtype=float).T
    return gaussian_average(columns, u.codomain, moment=2, samples=samples, seed=seed)


def contraction_check(config, space, budget=16, seed=0):
    """(sup over the coefficient box, sup over signs) of ||sum a_k x_k||.

    The sign sup is enumerated exactly; the box sup additionally runs a
    continuous ascent over [-1, 1]^n, which by the extreme-point
    structure of the real cube can never exceed the sign value. For real
    scalars the two returned values agree.
    """
    config = _as_config(config)
    if np.iscomplexobj(config):
        raise ValueError("the contraction check is a real-scalar statement")
    n = config.shape[0]
    if n > ENUM_CAP:
        raise ValueError(f"sign enumeration capped at {ENUM_CAP} vectors")
    signs = sign_patterns(n)
    vals = space.norm_rows(signs @ config)
    i = int(np.argmax(vals))
    sup_signs = float(vals[i])

    box_val, _ = multistart_maximize(
        lambda a: space.norm(a @ config),
        shape=(n,),
        structured=[signs[i], np.zeros(n), 0.5 * signs[i]],
        budget=budget,
        seed=seed,
        project=lambda a: np.clip(a, -1.0, 1.0),
        random_start=lambda rng: rng.uniform(-1.0, 1.0, n),
    )
    return max(float(box_val), sup_signs), sup_signs


def gauss_vs_rademacher(config, space, samples=100_000, seed=0):
    """Both first-moment averages and their ratio.

    The gaussian average dominates sqrt(2/pi) times the sign average;
    with Monte Carlo on the gaussian side the comparison is meaningful
    up to a few standard errors. Zero configurations are flagged as
    degenerate rather than raising.
    """
    config = _as_config(config)
    s_gauss, s_rade = child_seeds(seed, 2)
    gauss = gaussian_average(config, space, moment=1, samples=samples, seed=s_gauss)
    rade = rademacher_average(config, space, moment=1, samples=samples, seed=s_rade)
    if rade.value == 0.0:
        return {"gaussian": gauss, "rademacher": rade, "ratio": None,
                "floor": math.sqrt(2.0 / math.pi), "degenerate": True}
    ratio = gauss.value / rade.value
    se = math.hypot(gauss.stderr, rade.stderr * ratio) / rade.value
    return {"gaussian": gauss, "rademacher": rade, "ratio": ratio,
            "ratio_stderr": se, "floor": math.sqrt(2.0 / math.pi), "degenerate": False}
