"""Dense linear maps between normed spaces and their operator data.

Operator norms are exact where a closed form exists (Euclidean to
Euclidean, out of l_1, into l_inf, out of a small l_inf cube) and are
otherwise reported as witnessed lower bounds with a companion upper
bound from Euclidean comparison constants.
"""

import math

import numpy as np

from .estimates import Estimate, EXACT, LOWER
from .search import multistart_maximize

__all__ = ["LinearMap", "identity_map", "operator_norm", "dual_norm",
           "weak_lq_functional", "ENUM_CAP"]

#: sign patterns are enumerated exactly up to this many vectors
ENUM_CAP = 20


def sign_patterns(n):
    """All sign vectors of length n with first entry +1 (global flip
    symmetry halves the enumeration), as a (2^(n-1), n) float array."""
    if n > ENUM_CAP:
        raise ValueError(f"sign enumeration capped at {ENUM_CAP} vectors")
    m = 2 ** (n - 1)
    out = np.empty((m, n))
    out[:, 0] = 1.0
    for j in range(1, n):
        block = 2 ** (n - 1 - j)
        pattern = np.repeat(np.array([1.0, -1.0]), block)
        out[:, j] = np.tile(pattern, m // (2 * block))
    return out


class LinearMap:
    """Dense matrix of shape (codomain.dim, domain.dim) between spaces."""

    def __init__(self, matrix, domain, codomain):
        self.matrix = np.asarray(matrix)
        self.domain = domain
        self.codomain = codomain
        if self.matrix.shape != (codomain.dim, domain.dim):
            raise ValueError(
                f"matrix shape {self.matrix.shape} does not match "
                f"{codomain.dim}x{domain.dim}"
            )

    def apply(self, x):
        return self.matrix @ np.asarray(x)

    def compose(self, other):
        """self after other."""
        if other.codomain.describe() != self.domain.describe():
            raise ValueError("composition spaces do not match")
        return LinearMap(self.matrix @ other.matrix, other.domain, self.codomain)

    @property
    def is_square(self):
        return self.matrix.shape[0] == self.matrix.shape[1]

    @property
    def is_euclidean(self):
        return self.domain.is_euclidean and self.codomain.is_euclidean

    def __repr__(self):
        return f"LinearMap({self.domain.describe()} -> {self.codomain.describe()})"


def identity_map(space):
    return LinearMap(np.eye(space.dim), space, space)


def norm_upper(T):
    """Certified upper bound on the operator norm via the Euclidean
    comparison constants of the two spaces."""
    smax = float(np.linalg.svd(T.matrix, compute_uv=False)[0]) if T.matrix.size else 0.0
    return T.codomain.le_euclid() * smax * T.domain.ge_euclid()


def operator_norm(T, budget=32, seed=0):
    """Operator norm of T, exact on the closed-form routes.

    Exact routes: Euclidean-to-Euclidean (largest singular value),
    domain l_1 (max column norm), codomain l_inf with an l_p-family
    domain (max dual norm of the rows), small l_inf domain (sign
    enumeration). Everything else returns a witnessed lower bound with
    the comparison-constant upper bound in meta.
    """
    A = np.asarray(T.matrix, dtype=float)
    if not np.any(A):
        return Estimate(0.0, EXACT, witness=None, budget=0, seed=seed)
    dom, cod = T.domain, T.codomain

    if T.is_euclidean:
        u, s, vt = np.linalg.svd(A)
        return Estimate(float(s[0]), EXACT, witness=vt[0], budget=0, seed=seed)

    fam = getattr(dom, "space", None)
    if fam is not None and fam.family == "lp" and fam.p == 1.0:
        vals = cod.norm_rows(A.T)
        j = int(np.argmax(vals))
        w = np.zeros(dom.dim)
        w[j] = 1.0
        return Estimate(float(vals[j]), EXACT, witness=w, budget=0, seed=seed)

    cfam = getattr(cod, "space", None)
    if cfam is not None and cfam.family == "lp" and cfam.p == math.inf:
        duals = [dom.dual_exact(row) for row in A]
        if all(d is not None for d in duals):
            i = int(np.argmax(duals))
            return Estimate(
                float(duals[i]), EXACT, witness={"row": i}, budget=0, seed=seed
            )

    if fam is not None and fam.family == "lp" and fam.p == math.inf and dom.dim <= ENUM_CAP:
        signs = sign_patterns(dom.dim)
        vals = cod.norm_rows(signs @ A.T)
        i = int(np.argmax(vals))
        return Estimate(float(vals[i]), EXACT, witness=signs[i], budget=0, seed=seed)

    def project(x):
        nrm = dom.norm(x)
        return None if nrm == 0.0 else x / nrm

    structured = [np.eye(dom.dim)[j] for j in range(dom.dim)]
    structured.append(np.ones(dom.dim))
    val, wit = multistart_maximize(
        lambda x: cod.norm(A @ x),
        shape=(dom.dim,),
        structured=structured,
        budget=budget,
        seed=seed,
        project=project,
    )
    return Estimate(
        float(val), LOWER, witness=wit, budget=budget, seed=seed,
        meta={"upper": norm_upper(T)},
    )


def dual_norm(space, functional, budget=32, seed=0):
    """Dual-norm value of a functional against the space's unit ball.

    Exact (closed form) for the l_p scale and the weak families;
    otherwise a certified lower bound from a seeded search over the unit
    sphere, with the maximizing unit vector as witness. The certified
    upper bound from Lorentz duality rides along in meta["upper"].
    """
    y = np.asarray(functional, dtype=float)
    if y.shape != (space.dim,):
        raise ValueError(f"functional of length {y.size} in a {space.dim}-dimensional space")
    exact = space.dual_exact(y)
    if exact is not None:
        return Estimate(float(exact), EXACT, witness=None, budget=0, seed=seed)
    if not np.any(y):
        return Estimate(0.0, EXACT, witness=None, budget=0, seed=seed)

    def project(x):
        nrm = space.norm(x)
        return None if nrm == 0.0 else x / nrm

    # rearrangement-aligned profile: the extreme configuration for
    # rearrangement-invariant balls, plus coordinate and sign starts
    order = np.argsort(-np.abs(y))
    aligned = np.zeros(space.dim)
    aligned[order] = np.sign(y[order]) / np.arange(1, space.dim + 1)
    structured = [aligned, np.sign(y) + (y == 0), *np.eye(space.dim)]
    val, wit = multistart_maximize(
        lambda x: abs(float(x @ y)),
        shape=(space.dim,),
        structured=structured,
        budget=budget,
        seed=seed,
        project=project,
    )
    return Estimate(float(val), LOWER, witness=wit, budget=budget, seed=seed,
                    meta={"upper": space.dual_upper(y)})


def _weak_moment(config, x_star, q):
    a = np.abs(config @ x_star)
    if q == math.inf:
        return float(np.max(a))
    return float(np.sum(a**q) ** (1.0 / q))


def weak_lq_upper(config, space, q):
    """Certified upper bound on sup over the dual unit ball of the
    weak l_q moment of a configuration."""
    config = np.asarray(config, dtype=float)
    n = config.shape[0]
    norms = np.array([space.norm(x) for x in config])
    if q == math.inf:
        return float(np.max(norms))
    bounds = [float(np.sum(norms**q) ** (1.0 / q))]
    if space.is_euclidean:
        smax = float(np.linalg.svd(config, compute_uv=False)[0]) if np.any(config) else 0.0
        if q >= 2.0:
            bounds.append(smax)
        else:
            bounds.append(n ** (1.0 / q - 0.5) * smax)
    if n <= ENUM_CAP:
        # weak-1 moment equals the sign sup of the configuration, and
        # dominates every weak-q moment for q >= 1
        signs = sign_patterns(n)
        bounds.append(float(np.max(space.norm_rows(signs @ config))))
    return min(bounds)


def weak_lq_functional(config, space, q, budget=32, seed=0):
    """sup over the dual unit ball of (sum_k |<x_k, x*>|^q)^(1/q).

    Exact for q = 1 with few vectors (sign enumeration through the
    bidual) and for q = 2 on Euclidean spaces (largest singular value);
    otherwise a witnessed lower bound with a certified upper bound in
    meta["upper"].
    """
    config = np.asarray(config, dtype=float)
    if config.ndim != 2:
        raise ValueError("config must be a (n_vectors, dim) array")
    n, dim = config.shape
    if dim != space.dim:
        raise ValueError("config dimension does not match the space")
    q = float(q)
    if q < 1.0:
        raise ValueError("weak moment needs q >= 1")
    if not np.any(config):
        return Estimate(0.0, EXACT, witness=None, budget=0, seed=seed)

    if q == 2.0 and space.is_euclidean:
        u, s, vt = np.linalg.svd(config)
        return Estimate(float(s[0]), EXACT, witness=vt[0], budget=0, seed=seed,
                        meta={"upper": float(s[0])})

    if q == 1.0 and n <= ENUM_CAP:
        signs = sign_patterns(n)
        vals = space.norm_rows(signs @ config)
        i = int(np.argmax(vals))
        v = float(vals[i])
        return Estimate(v, EXACT, witness={"signs": signs[i]}, budget=0, seed=seed,
                        meta={"upper": v})

    upper = weak_lq_upper(config, space, q)

    def project(z):
        du = space.dual_upper(z)
        return None if du == 0.0 else z / du

    structured = [np.eye(dim)[j] for j in range(dim)]
    structured.append(config.sum(axis=0))
    val, wit = multistart_maximize(
        lambda z: _weak_moment(config, z, q),
        shape=(dim,),
        structured=structured,
        budget=budget,
        seed=seed,
        project=project,
    )
    return Estimate(float(val), LOWER, witness=wit, budget=budget, seed=seed,
                    meta={"upper": upper})
