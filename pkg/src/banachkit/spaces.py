"""Symmetric sequence-space families and finite-dimensional norm oracles.

Three rearrangement-invariant families cover everything the toolkit
needs: the classical l_p scale, the two-parameter Lorentz scale, and the
weak spaces graded by a growth sequence. A NormedSpace fixes a dimension
on top of a family; a SubspaceSpace composes a basis matrix with an
ambient norm.

The l_{p,inf} and weak families are quasi-norms and are flagged as such
with an explicit quasi-triangle constant.
"""

import math
from dataclasses import dataclass

import numpy as np

from .growth import GrowthSequence
from .sequences import lorentz_norm, gweak_norm, rearrange

__all__ = [
    "SeqSpace",
    "lp",
    "lorentz",
    "gweak",
    "NormedSpace",
    "SubspaceSpace",
    "fundamental_function",
    "cotype_index",
    "parse_space",
    "parse_family",
    "DescriptorError",
]


def _conjugate(p):
    if p == 1.0:
        return math.inf
    if p == math.inf:
        return 1.0
    return p / (p - 1.0)


@dataclass(frozen=True)
class SeqSpace:
    """Dimension-free descriptor of a symmetric sequence-space family."""

    family: str  # "lp" | "lorentz" | "gweak"
    p: float | None = None
    q: float | None = None
    g: GrowthSequence | None = None

    def __post_init__(self):
        if self.family == "lp":
            if self.p is None or self.p < 1:
                raise ValueError("lp family needs p >= 1")
        elif self.family == "lorentz":
            if self.p is None or self.p < 1 or self.q is None or (self.q != math.inf and self.q < 1):
                raise ValueError("lorentz family needs p >= 1 and q >= 1 (or inf)")
        elif self.family == "gweak":
            if self.g is None:
                raise ValueError("gweak family needs a growth sequence")
        else:
            raise ValueError(f"unknown family {self.family!r}")

    # -- norm evaluation ------------------------------------------------

    def norm(self, x):
        x = np.asarray(x)
        if self.family == "lp":
            a = np.abs(x).astype(float)
            if self.p == math.inf:
                return float(np.max(a)) if a.size else 0.0
            return float(np.sum(a**self.p) ** (1.0 / self.p))
        if self.family == "lorentz":
            return lorentz_norm(x, self.p, self.q)
        return gweak_norm(x, self.g)

    def norm_rows(self, m):
        """Vectorized norm of every row of a 2-d array."""
        m = np.abs(np.asarray(m)).astype(float)
        if self.family == "lp":
            if self.p == math.inf:
                return np.max(m, axis=1)
            return np.sum(m**self.p, axis=1) ** (1.0 / self.p)
        s = -np.sort(-m, axis=1)
        n = np.arange(1, m.shape[1] + 1, dtype=float)
        if self.family == "lorentz":
            if self.q == math.inf:
                return np.max(n ** (1.0 / self.p) * s, axis=1)
            e = self.q / self.p - 1.0
            return np.sum(s**self.q * n**e, axis=1) ** (1.0 / self.q)
        w = self.g(np.arange(1, m.shape[1] + 1))
        return np.max(w * s, axis=1)

    # -- structural data -------------------------------------------------

    @property
    def is_quasi(self):
        """True for the weak families, whose triangle inequality only
        holds up to a constant."""
        return self.family == "gweak" or (self.family == "lorentz" and self.q == math.inf)

    def quasi_constant(self, n):
        """Quasi-triangle constant valid on vectors of length <= n."""
        if not self.is_quasi:
            return 1.0
        if self.family == "lorentz":
            return 2.0 ** (1.0 / self.p)
        # (x+y)*_{2m} <= x*_m + y*_m, then the doubling constant of g
        ks = np.arange(1, n + 1)
        s2 = float(np.max(self.g(2 * ks) / self.g(ks))) if self.g.max_n is None or self.g.max_n >= 2 * n else 2.0
        return s2

    def fundamental(self, n):
        """Norm of the n-term constant-one sequence."""
        n = int(n)
        if n < 1:
            raise ValueError("fundamental function needs n >= 1")
        if self.family == "lp":
            return float(n ** (1.0 / self.p))
        if self.family == "lorentz":
            if self.q == math.inf:
                return float(n ** (1.0 / self.p))
            ks = np.arange(1, n + 1, dtype=float)
            return float(np.sum(ks ** (self.q / self.p - 1.0)) ** (1.0 / self.q))
        return float(self.g(n))

    def describe(self):
        if self.family == "lp":
            return f"lp:{self.p:g}"
        if self.family == "lorentz":
            return f"lorentz:{self.p:g}:{self.q:g}"
        return f"gweak:{self.g.label}"

    # -- duality ----------------------------------------------------------

    def dual_exact(self, y):
        """Exact dual-norm value where a closed form exists, else None.

        l_p duals are l_{p'}; for the weak families the dual pairing is
        maximized by aligning the rearrangement of y against the extreme
        profile 1/g(k), giving sum_k y*_k / g(k) exactly.
        """
        y = np.asarray(y, dtype=float)
        if self.family == "lp":
            return SeqSpace("lp", p=_conjugate(self.p)).norm(y)
        s = rearrange(y)
        s = s[s > 0]
        if s.size == 0:
            return 0.0
        ks = np.arange(1, s.size + 1)
        if self.family == "lorentz" and self.q == math.inf:
            return float(np.sum(s * ks ** (-1.0 / self.p)))
        if self.family == "gweak":
            return float(np.sum(s / self.g(ks)))
        return None

    def dual_upper(self, y):
        """Certified upper bound on the dual norm of y (exact where a
        closed form exists; the l_{p',q'} Lorentz norm otherwise)."""
        exact = self.dual_exact(y)
        if exact is not None:
            return exact
        # lorentz with finite q: Hardy-Littlewood plus Hoelder in the
        # weighted l_q pairing gives <x,y> <= ||x||_{p,q} ||y||_{p',q'}
        return lorentz_norm(y, _conjugate(self.p), _conjugate(self.q))


def lp(p):
    return SeqSpace("lp", p=float(p))


def lorentz(p, q):
    return SeqSpace("lorentz", p=float(p), q=float(q))


def gweak(g):
    return SeqSpace("gweak", g=g)


def fundamental_function(space, n):
    return space.fundamental(n)


def cotype_index(space, n_max):
    """Finite-range surrogate for the cotype index of a family.

    Returns sup over 2 <= n <= n_max of log n / log f(n); infinity when
    the fundamental function never rises above 1 on the range. The true
    index is an infimum over all n, so this is only an estimate on the
    stated range.
    """
    n_max = int(n_max)
    if n_max < 2:
        raise ValueError("cotype_index needs n_max >= 2")
    best = 0.0
    seen = False
    for n in range(2, n_max + 1):
        f = space.fundamental(n)
        if f > 1.0 + 1e-12:
            best = max(best, math.log(n) / math.log(f))
            seen = True
    return best if seen else math.inf


class NormedSpace:
    """A sequence-space family pinned to a fixed dimension."""

    def __init__(self, space, dim):
        self.space = space
        self.dim = int(dim)
        if self.dim < 1:
            raise ValueError("dimension must be >= 1")
        if space.family == "gweak" and space.g.max_n is not None and space.g.max_n < self.dim:
            raise ValueError("growth table shorter than the space dimension")

    def _check(self, x):
        x = np.asarray(x)
        if x.shape[-1] != self.dim:
            raise ValueError(f"vector of length {x.shape[-1]} in a {self.dim}-dimensional space")
        return x

    def norm(self, x):
        return self.space.norm(self._check(x))

    def norm_rows(self, m):
        return self.space.norm_rows(self._check(m))

    def unit(self, x):
        x = np.asarray(x, dtype=float)
        nrm = self.norm(x)
        if nrm == 0.0:
            raise ValueError("cannot normalize the zero vector")
        return x / nrm

    @property
    def is_euclidean(self):
        return (self.space.family == "lp" and self.space.p == 2.0) or (
            self.space.family == "lorentz" and self.space.p == 2.0 and self.space.q == 2.0
        )

    @property
    def is_quasi(self):
        return self.space.is_quasi

    def quasi_constant(self):
        return self.space.quasi_constant(self.dim)

    # comparison constants against the Euclidean norm on the same
    # coordinates; used to convert spectral data into certified bounds
    def le_euclid(self):
        """c with ||x||_X <= c ||x||_2 for all x."""
        if self.space.family == "lp":
            return float(self.dim ** max(0.0, 1.0 / self.space.p - 0.5))
        return self.space.fundamental(self.dim)

    def ge_euclid(self):
        """c with ||x||_2 <= c ||x||_X for all x."""
        if self.space.family == "lp":
            return float(self.dim ** max(0.0, 0.5 - 1.0 / self.space.p))
        # every family here dominates the sup norm
        return math.sqrt(self.dim)

    def dual_exact(self, y):
        return self.space.dual_exact(self._check(y))

    def dual_upper(self, y):
        return self.space.dual_upper(self._check(y))

    def describe(self):
        return f"{self.space.describe()}:{self.dim}"

    def __eq__(self, other):
        return isinstance(other, NormedSpace) and self.describe() == other.describe()

    def __repr__(self):
        return f"NormedSpace({self.describe()})"


class SubspaceSpace:
    """Subspace of an ambient space given by a basis matrix.

    Coordinates live in R^dim; the norm of c is the ambient norm of
    basis @ c. Rearrangement structure is lost, so only the plain norm
    oracle and the Euclidean comparison constants are available.
    """

    def __init__(self, basis, ambient):
        self.basis = np.asarray(basis, dtype=float)
        if self.basis.ndim != 2 or self.basis.shape[0] != ambient.dim:
            raise ValueError("basis must be (ambient.dim x dim)")
        self.ambient = ambient
        self.dim = self.basis.shape[1]
        sv = np.linalg.svd(self.basis, compute_uv=False)
        if sv[-1] <= 1e-12:
            raise ValueError("basis matrix is (numerically) rank deficient")
        self._smax, self._smin = float(sv[0]), float(sv[-1])

    def norm(self, x):
        return self.ambient.norm(self.basis @ np.asarray(x, dtype=float))

    def norm_rows(self, m):
        return self.ambient.norm_rows(np.asarray(m, dtype=float) @ self.basis.T)

    def unit(self, x):
        x = np.asarray(x, dtype=float)
        nrm = self.norm(x)
        if nrm == 0.0:
            raise ValueError("cannot normalize the zero vector")
        return x / nrm

    @property
    def is_euclidean(self):
        return False

    @property
    def is_quasi(self):
        return self.ambient.is_quasi

    def le_euclid(self):
        return self.ambient.le_euclid() * self._smax

    def ge_euclid(self):
        return self.ambient.ge_euclid() / self._smin

    def dual_exact(self, y):
        return None

    def dual_upper(self, y):
        # <c, y> <= ||c||_2 ||y||_2 <= ge_euclid ||c||_X ||y||_2
        return self.ge_euclid() * float(np.linalg.norm(y))

    def describe(self):
        return f"sub:{self.dim}<{self.ambient.describe()}"

    def __repr__(self):
        return f"SubspaceSpace({self.describe()})"


# -- descriptor grammar ----------------------------------------------------
#
#   lp:<p>:<n>   lorentz:<p>:<q>:<n>   gweak:pow:<a>:<n>   gweak:file:<path>:<n>
#
# The trailing dimension is optional wherever only the family is needed.


class DescriptorError(ValueError):
    def __init__(self, descriptor, token, why):
        self.token = token
        super().__init__(f"bad descriptor {descriptor!r}: token {token!r} ({why})")


def _parse_scalar(descriptor, token):
    if token in ("inf", "Inf", "INF"):
        return math.inf
    try:
        return float(token)
    except ValueError:
        raise DescriptorError(descriptor, token, "not a number") from None


def parse_family(descriptor):
    """Parse a family descriptor; returns (SeqSpace, dim-or-None)."""
    parts = descriptor.split(":")
    kind = parts[0]
    try:
        if kind == "lp" and len(parts) in (2, 3):
            space = lp(_parse_scalar(descriptor, parts[1]))
            dim = int(parts[2]) if len(parts) == 3 else None
        elif kind == "lorentz" and len(parts) in (3, 4):
            space = lorentz(
                _parse_scalar(descriptor, parts[1]), _parse_scalar(descriptor, parts[2])
            )
            dim = int(parts[3]) if len(parts) == 4 else None
        elif kind == "gweak" and len(parts) in (3, 4) and parts[1] == "pow":
            space = gweak(GrowthSequence.power(_parse_scalar(descriptor, parts[2])))
            dim = int(parts[3]) if len(parts) == 4 else None
        elif kind == "gweak" and len(parts) in (3, 4) and parts[1] == "file":
            space = gweak(GrowthSequence.from_file(parts[2]))
            dim = int(parts[3]) if len(parts) == 4 else None
        else:
            raise DescriptorError(descriptor, kind, "unknown family or wrong arity")
    except ValueError as exc:
        if isinstance(exc, DescriptorError):
            raise
        raise DescriptorError(descriptor, descriptor, str(exc)) from None
    return space, dim


def parse_space(descriptor):
    """Parse a descriptor that must carry a dimension."""
    space, dim = parse_family(descriptor)
    if dim is None:
        raise DescriptorError(descriptor, descriptor, "missing dimension suffix")
    return NormedSpace(space, dim)
