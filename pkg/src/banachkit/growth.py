"""Growth sequences, their empirical constants, and derived sequences.

A growth sequence is a non-decreasing gauge n -> g(n) with g(1) = 1,
given either in closed form (a power law) or as a finite table. The
validator measures the smallest constants for the regularity conditions
the rest of the toolkit consumes:

  doubling      g(n) <= S2 * (n/k) * g(k)         for 1 <= k <= n
  summability   sum_{k<=n} 1/g(k) <= S4 * n/g(n)
  lower power   n^(1/t) <= Lt * g(n)
  split growth  g(k^(2r)) <= Mr * g(k^r) * g(k)^r

The normability constant S3 is reported as the S4 value: the two
conditions are equivalent and only the discrete sum is finitely
checkable.
"""

import math
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "GrowthSequence",
    "GrowthReport",
    "validate_growth",
    "tilde_g",
    "g_q",
    "iterated_log",
    "tower",
    "tower_index",
    "TowerOverflowError",
]

#: largest tower exactly representable before the arithmetic leaves any
#: machine range (tower(5) = 2**65536 is still an exact Python int)
TOWER_CAP = 5


class TowerOverflowError(ValueError):
    """Tower values past the cap are only reported symbolically."""


class GrowthSequence:
    """Evaluator n -> g(n), either a power law n**a or a finite table.

    Table-backed sequences never extrapolate: evaluation outside the
    tabulated range raises.
    """

    def __init__(self, exponent=None, table=None, label=None):
        if (exponent is None) == (table is None):
            raise ValueError("give exactly one of exponent= or table=")
        self.exponent = None if exponent is None else float(exponent)
        if self.exponent is not None and self.exponent < 0:
            raise ValueError("power-law growth needs a non-negative exponent")
        if table is not None:
            table = dict(table)
            ns = sorted(table)
            if not ns or ns[0] != 1:
                raise ValueError("growth table must start at n = 1")
            if any(b <= a for a, b in zip(ns, ns[1:])):
                raise ValueError("growth table indices must be strictly increasing")
            self.table = {int(n): float(table[n]) for n in ns}
            self.max_n = ns[-1]
        else:
            self.table = None
            self.max_n = None
        self.label = label or (
            f"pow:{self.exponent:g}" if self.exponent is not None else "table"
        )

    @classmethod
    def power(cls, a):
        return cls(exponent=a)

    @classmethod
    def from_table(cls, pairs, label=None):
        return cls(table=pairs, label=label)

    @classmethod
    def from_file(cls, path):
        pairs = {}
        with open(path) as fh:
            for lineno, line in enumerate(fh, 1):
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                parts = line.split()
                if len(parts) != 2:
                    raise ValueError(f"{path}:{lineno}: expected 'n value', got {line!r}")
                pairs[int(parts[0])] = float(parts[1])
        return cls(table=pairs, label=f"file:{path}")

    def __call__(self, n):
        arr = np.asarray(n)
        if self.exponent is not None:
            out = arr.astype(float) ** self.exponent
            return float(out) if np.isscalar(n) or arr.ndim == 0 else out
        vals = np.empty(arr.shape if arr.ndim else (), dtype=float)
        flat_in = np.atleast_1d(arr)
        flat_out = np.atleast_1d(vals)
        for i, m in enumerate(flat_in):
            m = int(m)
            if m not in self.table:
                raise ValueError(
                    f"growth table ({self.label}) has no entry for n={m}; "
                    "tables are never extrapolated"
                )
            flat_out[i] = self.table[m]
        return float(vals) if arr.ndim == 0 else vals

    def iterate_value(self, k, r):
        """g(k^r) g(k)^r, with consolidated exponent arithmetic for power
        laws so that identities like sqrt-law values come out exact."""
        if self.exponent is not None:
            a = self.exponent
            return float(k) ** (a * r + a * r)
        return float(self(k**r) * self(k) ** r)

    def split_ratio(self, k, r):
        """g(k^(2r)) / (g(k^r) g(k)^r); exactly 1.0 for power laws."""
        if self.exponent is not None:
            a = self.exponent
            # fl(a*(2r)) == 2*fl(a*r) == fl(a*r) + fl(a*r), so the
            # exponent difference is exactly zero for every power law
            return float(k) ** (a * (2 * r) - (a * r + a * r))
        return float(self(k ** (2 * r)) / (self(k**r) * self(k) ** r))

    def __repr__(self):
        return f"GrowthSequence({self.label})"


@dataclass
class GrowthReport:
    """Empirical minimal constants for a growth sequence on 1..n_max."""

    n_max: int
    s2: float
    s4: float
    s3: float
    s3_note: str
    l_t: float | None = None
    t: float | None = None
    m_r: float | None = None
    r: int | None = None
    ok: bool = True
    violations: list = field(default_factory=list)
    warnings: list = field(default_factory=list)

    def summary(self):
        parts = [f"S2={self.s2:.6g}", f"S3={self.s3:.6g} ({self.s3_note})", f"S4={self.s4:.6g}"]
        if self.l_t is not None:
            parts.append(f"L_{self.t:g}={self.l_t:.6g}")
        if self.m_r is not None:
            parts.append(f"M_{self.r}={self.m_r:.6g}")
        return ", ".join(parts)


# ratio threshold between the constant on the full range and on the
# quarter range before we flag the constant as still growing
_TREND_FACTOR = 1.1


def _trend(full, quarter, name, warnings):
    if quarter > 0 and full > _TREND_FACTOR * quarter:
        warnings.append(
            f"{name} still grows with the range ({quarter:.4g} on the quarter range "
            f"vs {full:.4g} on the full range): unbounded trend"
        )


def validate_growth(g, n_max, t=None, r=None):
    """Measure the smallest constants for g on 1..n_max.

    Returns a GrowthReport; monotonicity violations or g(1) != 1 mark the
    report as failed and list the offending indices. Constants that keep
    growing across the range get an unbounded-trend warning.
    """
    n_max = int(n_max)
    if n_max < 2:
        raise ValueError("validation needs n_max >= 2")
    ns = np.arange(1, n_max + 1)
    vals = g(ns)

    violations = []
    if abs(vals[0] - 1.0) > 1e-12:
        violations.append(f"g(1) = {vals[0]:.6g} != 1")
    bad = np.nonzero(np.diff(vals) < -1e-12)[0]
    if bad.size:
        idx = ", ".join(str(int(i) + 1) for i in bad[:8])
        violations.append(f"g not non-decreasing at n = {idx}")
    if violations:
        return GrowthReport(
            n_max=n_max, s2=math.nan, s4=math.nan, s3=math.nan,
            s3_note="not computed (validation failed)",
            ok=False, violations=violations,
        )

    def constants(upto):
        v = vals[:upto]
        n = ns[:upto].astype(float)
        # S2 = max over k <= n of (g(n) k) / (g(k) n), one row at a time;
        # the diagonal ratio is the same float expression over itself and
        # therefore exactly 1.0
        s2 = 0.0
        for i in range(upto):
            row = (v[i] * n[: i + 1]) / (v[: i + 1] * n[i])
            s2 = max(s2, float(np.max(row)))
        s4 = float(np.max(np.cumsum(1.0 / v) * v / n))
        lt = float(np.max(n ** (1.0 / t) / v)) if t is not None else None
        mr = None
        if r is not None:
            top = int(round(upto ** (1.0 / (2 * r))))
            while (top + 1) ** (2 * r) <= upto:
                top += 1
            while top >= 1 and top ** (2 * r) > upto:
                top -= 1
            if top >= 1:
                mr = max(g.split_ratio(k, r) for k in range(1, top + 1))
        return s2, s4, lt, mr

    s2, s4, l_t, m_r = constants(n_max)
    warnings = []
    if n_max >= 8:
        q2, q4, ql, qm = constants(max(2, n_max // 4))
        _trend(s2, q2, "S2", warnings)
        _trend(s4, q4, "S4", warnings)
        if l_t is not None and ql is not None:
            _trend(l_t, ql, f"L_{t:g}", warnings)
        if m_r is not None and qm is not None:
            _trend(m_r, qm, f"M_{r}", warnings)
    if t is not None and r is not None and t > r:
        warnings.append(f"split-growth exponent r={r} is below t={t:g}; the theory wants t <= r")

    return GrowthReport(
        n_max=n_max, s2=s2, s4=s4, s3=s4,
        s3_note="operationalized via the discrete-sum condition",
        l_t=l_t, t=t, m_r=m_r, r=r,
        ok=True, violations=[], warnings=warnings,
    )


def tilde_g(g, r, n):
    """max of g(k^r) g(k)^r over k with k^(2r) <= n (k = 1 always counts)."""
    r = int(r)
    if r < 2:
        raise ValueError("tilde_g needs r >= 2")
    n = int(n)
    if n < 1:
        raise ValueError("tilde_g needs n >= 1")
    best = 1.0
    k = 1
    while k ** (2 * r) <= n:
        best = max(best, g.iterate_value(k, r))
        k += 1
    return best


def g_q(g, q, n):
    """n^(1/q) times the smallest k^(-1/q) g(k) over 1 <= k <= n."""
    q = float(q)
    if q <= 2.0:
        raise ValueError("g_q is defined for q > 2")
    n = int(n)
    if n < 1:
        raise ValueError("g_q needs n >= 1")
    ks = np.arange(1, n + 1, dtype=float)
    return float(n ** (1.0 / q) * np.min(ks ** (-1.0 / q) * g(np.arange(1, n + 1))))


def iterated_log(k, x):
    """k-fold application of y -> max(1, log2 y); k = 0 is the identity."""
    k = int(k)
    if k < 0:
        raise ValueError("iterated_log needs k >= 0")
    x = float(x)
    if x <= 0:
        raise ValueError("iterated_log needs x > 0")
    for _ in range(k):
        x = max(1.0, math.log2(x))
    return x


def tower(k):
    """Tower of k twos: tower(1) = 2, tower(2) = 4, tower(3) = 16, ..."""
    k = int(k)
    if k < 1:
        raise ValueError("tower needs k >= 1")
    if k > TOWER_CAP:
        raise TowerOverflowError(
            f"tower({k}) = 2^tower({k - 1}) exceeds any machine range; "
            f"symbolically 2^^{k}"
        )
    v = 2
    for _ in range(k - 1):
        v = 2**v
    return v


def tower_index(n):
    """Smallest k >= 1 with n <= tower(k)."""
    n = int(n)
    if n < 1:
        raise ValueError("tower_index needs n >= 1")
    for k in range(1, TOWER_CAP + 1):
        if n <= tower(k):
            return k
    raise TowerOverflowError(
        f"n = {n} exceeds tower({TOWER_CAP}); the index would be symbolic"
    )
