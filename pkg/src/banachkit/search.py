"""Seeded multi-start maximization used by all sup-type estimators.

The strategy is deliberately simple and derivative-free: evaluate a set
of structured starts plus seeded random starts, then polish each by
coordinate ascent (single-entry perturbations with a shrinking step).
Candidates are always evaluated over the full list, so results are a
deterministic function of the master seed.
"""

import numpy as np

__all__ = ["child_seeds", "split_budget", "multistart_maximize"]


def child_seeds(master, n):
    """Derive n independent integer seeds from a master seed."""
    return [int(s.generate_state(1)[0]) for s in np.random.SeedSequence(master).spawn(n)]


def split_budget(budget, sweeps=8):
    """Split a scalar budget into (random starts, polish sweeps).

    budget is interpreted as starts x sweeps; budget 0 means structured
    starts only, no polish.
    """
    budget = int(budget)
    if budget <= 0:
        return 0, 0
    sweeps = max(1, min(sweeps, budget))
    return max(1, budget // sweeps), sweeps


def _polish(x, value, objective, project, sweeps, rng, step0=0.5, max_proposals=48):
    """Greedy coordinate ascent on the flattened entries of x."""
    x = np.array(x, dtype=float)
    best = value
    step = step0
    n_entries = x.size
    for _ in range(sweeps):
        order = rng.permutation(n_entries)[: max_proposals // 2 or 1]
        improved = False
        for idx in order:
            for delta in (step, -step):
                cand = x.copy()
                cand.flat[idx] += delta
                cand = project(cand)
                if cand is None:
                    continue
                v = objective(cand)
                if v > best + 1e-15:
                    x, best = cand, v
                    improved = True
                    break
        if not improved:
            step *= 0.5
            if step < 1e-4:
                break
    return best, x


def multistart_maximize(objective, *, shape, structured=(), budget=0, seed=0,
                        project=None, random_start=None):
    """Maximize objective over arrays of the given shape.

    objective: array -> float (larger is better); may return -inf to
        reject a candidate.
    structured: iterable of starting arrays always evaluated first.
    project: map an arbitrary array back into the feasible set (return
        None to reject); defaults to identity.
    random_start: rng -> array; defaults to standard normal entries.

    Returns (best value, best array). Raises if no candidate is feasible.
    """
    if project is None:
        project = lambda a: a
    if random_start is None:
        random_start = lambda rng: rng.standard_normal(shape)

    n_starts, sweeps = split_budget(budget)
    seeds = child_seeds(seed, n_starts + 1)
    rng_polish = np.random.default_rng(seeds[-1])

    candidates = []
    for s in structured:
        cand = project(np.array(s, dtype=float))
        if cand is not None:
            candidates.append(cand)
    for i in range(n_starts):
        cand = project(random_start(np.random.default_rng(seeds[i])))
        if cand is not None:
            candidates.append(cand)
    if not candidates:
        raise ValueError("no feasible start for the search")

    best_val, best_x = -np.inf, None
    for cand in candidates:
        v = objective(cand)
        if v > best_val:
            best_val, best_x = v, cand
    if best_x is None or not np.isfinite(best_val):
        raise ValueError("all starts were rejected by the objective")

    if sweeps > 0:
        best_val, best_x = _polish(best_x, best_val, objective, project, sweeps, rng_polish)
    return best_val, best_x
