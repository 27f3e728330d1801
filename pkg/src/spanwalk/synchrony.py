"""Threshold-spreading dynamics and synchrony measures.

A seed set S of active vertices spreads in synchronous rounds: an inactive
vertex activates when at least t of its (in-)neighbors are active, and active
vertices stay active.  The synchrony index i*(S, t) is the first round at
which everything is active, 0 when S is already the whole vertex set, and
infinity when spreading stalls short of it.

For seed size k the sweep measures
  p_k  the probability that a uniform k-subset synchronizes, and
  e_k  the expected reciprocal synchrony index, where 1/i* contributes 0 for
       a stalled seed and 1 for the full-vertex seed,
either exhaustively over all k-subsets (exact rationals) or by seeded
Monte Carlo sampling (floats with standard errors).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterable

from .errors import ExhaustiveBudgetError
from .graph import Graph

EXHAUSTIVE_BUDGET = 2_000_000


def _in_neighbor_masks(g: Graph) -> list[int]:
    masks = [0] * g.n
    for u, v in g.edges:
        masks[v] |= 1 << u
        if not g.directed:
            masks[u] |= 1 << v
    return masks


def _step_mask(masks: list[int], active: int, t: int, n: int) -> int:
    new = active
    for v in range(n):
        if not (active >> v) & 1 and (masks[v] & active).bit_count() >= t:
            new |= 1 << v
    return new


def _check_seed(g: Graph, seed: Iterable[int]) -> int:
    mask = 0
    for v in seed:
        if not 0 <= v < g.n:
            raise ValueError(f"seed vertex {v} out of range for n={g.n}")
        mask |= 1 << v
    return mask


def _check_threshold(t: int) -> None:
    if t < 1:
        raise ValueError("threshold t must be at least 1")


def spread_step(g: Graph, active: Iterable[int], t: int) -> frozenset[int]:
    """One synchronous round: the active set together with every newly activated vertex."""
    _check_threshold(t)
    mask = _step_mask(_in_neighbor_masks(g), _check_seed(g, active), t, g.n)
    return frozenset(v for v in range(g.n) if (mask >> v) & 1)


def fixed_point(g: Graph, seed: Iterable[int], t: int) -> frozenset[int]:
    """The limit of repeated spreading from seed (reached within n rounds)."""
    _check_threshold(t)
    masks = _in_neighbor_masks(g)
    cur = _check_seed(g, seed)
    while True:
        nxt = _step_mask(masks, cur, t, g.n)
        if nxt == cur:
            return frozenset(v for v in range(g.n) if (cur >> v) & 1)
        cur = nxt


def _index_mask(masks: list[int], seed_mask: int, t: int, n: int) -> int | float:
    full = (1 << n) - 1
    if seed_mask == full:
        return 0
    cur = seed_mask
    rounds = 0
    while True:
        nxt = _step_mask(masks, cur, t, n)
        if nxt == full:
            return rounds + 1
        if nxt == cur:
            return math.inf
        cur = nxt
        rounds += 1


def synchrony_index(g: Graph, seed: Iterable[int], t: int) -> int | float:
    """Rounds until full activation: 0 for the full seed, math.inf when spreading stalls."""
    _check_threshold(t)
    return _index_mask(_in_neighbor_masks(g), _check_seed(g, seed), t, g.n)


@dataclass(frozen=True)
class SynchronyOutcome:
    """Result of a p_k / e_k sweep.

    Exhaustive mode fills p_k and e_k with exact Fractions and leaves the
    standard errors None; Monte Carlo mode fills floats plus standard errors.
    i_star_histogram maps each finite synchrony index seen to its count and
    non_synchronizing counts the stalled seeds.
    """

    k: int
    t: int
    mode: str
    samples: int
    p_k: Fraction | float
    e_k: Fraction | float
    p_k_stderr: float | None
    e_k_stderr: float | None
    i_star_histogram: dict[int, int] = field(default_factory=dict)
    non_synchronizing: int = 0


def _contribution(index: int | float) -> Fraction:
    if index == math.inf:
        return Fraction(0)
    if index == 0:
        return Fraction(1)  # the full-vertex seed counts as already synchronized
    return Fraction(1, index)


def measure_synchrony(
    g: Graph,
    t: int,
    k: int,
    mode: str = "exhaustive",
    samples: int | None = None,
    seed64: int | None = None,
    budget: int = EXHAUSTIVE_BUDGET,
) -> SynchronyOutcome:
    """Measure p_k and e_k over k-subsets, exhaustively or by Monte Carlo."""
    _check_threshold(t)
    if not 1 <= k <= g.n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={g.n}")
    if mode == "exhaustive":
        return _measure_exhaustive(g, t, k, budget)
    if mode == "monte-carlo":
        if samples is None or samples < 1:
            raise ValueError("monte-carlo mode needs samples >= 1")
        if seed64 is None:
            raise ValueError("monte-carlo mode needs a seed")
        return _measure_monte_carlo(g, t, k, samples, seed64)
    raise ValueError(f"unknown mode {mode!r}; use 'exhaustive' or 'monte-carlo'")


def measure_p_k(
    g: Graph,
    t: int,
    k: int,
    mode: str = "exhaustive",
    samples: int | None = None,
    seed64: int | None = None,
    budget: int = EXHAUSTIVE_BUDGET,
) -> SynchronyOutcome:
    """Synchronization probability over k-subsets (full outcome, including e_k)."""
    return measure_synchrony(g, t, k, mode, samples, seed64, budget)


def measure_e_k(
    g: Graph,
    t: int,
    k: int,
    mode: str = "exhaustive",
    samples: int | None = None,
    seed64: int | None = None,
    budget: int = EXHAUSTIVE_BUDGET,
) -> SynchronyOutcome:
    """Expected reciprocal synchrony index over k-subsets (full outcome, including p_k)."""
    return measure_synchrony(g, t, k, mode, samples, seed64, budget)


def _measure_exhaustive(g: Graph, t: int, k: int, budget: int) -> SynchronyOutcome:
    total = comb(g.n, k)
    if total > budget:
        raise ExhaustiveBudgetError(
            f"C({g.n}, {k}) = {total} subsets exceeds the budget of {budget}; use monte-carlo mode"
        )
    masks = _in_neighbor_masks(g)
    histogram: dict[int, int] = {}
    stalled = 0
    synchronized = 0
    recip_sum = Fraction(0)
    for subset in combinations(range(g.n), k):
        seed_mask = 0
        for v in subset:
            seed_mask |= 1 << v
        index = _index_mask(masks, seed_mask, t, g.n)
        if index == math.inf:
            stalled += 1
        else:
            synchronized += 1
            histogram[index] = histogram.get(index, 0) + 1
            recip_sum += _contribution(index)
    return SynchronyOutcome(
        k=k,
        t=t,
        mode="exhaustive",
        samples=total,
        p_k=Fraction(synchronized, total),
        e_k=recip_sum / total,
        p_k_stderr=None,
        e_k_stderr=None,
        i_star_histogram=histogram,
        non_synchronizing=stalled,
    )


def _sample_rng(seed64: int, index: int) -> random.Random:
    # Distinct, reproducible stream per sample: key = seed64 || index.
    return random.Random(((seed64 & 0xFFFFFFFFFFFFFFFF) << 64) | (index & 0xFFFFFFFFFFFFFFFF))


def _measure_monte_carlo(g: Graph, t: int, k: int, samples: int, seed64: int) -> SynchronyOutcome:
    masks = _in_neighbor_masks(g)
    n = g.n
    histogram: dict[int, int] = {}
    stalled = 0
    synchronized = 0
    recip_sum = 0.0
    recip_sq_sum = 0.0
    for idx in range(samples):
        rng = _sample_rng(seed64, idx)
        verts = list(range(n))
        for i in range(k):  # partial Fisher-Yates: the first k entries are a uniform k-subset
            j = rng.randrange(i, n)
            verts[i], verts[j] = verts[j], verts[i]
        seed_mask = 0
        for v in verts[:k]:
            seed_mask |= 1 << v
        index = _index_mask(masks, seed_mask, t, n)
        if index == math.inf:
            stalled += 1
            value = 0.0
        else:
            synchronized += 1
            histogram[index] = histogram.get(index, 0) + 1
            value = float(_contribution(index))
        recip_sum += value
        recip_sq_sum += value * value
    p_hat = synchronized / samples
    e_hat = recip_sum / samples
    p_stderr = math.sqrt(p_hat * (1.0 - p_hat) / samples)
    if samples > 1:
        variance = max(0.0, (recip_sq_sum - samples * e_hat * e_hat) / (samples - 1))
        e_stderr = math.sqrt(variance / samples)
    else:
        e_stderr = 0.0
    return SynchronyOutcome(
        k=k,
        t=t,
        mode="monte-carlo",
        samples=samples,
        p_k=p_hat,
        e_k=e_hat,
        p_k_stderr=p_stderr,
        e_k_stderr=e_stderr,
        i_star_histogram=histogram,
        non_synchronizing=stalled,
    )
