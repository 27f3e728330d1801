"""Alternating closed-walk series for the complement's spanning-tree count.

For a d-regular graph g on n vertices with 2d < n, the logarithm of the
complement's spanning-tree count expands as

    ln t = ln((n - d)^n / n^2) + sum_{k >= 2} (-1)^(k-1) w_k / (k (n - d)^k)

where w_k counts closed k-walks of g.  This module evaluates partial sums and
identifies the exact integer value by bracketing the tail rigorously.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .errors import (
    ConvergenceDomainError,
    DirectedUnsupportedError,
    PrecisionExhaustedError,
    RegularityRequiredError,
)
from .exact import closed_walk_counts, iter_closed_walk_counts
from .graph import Graph, regular_degree

_EVAL_PREC = 96  # working significand bits for partial-sum evaluation
_MIN_PREC = 64
_MAX_TERMS = 50_000


def _checked_parameters(g: Graph) -> tuple[int, int]:
    if g.directed:
        raise DirectedUnsupportedError("the series is defined for undirected graphs")
    d = regular_degree(g)
    if d is None:
        raise RegularityRequiredError("the series needs a regular input graph")
    if 2 * d >= g.n:
        raise ConvergenceDomainError(
            f"guaranteed convergence needs 2d < n; got n={g.n}, d={d}"
        )
    return g.n, d


def _term_fraction(n: int, d: int, w_k: int, k: int) -> Fraction:
    sign = 1 if k % 2 else -1
    return Fraction(sign * w_k, k * (n - d) ** k)


def series_term(n: int, d: int, w_k: int, k: int) -> float:
    """Signed series term (-1)^(k-1) w_k / (k (n-d)^k).

    Formed exactly as a rational and converted to float once, so the result
    carries only the final rounding.
    """
    if k < 2:
        raise ValueError("series terms start at k = 2")
    if not 0 <= d < n:
        raise ValueError(f"need 0 <= d < n, got n={n}, d={d}")
    if w_k < 0:
        raise ValueError("walk counts are nonnegative")
    return float(_term_fraction(n, d, w_k, k))


@dataclass(frozen=True)
class SeriesEvaluation:
    """Partial sums of the log-complexity series.

    partials[0] is the base term alone; partials[j - 1] for j >= 2 includes
    the walk terms through order j.  rounding_bound bounds the accumulated
    floating-point error of every partial sum.
    """

    n: int
    d: int
    base: float
    terms: tuple[float, ...]
    partials: tuple[float, ...]
    rounding_bound: float


def evaluate_series(g: Graph, max_k: int) -> SeriesEvaluation:
    """Evaluate the base term and all partial sums through walk order max_k."""
    if max_k < 1:
        raise ValueError("max_k must be at least 1")
    n, d = _checked_parameters(g)
    walks = closed_walk_counts(g, max_k) if max_k >= 2 else None
    base_fr = Fraction((n - d) ** n, n * n)
    with mpmath.workprec(_EVAL_PREC):
        base_mp = mpmath.log(mpmath.mpf(base_fr.numerator) / base_fr.denominator)
        base = float(base_mp)
        terms: list[float] = []
        partials: list[float] = [base]
        acc = Fraction(0)
        mag = abs(base)
        for k in range(2, max_k + 1):
            fr = _term_fraction(n, d, walks.w(k), k)
            acc += fr
            term = float(fr)
            terms.append(term)
            partials.append(float(base_mp + mpmath.mpf(acc.numerator) / acc.denominator))
            mag += abs(term)
    rounding_bound = mag * 2.0**-50
    return SeriesEvaluation(
        n=n,
        d=d,
        base=base,
        terms=tuple(terms),
        partials=tuple(partials),
        rounding_bound=rounding_bound,
    )


@dataclass(frozen=True)
class IdentificationReport:
    """Outcome of integer identification: the value plus convergence diagnostics."""

    value: int
    terms_used: int
    bracket_low: float
    bracket_high: float
    precision_bits: int

    @property
    def bracket_width(self) -> float:
        return self.bracket_high - self.bracket_low


def _mpf_to_fraction(x) -> Fraction:
    sign, man, exp, _ = x._mpf_
    if man == 0:
        return Fraction(0)
    fr = Fraction(man) * Fraction(2) ** exp
    return -fr if sign else fr


def _bracket(
    c_fr: Fraction, acc: Fraction, tail: Fraction, prec: int
) -> tuple[Fraction, Fraction, float]:
    """Rigorous enclosure of c * exp(acc +- tail), inflated for rounding."""
    with mpmath.workprec(prec):
        c = mpmath.mpf(c_fr.numerator) / c_fr.denominator
        lo_arg = acc - tail
        hi_arg = acc + tail
        eps = mpmath.mpf(2) ** (6 - prec)
        lo = c * mpmath.exp(mpmath.mpf(lo_arg.numerator) / lo_arg.denominator) * (1 - eps)
        hi = c * mpmath.exp(mpmath.mpf(hi_arg.numerator) / hi_arg.denominator) * (1 + eps)
        mid = float(c * mpmath.exp(mpmath.mpf(acc.numerator) / acc.denominator))
        return _mpf_to_fraction(lo), _mpf_to_fraction(hi), mid


def identify_complexity_report(
    g: Graph,
    precision_bits: int | None = None,
    max_precision_bits: int = 4096,
) -> IdentificationReport:
    """Identify the complement's spanning-tree count as an exact integer.

    Terms accumulate exactly as rationals.  Because w_k <= n d^k, the
    discarded tail after order K is at most n q^(K+1) / ((K+1)(1 - q)) in
    absolute value with q = d/(n-d) < 1, which gives a rigorous enclosure of
    the true sum.  Summation stops once two consecutive partial exponentials
    move by less than one half and the enclosure, inflated for rounding,
    contains exactly one integer.  When rounding (not the tail) blocks
    uniqueness, the working precision doubles, up to max_precision_bits.
    """
    n, d = _checked_parameters(g)
    prec = max(precision_bits if precision_bits is not None else _MIN_PREC, _MIN_PREC)
    if prec > max_precision_bits:
        raise ValueError("precision_bits exceeds max_precision_bits")
    c_fr = Fraction((n - d) ** n, n * n)
    q = Fraction(d, n - d)
    walker = iter_closed_walk_counts(g)
    next(walker)  # w_1 is always 0 for simple graphs
    acc = Fraction(0)
    prev_mid: float | None = None
    streak = 0
    for k in range(2, _MAX_TERMS):
        acc += _term_fraction(n, d, next(walker), k)
        tail = Fraction(n, k + 1) * q ** (k + 1) / (1 - q) if d else Fraction(0)
        lo, hi, mid = _bracket(c_fr, acc, tail, prec)
        if prev_mid is not None and abs(mid - prev_mid) < 0.5:
            streak += 1
        else:
            streak = 0
        prev_mid = mid
        if streak < 2:
            continue
        while True:
            low_int = math.ceil(lo)
            high_int = math.floor(hi)
            if low_int == high_int:
                return IdentificationReport(
                    value=low_int,
                    terms_used=k,
                    bracket_low=float(lo),
                    bracket_high=float(hi),
                    precision_bits=prec,
                )
            # Not unique yet: decide whether the tail or rounding is to blame.
            tail_width_small = 2 * tail * hi < Fraction(1, 4)
            if not tail_width_small:
                break  # take more series terms
            if 2 * prec > max_precision_bits:
                raise PrecisionExhaustedError(
                    f"no unique integer in [{float(lo)}, {float(hi)}] at {prec} bits"
                )
            prec *= 2
            lo, hi, mid = _bracket(c_fr, acc, tail, prec)
    raise PrecisionExhaustedError(f"no convergence after {_MAX_TERMS} terms")


def identify_complexity(
    g: Graph,
    precision_bits: int | None = None,
    max_precision_bits: int = 4096,
) -> int:
    """The complement's spanning-tree count as an exact integer (see identify_complexity_report)."""
    return identify_complexity_report(g, precision_bits, max_precision_bits).value
