"""Levels of points in a Cayley 2-complex and the radial tameness test.

Levels are exact :class:`fractions.Fraction` values.  A vertex has its word
length as level, an open edge the mean of its endpoints plus 1/4, and an open
2-cell the mean of its boundary vertices plus 1/4 + 1/c.
"""

from __future__ import annotations

from fractions import Fraction
from math import prod
from typing import Iterable, Optional, Sequence

QUARTER = Fraction(1, 4)


def relator_constant(relator_lengths: Iterable[int]) -> int:
    """c = 4 n_1 ... n_k + 1."""
    return 4 * prod(relator_lengths) + 1


def edge_level(a: int | Fraction, b: int | Fraction) -> Fraction:
    return Fraction(a + b, 2) + QUARTER


def cell_level(vertex_levels: Sequence[int], c: int) -> Fraction:
    return Fraction(sum(vertex_levels), len(vertex_levels)) + QUARTER + Fraction(1, c)


def rho(slope: Fraction, intercept: Fraction, q: Fraction) -> Fraction:
    return slope * q + intercept


def first_tameness_violation(
    levels: Sequence[Fraction], slope: Fraction, intercept: Fraction
) -> Optional[tuple[int, int]]:
    """First (s, t), s < t, with lev(s) > rho(q) while lev(t) <= q for some q.

    For nondecreasing rho the worst q is lev(t) itself, so the test over all
    rationals q reduces to lev(s) <= rho(lev(t)) for every earlier s.
    """
    if slope < 0:
        raise ValueError("slope must be nonnegative")
    best = None
    arg = -1
    for t, lev in enumerate(levels):
        if best is not None and best > slope * lev + intercept:
            return arg, t
        if best is None or lev > best:
            best, arg = lev, t
    return None


def grid_violation(
    levels: Sequence[Fraction], slope: Fraction, intercept: Fraction, denominator: int
) -> Optional[tuple[int, int, Fraction]]:
    """The same test restricted to q on the grid (1/denominator)Z up to max level.

    Kept as a cross-check of :func:`first_tameness_violation`; anything it
    finds the exact test finds too.
    """
    if not levels:
        return None
    top = max(levels)
    for t in range(1, len(levels)):
        # smallest grid point q >= lev(t)
        num = -((-levels[t].numerator * denominator) // levels[t].denominator)
        q = Fraction(num, denominator)
        if q > top:
            continue
        bound = slope * q + intercept
        for s in range(t):
            if levels[s] > bound:
                return s, t, q
    return None
