"""The nested traversal 1-combing of F and its radial tameness.

Points of the Cayley complex are handled by their carrier cell (a vertex, an
open edge or an open 2-cell), since levels and caret counts are constant on
each.  Combing paths are recorded as the sequence of carriers they visit.

For a bad edge e every interior point is swept through the cell c(e) starting
from some point b of the rest of the boundary of c(e).  Which b depends on the
homotopy used, so tameness is checked for every possible b at once: the family
of traces of e is all traces of b followed by the cell and then e.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Union

from .cells import CellId, cell_geometry, cell_map, edge_less
from .edges import EdgeId, act, edge_of_step, eta_cached, good_direction, is_good
from .levels import cell_level, edge_level, relator_constant
from .tree_pair import TreePair, word_length
from .words import Word

CELL_CONSTANT = relator_constant((10, 14))  # 561


class CombingRecursionError(RuntimeError):
    pass


@dataclass(frozen=True)
class Vertex:
    w: TreePair

    def __str__(self) -> str:
        from .edges import element_literal

        return f"v({element_literal(self.w)})"


@dataclass(frozen=True)
class EdgeInterior:
    e: EdgeId

    def __str__(self) -> str:
        return str(self.e)


@dataclass(frozen=True)
class CellInterior:
    c: CellId

    def __str__(self) -> str:
        return str(self.c)


PointRef = Union[Vertex, EdgeInterior, CellInterior]


@lru_cache(maxsize=None)
def vertex_level(w: TreePair) -> int:
    return word_length(w)


def _carrier_vertices(p: PointRef) -> tuple[TreePair, ...]:
    if isinstance(p, Vertex):
        return (p.w,)
    if isinstance(p, EdgeInterior):
        return p.e.endpoints()
    return cell_geometry(p.c).vertices


@lru_cache(maxsize=None)
def level(p: PointRef) -> Fraction:
    if isinstance(p, Vertex):
        return Fraction(vertex_level(p.w))
    if isinstance(p, EdgeInterior):
        a, b = p.e.endpoints()
        return edge_level(vertex_level(a), vertex_level(b))
    return cell_level([vertex_level(v) for v in cell_geometry(p.c).vertices], CELL_CONSTANT)


@lru_cache(maxsize=None)
def nmax_nmin(p: PointRef) -> tuple[int, int]:
    ns = [v.n for v in _carrier_vertices(p)]
    return max(ns), min(ns)


def comb_vertex(w: TreePair) -> Word:
    return eta_cached(w)


# ---------------------------------------------------------------------------
# combing diagrams


@dataclass(frozen=True)
class CombingDiagram:
    edge: EdgeId
    direction: Optional[str]  # for good edges: forward / backward
    cell: Optional[CellId] = None
    children: tuple["CombingDiagram", ...] = ()

    @property
    def good(self) -> bool:
        return self.cell is None

    def cells(self) -> set[CellId]:
        out: set[CellId] = set()
        stack = [self]
        while stack:
            d = stack.pop()
            if d.cell is not None and d.cell not in out:
                out.add(d.cell)
                stack.extend(d.children)
        return out

    def depth(self) -> int:
        if self.good:
            return 0
        return 1 + max(ch.depth() for ch in self.children)


_diagrams: dict[EdgeId, CombingDiagram] = {}


def boundary_points(c: CellId) -> list[PointRef]:
    """Boundary carriers of c other than its top edge."""
    geom = cell_geometry(c)
    top = EdgeId(c.base, 1)
    pts: list[PointRef] = [Vertex(v) for v in geom.vertices]
    pts += [EdgeInterior(f) for f in geom.edges if f != top]
    return pts


def comb_edge(e: EdgeId, max_depth: int = 10_000) -> CombingDiagram:
    """Combing diagram of e, recursing through the cells of bad edges."""
    in_progress: set[EdgeId] = set()

    def build(f: EdgeId, depth: int) -> CombingDiagram:
        if f in _diagrams:
            return _diagrams[f]
        if depth > max_depth:
            raise CombingRecursionError(f"combing recursion deeper than {max_depth} at {f}")
        if f in in_progress:
            raise CombingRecursionError(f"combing recursion revisits {f}")
        direction = good_direction(f)
        if direction is not None:
            d = CombingDiagram(f, direction)
        else:
            c = cell_map(f)
            in_progress.add(f)
            kids = []
            for g in cell_geometry(c).edges:
                if g == f:
                    continue
                if not is_good(g) and not edge_less(g, f):
                    raise CombingRecursionError(f"boundary edge {g} of {c} is not below {f}")
                kids.append(build(g, depth + 1))
            in_progress.discard(f)
            d = CombingDiagram(f, None, c, tuple(kids))
        _diagrams[f] = d
        return d

    return build(e, 0)


# ---------------------------------------------------------------------------
# traces


def vertex_trace(w: TreePair) -> list[PointRef]:
    """Carriers along the nested traversal path from the identity to w."""
    u = TreePair(None, None)
    out: list[PointRef] = [Vertex(u)]
    for letter in eta_cached(w):
        out.append(EdgeInterior(edge_of_step(u, letter)))
        u = act(u, letter)
        out.append(Vertex(u))
    return out


def trace(e: EdgeId, via: Optional[PointRef] = None) -> list[tuple[PointRef, int]]:
    """Carriers visited by the combing path of a representative point of e.

    For a bad edge the path enters c(e) from ``via`` (default: the bottom edge
    of the cell).
    """
    return [(p, nmax_nmin(p)[0]) for p in _trace_refs(EdgeInterior(e), via)]


def _trace_refs(p: PointRef, via: Optional[PointRef] = None) -> list[PointRef]:
    if isinstance(p, Vertex):
        return vertex_trace(p.w)
    if isinstance(p, CellInterior):
        raise ValueError("traces start at points of the 1-skeleton")
    e = p.e
    d = comb_edge(e)
    if d.good:
        near = e.base if d.direction == "forward" else e.tail()
        return vertex_trace(near) + [p]
    if via is None:
        via = EdgeInterior(cell_geometry(d.cell).bottom_edge)
    return _trace_refs(via) + [CellInterior(d.cell), p]


# ---------------------------------------------------------------------------
# tameness


@dataclass(frozen=True)
class TameSummary:
    """Aggregate over every trace in a point's family.

    ``max_level`` is the largest level visited by any of them, which is all the
    information needed to test points appended after them.
    """

    ok: bool
    max_level: Fraction
    last_nmax: int
    failures: tuple[str, ...] = ()
    cells: int = 0


def _point_failures(p: PointRef) -> list[str]:
    lev = level(p)
    nmax, nmin = nmax_nmin(p)
    out = []
    if not nmin - 2 <= lev < 4 * nmax + 1:
        out.append(f"level {lev} of {p} outside [N_min-2, 4N_max+1) = [{nmin - 2}, {4 * nmax + 1})")
    if isinstance(p, CellInterior) and nmax - nmin > 9:
        out.append(f"caret spread {nmax - nmin} > 9 on {p}")
    return out


def _extend(prefixes: list[TameSummary], p: PointRef, slope: Fraction, intercept: Fraction) -> TameSummary:
    """Summary of {P + [p] : P in the families summarised by ``prefixes``}."""
    lev = level(p)
    nmax = nmax_nmin(p)[0]
    failures: list[str] = []
    top = max(s.max_level for s in prefixes)
    for s in prefixes:
        failures.extend(s.failures)
        if s.last_nmax > nmax:
            failures.append(f"N_max drops from {s.last_nmax} to {nmax} entering {p}")
    if top > slope * lev + intercept:
        failures.append(f"level {top} precedes {p} at level {lev} > rho({lev})")
    failures.extend(_point_failures(p))
    return TameSummary(
        ok=not failures,
        max_level=max(top, lev),
        last_nmax=nmax,
        failures=tuple(failures[:5]),
        cells=max((s.cells for s in prefixes), default=0),
    )


class TameChecker:
    """Memoized tameness summaries for one (slope, intercept)."""

    def __init__(self, slope, intercept):
        self.slope = Fraction(slope)
        self.intercept = Fraction(intercept)
        self._memo: dict[PointRef, TameSummary] = {}

    def vertex(self, w: TreePair) -> TameSummary:
        key = Vertex(w)
        if key in self._memo:
            return self._memo[key]
        refs = vertex_trace(w)
        first = refs[0]
        s = TameSummary(not _point_failures(first), level(first), nmax_nmin(first)[0], tuple(_point_failures(first)))
        for p in refs[1:]:
            s = _extend([s], p, self.slope, self.intercept)
        self._memo[key] = s
        return s

    def edge(self, e: EdgeId) -> TameSummary:
        key = EdgeInterior(e)
        if key in self._memo:
            return self._memo[key]
        d = comb_edge(e)
        if d.good:
            near = e.base if d.direction == "forward" else e.tail()
            s = _extend([self.vertex(near)], key, self.slope, self.intercept)
        else:
            prefixes = [self.point(b) for b in boundary_points(d.cell)]
            inside = _extend(prefixes, CellInterior(d.cell), self.slope, self.intercept)
            s = _extend([inside], key, self.slope, self.intercept)
            s = TameSummary(s.ok, s.max_level, s.last_nmax, s.failures, len(d.cells()))
        self._memo[key] = s
        return s

    def point(self, p: PointRef) -> TameSummary:
        if isinstance(p, Vertex):
            return self.vertex(p.w)
        if isinstance(p, EdgeInterior):
            return self.edge(p.e)
        raise ValueError("only points of the 1-skeleton are combed")


_checkers: dict[tuple[Fraction, Fraction], TameChecker] = {}


def checker(slope, intercept) -> TameChecker:
    key = (Fraction(slope), Fraction(intercept))
    if key not in _checkers:
        _checkers[key] = TameChecker(*key)
    return _checkers[key]


def check_tame(e: EdgeId, slope=4, intercept=45) -> bool:
    """Tameness on every trace of e and of its two endpoints."""
    ch = checker(slope, intercept)
    return ch.edge(e).ok and ch.vertex(e.base).ok and ch.vertex(e.tail()).ok


def tame_record(e: EdgeId, slope=4, intercept=45) -> dict:
    ch = checker(slope, intercept)
    s = ch.edge(e)
    ends = [ch.vertex(e.base), ch.vertex(e.tail())]
    ok = s.ok and all(x.ok for x in ends)
    failures = list(s.failures) + [f for x in ends for f in x.failures]
    return {
        "edge": str(e),
        "good": comb_edge(e).good,
        "cells_used": s.cells,
        "max_level": str(max([s.max_level] + [x.max_level for x in ends])),
        "pass": ok,
        "failures": failures[:5],
    }
