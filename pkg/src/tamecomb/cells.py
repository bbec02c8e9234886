"""Relator 2-cells attached to bad edges, and the order on bad edges.

Each cell is named by the element w whose edge e1(w) is its top edge.  The
boundary loops below start at w, leave along the left side and come back
through e1(w) with a final x1 letter.  The four x1-letters cross, in order, the
left edge e1(z_l), the bottom edge e1(z_b), the right edge e1(z_r) and the
top edge e1(w).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from . import posets
from .edges import EdgeId, act, edge_of_step, edge_stats, element_literal, is_good
from .tree_pair import (
    GENERATOR_PAIRS,
    IDENTITY,
    TreePair,
    eval_word,
    graft,
    hanging,
    size,
    union,
)
from .words import Word, free_reduce, inverse, parse_word


class CollapseError(ValueError):
    """A bad edge matched none of the collapse cases."""


class OrderDomainError(ValueError):
    pass


BOUNDARY_WORDS: dict[tuple[str, int, int], Word] = {
    ("r", 1, 1): parse_word("x0^-2 x1^-1 x0^2 x1^-1 x0^-1 x1 x0 x1"),
    ("r", 1, -1): parse_word("x0^-2 x1 x0^2 x1^-1 x0^-1 x1^-1 x0 x1"),
    ("l", 1, 1): parse_word("x0^2 x1^-1 x0^-1 x1^-1 x0 x1 x0^-2 x1"),
    ("l", 1, -1): parse_word("x0 x1 x0^-2 x1^-1 x0^2 x1^-1 x0^-1 x1"),
    ("r", 2, 1): parse_word("x0^-3 x1^-1 x0^3 x1^-1 x0^-2 x1 x0^2 x1"),
    ("r", 2, -1): parse_word("x0^-3 x1 x0^3 x1^-1 x0^-2 x1^-1 x0^2 x1"),
    ("l", 2, 1): parse_word("x0^3 x1^-1 x0^-2 x1^-1 x0^2 x1 x0^-3 x1"),
    ("l", 2, -1): parse_word("x0^2 x1 x0^-3 x1^-1 x0^3 x1^-1 x0^-2 x1"),
}

# the two defining relators [x0 x1^-1, x0^-1 x1 x0] and [x0 x1^-1, x0^-2 x1 x0^2]
RELATORS: tuple[Word, ...] = (
    parse_word("x1 x0^-1 x0^-1 x1^-1 x0 x0 x1^-1 x0^-1 x1 x0"),
    parse_word("x1 x0^-1 x0^-2 x1^-1 x0^2 x0 x1^-1 x0^-2 x1 x0^2"),
)


@dataclass(frozen=True)
class CellId:
    side: str  # "r" or "l"
    sub: int  # 1 or 2
    exp: int  # +1 or -1
    base: TreePair

    @property
    def label(self) -> str:
        return f"R{self.side}{self.sub}" + ("^-1" if self.exp < 0 else "")

    def __str__(self) -> str:
        return f"{self.label}({element_literal(self.base)})"

    @property
    def word(self) -> Word:
        return BOUNDARY_WORDS[(self.side, self.sub, self.exp)]


@dataclass(frozen=True)
class CellGeometry:
    cell: CellId
    boundary_word: Word
    vertices: tuple[TreePair, ...]  # vertices[i] is reached after i letters
    edges: tuple[EdgeId, ...]  # edges[i] is crossed by letter i
    z_l: TreePair
    z_b: TreePair
    z_r: TreePair
    e1_edges: tuple[EdgeId, ...]  # left, bottom, right, top
    bottom_prefix: Word  # word from w to z_b

    @property
    def bottom_edge(self) -> EdgeId:
        return self.e1_edges[1]


@lru_cache(maxsize=None)
def cell_geometry(c: CellId) -> CellGeometry:
    word = c.word
    vertices = [c.base]
    edges = []
    u = c.base
    x1_positions = []
    for i, letter in enumerate(word):
        edges.append(edge_of_step(u, letter))
        if letter[0] == 1:
            x1_positions.append(i)
        u = act(u, letter)
        vertices.append(u)
    if vertices[-1] != c.base:
        raise AssertionError(f"boundary of {c} does not close up")
    e1 = tuple(edges[i] for i in x1_positions)
    if e1[3] != EdgeId(c.base, 1):
        raise AssertionError(f"top edge of {c} is not e1(w)")
    bases = [e.base for e in e1]
    bottom_prefix = word[: x1_positions[1] + 1] if word[x1_positions[1]] == (1, 1) else word[: x1_positions[1]]
    return CellGeometry(
        cell=c,
        boundary_word=word,
        vertices=tuple(vertices[:-1]),
        edges=tuple(edges),
        z_l=bases[0],
        z_b=bases[1],
        z_r=bases[2],
        e1_edges=e1,
        bottom_prefix=bottom_prefix,
    )


def multiply_unreduced(u: TreePair, v: TreePair) -> tuple[TreePair, int]:
    """u*v before reduction, with the number of carets added to u."""
    common = union(u.neg, v.pos)
    added = size(common) - size(u.neg)
    pos = graft(u.pos, hanging(u.neg, common)) if added else u.pos
    neg = graft(v.neg, hanging(v.pos, common))
    return TreePair(neg, pos), added


def bottom_rotation_ok(geom: CellGeometry) -> bool:
    """z_b = w*g is reached by one rotation of T_-(w) with T_+(w) untouched."""
    w = geom.cell.base
    g = eval_word(geom.bottom_prefix)
    prod, added = multiply_unreduced(w, g)
    return added == 0 and prod.pos == w.pos and posets.one_rotation_apart(w.neg, prod.neg)


def is_cyclic_relator(word: Word) -> bool:
    n = len(word)
    for r in RELATORS:
        for cand in (r, inverse(r)):
            if len(cand) != n:
                continue
            for shift in range(n):
                if cand[shift:] + cand[:shift] == tuple(word):
                    return True
    return False


# ---------------------------------------------------------------------------
# the collapse map


def cell_map(e: EdgeId) -> CellId:
    if e.gen != 1:
        raise CollapseError(f"{e} is not an e1 edge")
    w = e.base
    st = edge_stats(w)
    if st.restricted:
        raise CollapseError(f"{e}: negative tree has fewer than 3 right carets")
    if st.s_r > 0:
        d = st.D
        if st.s_r % 2 == 1:
            return CellId("r", 1, 1 if d[0] is None else -1, w)
        return CellId("r", 2, 1 if d[1][0] is None else -1, w)
    k, j, a = st.N_A, st.j, st.A
    if st.ddagger and st.s_l in (0, 1) and k >= 2 and j is not None:
        if 2 <= j <= k - 1 and a == posets.make_b(j, k):
            return CellId("l", 2, 1, w)
        if j == k and a == posets.make_b(k - 1, k):
            return CellId("l", 1, 1, w)
        if 2 <= j <= k - 2 and any(a == posets.make_b(i, k) for i in range(j + 1, k)):
            return CellId("l", 1, 1, w)
    if st.ddagger and st.s_l > 0:
        if st.s_l % 2 == 1:
            return CellId("l", 1, 1 if a[1] is None else -1, w)
        return CellId("l", 2, 1 if a[0][1] is None else -1, w)
    raise CollapseError(f"{e} matches no collapse case")


# ---------------------------------------------------------------------------
# the order on bad edges


def _require_bad(e: EdgeId) -> None:
    if e.gen != 1 or is_good(e):
        raise OrderDomainError(f"{e} is not a bad e1 edge")


def edge_less(z: EdgeId, w: EdgeId, strict_j: bool = False) -> bool:
    """One generating comparison e1(z) < e1(w).

    Comparison (3b) asks for j = j(w) = j(z) <= N_A(w).  Since the first
    exposed caret of T_+ can sit at N_A+1 or N_A+2, by default those indices
    fall back to the plain left order, the same way j in {1, k-1, k} does.
    ``strict_j=True`` keeps the bound and compares nothing in that case.
    """
    _require_bad(z)
    _require_bad(w)
    sz, sw = edge_stats(z.base), edge_stats(w.base)
    if sz.N < sw.N:
        return True
    if sz.N != sw.N or z.base.pos != w.base.pos:
        return False
    if sz.s_r > 0 and sw.s_r > 0:
        if sz.N_D < sw.N_D and sz.n == sw.n:
            return True
        return sz.N_D == sw.N_D and sz.n <= sw.n and posets.less_r(sz.D, sw.D)
    if sz.s_r == 0 and sw.s_r == 0:
        if sz.N_A < sw.N_A and sz.n <= sw.n:
            return True
        if sz.N_A == sw.N_A and sz.n == sw.n:
            j = sw.j
            if j is not None and j == sz.j:
                if 1 <= j <= sw.N_A:
                    return posets.less_l_j(j, sz.A, sw.A)
                if not strict_j:
                    return posets.less_l(sz.A, sw.A)
        return False
    if sz.s_r == 0 and sw.s_r in (1, 2) and sz.n < sw.n:
        return True
    return sz.s_r == 1 and sw.s_r == 0 and sz.n == sw.n and sz.N_A < sw.N_A


@dataclass(frozen=True)
class BoundaryReport:
    edge: EdgeId
    cell: Optional[CellId]
    ok: bool
    failures: tuple[str, ...]
    max_boundary_n: int
    j_fallback_edges: tuple[EdgeId, ...] = ()

    def lines(self) -> list[str]:
        head = f"{'PASS' if self.ok else 'FAIL'} {self.edge} -> {self.cell}"
        return [head] + [f"  {f}" for f in self.failures]


def verify_boundary(e: EdgeId) -> BoundaryReport:
    failures = []
    try:
        c = cell_map(e)
    except CollapseError as exc:
        return BoundaryReport(e, None, False, (str(exc),), -1)
    geom = cell_geometry(c)
    n_w = e.base.n
    max_n = max(v.n for v in geom.vertices)
    for v in geom.vertices:
        if v.n > n_w:
            failures.append(f"boundary vertex {element_literal(v)} has N={v.n} > {n_w}")
    fallback = []
    for f in geom.e1_edges[:3]:
        if is_good(f):
            continue
        if not edge_less(f, e):
            failures.append(f"boundary edge {f} is bad and not below {e}")
        elif not edge_less(f, e, strict_j=True):
            fallback.append(f)
    if not bottom_rotation_ok(geom):
        failures.append("bottom vertex is not one rotation away")
    if free_reduce(geom.boundary_word) == () or not is_cyclic_relator(geom.boundary_word):
        failures.append("boundary word is not a relator")
    return BoundaryReport(e, c, not failures, tuple(failures), max_n, tuple(fallback))
