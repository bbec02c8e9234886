"""Good and bad edges of the Cayley graph of F, and the statistics behind them.

The edge e_a(w) joins w and w*x_a^-1.  It is good when the loop formed by the
two combing paths and the edge freely reduces to the empty word.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from . import posets
from .nested_traversal import eta as _eta
from .tree_pair import (
    GENERATOR_PAIRS,
    Tree,
    TreePair,
    apply_generator,
    exposed_carets,
    first_exposed_caret,
    multiply_counted,
    size,
)
from .words import Letter, Word, format_word, free_reduce, inverse
from .tree_pair import to_inf_normal_form


class InternalConsistencyError(AssertionError):
    pass


@lru_cache(maxsize=None)
def eta_cached(w: TreePair) -> Word:
    return _eta(w)


@lru_cache(maxsize=1 << 20)
def act(w: TreePair, letter: Letter) -> TreePair:
    return multiply_counted(w, GENERATOR_PAIRS[letter])[0]


@dataclass(frozen=True)
class EdgeId:
    base: TreePair
    gen: int

    def tail(self) -> TreePair:
        """The endpoint w*x_a^-1."""
        return act(self.base, (self.gen, -1))

    def endpoints(self) -> tuple[TreePair, TreePair]:
        return self.base, self.tail()

    def __str__(self) -> str:
        return f"e{self.gen}({element_literal(self.base)})"


def element_literal(w: TreePair) -> str:
    return format_word(to_inf_normal_form(w).word())


def edge_of_step(u: TreePair, letter: Letter) -> EdgeId:
    """The edge crossed when moving from u by ``letter``."""
    g, e = letter
    if g > 1:
        raise ValueError("only x0, x1 letters label Cayley graph edges")
    return EdgeId(act(u, letter), g) if e > 0 else EdgeId(u, g)


def loop_word(e: EdgeId) -> Word:
    """eta(w) x_a^-1 eta(w x_a^-1)^-1."""
    return eta_cached(e.base) + ((e.gen, -1),) + inverse(eta_cached(e.tail()))


@lru_cache(maxsize=None)
def is_good(e: EdgeId) -> bool:
    return len(free_reduce(loop_word(e))) == 0


def good_direction(e: EdgeId) -> Optional[str]:
    """``forward`` if eta(tail) = eta(base) x_a^-1, ``backward`` if
    eta(base) = eta(tail) x_a, otherwise None (bad edge)."""
    pw, pz = eta_cached(e.base), eta_cached(e.tail())
    if pz == pw + ((e.gen, -1),):
        return "forward"
    if pw == pz + ((e.gen, 1),):
        return "backward"
    return None


@dataclass(frozen=True)
class EdgeStats:
    N: int
    right_carets: int
    restricted: bool
    j: Optional[int]
    n: int
    N_A: Optional[int] = None
    N_D: Optional[int] = None
    s_r: Optional[int] = None
    s_l: Optional[int] = None
    C_r: Optional[int] = None
    C_l: Optional[int] = None
    ddagger: Optional[bool] = None
    A: Tree = None
    B: Tree = None
    C: Tree = None
    D: Tree = None

    def as_record(self) -> dict:
        rec = {
            "N": self.N,
            "right_carets": self.right_carets,
            "restricted": self.restricted,
            "j": self.j,
            "n": self.n,
        }
        if not self.restricted:
            rec.update(
                N_A=self.N_A,
                N_D=self.N_D,
                s_r=self.s_r,
                s_l=self.s_l,
                C_r=self.C_r,
                C_l=self.C_l,
                ddagger=self.ddagger,
            )
        return rec


def last_loaded_right_caret(t: Tree) -> int:
    """Infix number of the right caret with nonempty left subtree and only
    right carets after it; 0 when t is a right spine."""
    lefts = posets.spine_lefts(t)
    s = posets.s_r(t)
    if s == 0:
        return 0
    return sum(size(x) + 1 for x in lefts[:s])


@lru_cache(maxsize=None)
def edge_stats(w: TreePair) -> EdgeStats:
    neg = w.neg
    lefts = posets.spine_lefts(neg)
    j = first_exposed_caret(w.pos) or None
    n = last_loaded_right_caret(neg)
    if len(lefts) < 3:
        return EdgeStats(w.n, len(lefts), True, j, n)
    a = neg[0]
    b = neg[1][0]
    c = neg[1][1][0]
    d = neg[1][1][1]
    n_a = size(a)
    dd = b is None and c is None and (n_a + 2) in exposed_carets(w.pos)
    return EdgeStats(
        N=w.n,
        right_carets=len(lefts),
        restricted=False,
        j=j,
        n=n,
        N_A=n_a,
        N_D=size(d),
        s_r=posets.s_r(d),
        s_l=posets.s_l(a),
        C_r=posets.c_r(d),
        C_l=posets.c_l(a),
        ddagger=dd,
        A=a,
        B=b,
        C=c,
        D=d,
    )


def goodness_certificate(e: EdgeId) -> Optional[str]:
    """First condition T1..T4 of the sufficient criterion for goodness."""
    if e.gen == 0:
        return "T1"
    st = edge_stats(e.base)
    if st.restricted:
        return "T2"
    removed = apply_generator(e.base, (1, -1))[1].removed
    if removed == 0 and posets.is_right_spine(st.D):
        return "T3"
    if removed > 0 and not posets.has_interior(e.base.neg) and st.j == st.N_A + 2:
        return "T4"
    return None


def bad_case(e: EdgeId) -> Optional[str]:
    """Which necessary condition C1..C3 for badness the edge meets, if any."""
    if e.gen == 0:
        if not is_good(e):
            raise InternalConsistencyError(f"{e} is bad although a = 0")
        return None
    st = edge_stats(e.base)
    if st.restricted:
        return None
    if not posets.is_right_spine(st.D):
        return "C1"
    if not st.ddagger:
        return None
    if posets.is_left_spine(st.A):
        if st.j is not None and 2 <= st.j <= st.N_A:
            return "C2"
        return None
    return "C3"
