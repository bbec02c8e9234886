"""The solvable Baumslag-Solitar groups BS(1,p) = <a, t | t a t^-1 = a^p>.

Elements are canonical triples (m, j, s) standing for t^-m a^j t^s.  Under the
isomorphism with Z[1/p] x| Z, t^-m a^j t^s is the pair (j p^-m, s - m) and
(x, k)(y, l) = (x + p^k y, k + l).

Word lengths come from the digit expansions of geodesic words: a geodesic
spells j in a signed base-p expansion whose digit count fixes how many t and
t^-1 letters are spent.  A carry DP over that expansion gives the exact length.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Optional, Sequence, Union

from .cayley import GroupInterface
from .levels import cell_level, edge_level, relator_constant

A, A_INV, T, T_INV = ("a", 1), ("a", -1), ("t", 1), ("t", -1)
BS_LETTERS = (A, A_INV, T, T_INV)

BsWord = tuple  # of (name, +-1)


class BsDomainError(ValueError):
    pass


class BsSyntaxError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class BsElement:
    m: int
    j: int
    s: int

    def __str__(self) -> str:
        return format_bs_word(normal_form_word(self))


IDENTITY_BS = BsElement(0, 0, 0)


def half(p: int) -> int:
    return p // 2


def _check_p(p: int) -> None:
    if p < 2:
        raise BsDomainError(f"p must be at least 2, got {p}")


def normalize(m: int, j: int, s: int, p: int) -> BsElement:
    """Strip common t^-1 ... t pairs: (m, j, s) -> (m-1, j/p, s-1) while p | j."""
    _check_p(p)
    if m < 0 or s < 0:
        raise BsDomainError(f"normal form needs m, s >= 0, got m={m}, s={s}")
    while m > 0 and s > 0 and j % p == 0:
        m, j, s = m - 1, j // p, s - 1
    return BsElement(m, j, s)


def to_affine(g: BsElement, p: int) -> tuple[Fraction, int]:
    return Fraction(g.j, p**g.m), g.s - g.m


def _p_valuation_of_denominator(x: Fraction, p: int) -> int:
    """Least e >= 0 with x * p^e an integer."""
    d = x.denominator
    e, pe = 0, 1
    while pe % d:
        e += 1
        pe *= p
        if e > 4 * d.bit_length() + 4:
            raise BsDomainError(f"{x} is not in Z[1/{p}]")
    return e


def from_affine(x: Fraction, k: int, p: int) -> BsElement:
    m = max(0, -k, _p_valuation_of_denominator(x, p))
    j = x * p**m
    assert j.denominator == 1
    return BsElement(m, int(j), k + m)


def bs_multiply(u: BsElement, v: BsElement, p: int) -> BsElement:
    x, k = to_affine(u, p)
    y, l = to_affine(v, p)
    return from_affine(x + Fraction(p) ** k * y, k + l, p)


def bs_invert(u: BsElement, p: int) -> BsElement:
    # t^-m a^j t^s inverts to t^-s a^-j t^m
    return normalize(u.s, -u.j, u.m, p)


def act(g: BsElement, letter, p: int) -> BsElement:
    """g times one letter, in integer arithmetic."""
    name, e = letter
    m, j, s = g.m, g.j, g.s
    if name == "a":
        return BsElement(m, j + e * p**s, s)
    if e > 0:
        if s == 0 and m > 0 and j % p == 0:
            return BsElement(m - 1, j // p, 0)
        return BsElement(m, j, s + 1)
    if s > 0:
        return BsElement(m, j, s - 1)
    return BsElement(m + 1, p * j, 0)


def bs_eval_word(word: Sequence, p: int) -> BsElement:
    g = IDENTITY_BS
    for letter in word:
        g = act(g, letter, p)
    return g


def parse_bs_word(text: str) -> BsWord:
    """``"t^-2 a^5 t"`` -> letters; ``e`` or empty is the identity."""
    out = []
    for pos, token in _tokens(text):
        if token in ("e", "1", "eps"):
            continue
        name, _, power = token.partition("^")
        if name not in ("a", "t"):
            raise BsSyntaxError(f"bad generator {token!r} at column {pos}")
        try:
            n = int(power) if power else 1
        except ValueError:
            raise BsSyntaxError(f"bad exponent in {token!r} at column {pos}") from None
        out.extend([(name, 1 if n > 0 else -1)] * abs(n))
    return tuple(out)


def _tokens(text: str) -> Iterator[tuple[int, str]]:
    i = 0
    for token in text.split():
        i = text.index(token, i)
        yield i + 1, token
        i += len(token)


def format_bs_word(word: Sequence) -> str:
    if not word:
        return "e"
    parts = []
    i = 0
    while i < len(word):
        run = 1
        while i + run < len(word) and word[i + run] == word[i]:
            run += 1
        name, e = word[i]
        n = e * run
        parts.append(name if n == 1 else f"{name}^{n}")
        i += run
    return " ".join(parts)


def normal_form_word(g: BsElement) -> BsWord:
    j = g.j
    return (T_INV,) * g.m + ((A if j > 0 else A_INV),) * abs(j) + (T,) * g.s


def pi_r(g: BsElement, p: int) -> Fraction:
    return Fraction(g.j, p**g.m)


def bs_group(p: int) -> GroupInterface:
    _check_p(p)
    return GroupInterface(
        name=f"BS(1,{p})",
        identity=IDENTITY_BS,
        generators=BS_LETTERS,
        positive_generators=(A, T),
        act=lambda g, letter: act(g, letter, p),
        key=lambda g: (g.m, g.j, g.s),
        letter_name=lambda letter: format_bs_word((letter,)),
    )


# ---------------------------------------------------------------------------
# geodesics


@dataclass(frozen=True)
class GeodesicForm:
    """A geodesic of shape (1) t^k a^{i_k} t^-1 ... t^-1 a^{i_-m} t^s or
    (2) t^-m a^{i_-m} t ... t a^{i_k} t^{s-m-k}.

    ``digits[l]`` is i_{l-m}, so ``j = sum(digits[l] * p**l)``.
    """

    form: int
    digits: tuple[int, ...]
    m: int
    s: int
    k: int
    p: int

    @property
    def word(self) -> BsWord:
        d = self.digits
        top = len(d) - 1
        out: list = []
        if self.form == 1:
            out += _power("t", self.k)
            out += _power("a", d[top])
            for l in range(top - 1, -1, -1):
                out.append(T_INV)
                out += _power("a", d[l])
            out += _power("t", self.s)
        else:
            out += _power("t", -self.m)
            out += _power("a", d[0])
            for l in range(1, top + 1):
                out.append(T)
                out += _power("a", d[l])
            out += _power("t", self.s - top)
        return tuple(out)

    @property
    def length(self) -> int:
        return len(self.word)

    def meets_digit_bounds(self) -> bool:
        h = half(self.p)
        d = self.digits
        if any(abs(x) > h for x in d[:-1]) or abs(d[-1]) > h + 1:
            return False
        if d[-1] != 0:
            return True
        if self.form == 1:
            return self.k == -self.m and self.s == 0
        return self.k == -self.m == 0


def _power(name: str, n: int) -> list:
    return [(name, 1 if n > 0 else -1)] * abs(n)


def _t_cost(form: int, K: int, m: int, s: int) -> int:
    if form == 1:
        return abs(K - m) + K + s
    return m + K + abs(s - K)


def _forms(m: int, s: int) -> tuple[int, ...]:
    out = []
    if m > 0 and s <= m:
        out.append(1)
    if m <= s:
        out.append(2)
    return tuple(out)


def _digit_options(c: int, p: int) -> list[int]:
    """Digits d = c mod p with |d| <= h: the residue, or the residue minus p."""
    h = half(p)
    r = c % p
    return [d for d in (r, r - p) if -h <= d <= h]


def _expansions(j: int, p: int, k_max: int) -> dict[int, list[tuple[int, tuple[int, ...]]]]:
    """For every top position K <= k_max, the cheapest digit strings of j.

    Lower digits stay in [-h, h]; the top digit is whatever carry is left.
    States are carries, so different carries keep separate candidates.  Each
    K maps to [(digit cost, digits)], one entry per final carry.
    """
    states = {j: (0, ())}
    out = {}
    for K in range(k_max + 1):
        out[K] = [(cost + abs(c), digits + (c,)) for c, (cost, digits) in states.items()]
        nxt: dict[int, tuple[int, tuple[int, ...]]] = {}
        for c, (cost, digits) in states.items():
            for d in _digit_options(c, p):
                c2 = (c - d) // p
                cand = (cost + abs(d), digits + (d,))
                if c2 not in nxt or _better(cand, nxt[c2]):
                    nxt[c2] = cand
        states = nxt
    return out


def _better(a, b) -> bool:
    # tie-break: when a carry is reached two ways, keep the lexicographically
    # smaller digit magnitudes read from the top down
    if a[0] != b[0]:
        return a[0] < b[0]
    return tuple(abs(x) for x in reversed(a[1])) < tuple(abs(x) for x in reversed(b[1]))


def _base_p_len(j: int, p: int) -> int:
    n, j = 0, abs(j)
    while j:
        j //= p
        n += 1
    return n


def geodesic_word(g: BsElement, p: int) -> GeodesicForm:
    if p < 3:
        raise BsDomainError(f"geodesic forms need p >= 3, got {p}")
    m, j, s = g.m, g.j, g.s
    k_max = _base_p_len(j, p) + 1
    best = None
    for K, cands in _expansions(j, p, k_max).items():
        for form in _forms(m, s):
            for cost, digits in cands:
                gf = GeodesicForm(form, digits, m, s, K - m, p)
                total = _t_cost(form, K, m, s) + cost
                rank = (total, not gf.meets_digit_bounds(), K, abs(digits[-1]), form)
                if best is None or rank < best[0]:
                    best = (rank, gf)
    return best[1]


@lru_cache(maxsize=1 << 20)
def _length(m: int, j: int, s: int, p: int) -> int:
    k_max = _base_p_len(j, p) + 1
    best = None
    for K, cands in _expansions(j, p, k_max).items():
        cost = min(c for c, _ in cands)
        for form in _forms(m, s):
            total = _t_cost(form, K, m, s) + cost
            if best is None or total < best:
                best = total
    return best


def bs_length(g: BsElement, p: int) -> int:
    if p < 3:
        raise BsDomainError(f"geodesic forms need p >= 3, got {p}")
    return _length(g.m, g.j, g.s, p)


# ---------------------------------------------------------------------------
# the tree T, nadirs and DHU paths


def tkey(g: BsElement, p: int) -> tuple[int, int, int]:
    """The vertex of T under g: the <a>-orbit g<a>."""
    return (g.m, g.j % p**g.s, g.s)


def nadir(g: BsElement) -> tuple[int, int, int]:
    """T-vertex of t^-m, where the tree geodesic from the identity turns upward."""
    return (g.m, 0, 0)


@dataclass(frozen=True)
class DhuPath:
    down: int
    horizontal: int
    up: int

    @property
    def word(self) -> BsWord:
        return tuple(_power("t", -self.down) + _power("a", self.horizontal) + _power("t", self.up))


def dhu_path(g: BsElement) -> DhuPath:
    return DhuPath(g.m, g.j, g.s)


# ---------------------------------------------------------------------------
# points of the Cayley complex


@dataclass(frozen=True)
class BsVertex:
    g: BsElement

    def __str__(self) -> str:
        return f"v({self.g})"


@dataclass(frozen=True)
class BsAEdge:
    """Open a-edge from g to g a."""

    g: BsElement

    def __str__(self) -> str:
        return f"ea({self.g})"


@dataclass(frozen=True)
class BsTEdge:
    """Open t-edge from g up to g t."""

    g: BsElement

    def __str__(self) -> str:
        return f"et({self.g})"


@dataclass(frozen=True)
class BsCell:
    """Open 2-cell whose bottom-left corner is b: bottom b..b a^p, top bt..bta."""

    b: BsElement

    def __str__(self) -> str:
        return f"cell({self.b})"


BsPoint = Union[BsVertex, BsAEdge, BsTEdge, BsCell]


class BsComplex:
    """Levels, associated vertices and DHU traces for one p."""

    def __init__(self, p: int):
        if p < 3:
            raise BsDomainError(f"p must be at least 3, got {p}")
        self.p = p
        self.h = half(p)
        self.c = relator_constant((p + 3,))
        self._levels: dict = {}

    def act(self, g, letter):
        return act(g, letter, self.p)

    def length(self, g: BsElement) -> int:
        return _length(g.m, g.j, g.s, self.p)

    def pi_r(self, g: BsElement) -> Fraction:
        return pi_r(g, self.p)

    def vertices(self, x: BsPoint) -> tuple[BsElement, ...]:
        if isinstance(x, BsVertex):
            return (x.g,)
        if isinstance(x, BsAEdge):
            return (x.g, self.act(x.g, A))
        if isinstance(x, BsTEdge):
            return (x.g, self.act(x.g, T))
        out = [x.b]
        for _ in range(self.p):
            out.append(self.act(out[-1], A))
        top = self.act(x.b, T)
        return tuple(out) + (top, self.act(top, A))

    def level(self, x: BsPoint) -> Fraction:
        lev = self._levels.get(x)
        if lev is None:
            ls = [self.length(v) for v in self.vertices(x)]
            if isinstance(x, BsVertex):
                lev = Fraction(ls[0])
            elif isinstance(x, BsCell):
                lev = cell_level(ls, self.c)
            else:
                lev = edge_level(*ls)
            self._levels[x] = lev
        return lev

    def associated_vertex(self, x: BsPoint) -> BsElement:
        """Vertex of x's carrier: the initial vertex of a t-edge, the endpoint
        of an a-edge or the bottom corner of a cell farthest from 0 under
        pi_R (ties go to the left one)."""
        if isinstance(x, BsVertex):
            return x.g
        if isinstance(x, BsTEdge):
            return x.g
        if isinstance(x, BsAEdge):
            left, right = x.g, self.act(x.g, A)
        else:
            left = x.b
            right = self.vertices(x)[self.p]
        return right if abs(self.pi_r(right)) > abs(self.pi_r(left)) else left

    # -- DHU traces -------------------------------------------------------

    def down_points(self, m: int) -> list[BsPoint]:
        g = IDENTITY_BS
        out: list[BsPoint] = [BsVertex(g)]
        for _ in range(m):
            g = self.act(g, T_INV)
            out += [BsTEdge(g), BsVertex(g)]
        return out

    def row_point(self, m: int, pos: int) -> BsPoint:
        """Point of the nadir row t^-m <a> at half-step position ``pos``:
        vertex t^-m a^(pos/2) for even pos, else the a-edge from
        t^-m a^((pos-1)/2)."""
        if pos % 2 == 0:
            return BsVertex(BsElement(m, pos // 2, 0))
        return BsAEdge(BsElement(m, (pos - 1) // 2, 0))

    def up_points(self, u: BsElement, P: int) -> list[BsPoint]:
        """Carriers above the nadir row for the point of the a-row through u at
        pi_R = pi_R(u) + (P/2) p^-m, 0 <= P < 2 p^s."""
        p = self.p
        m, j, s = u.m, u.j, u.s
        out: list[BsPoint] = []
        for row in range(s):
            step = p ** (row + 1)  # spacing of t-edges from this row, in units R
            if P % (2 * step) == 0:
                out.append(BsTEdge(normalize(m, j + p**row * (P // (2 * p**row)), row, p)))
            else:
                fl = P // (2 * step)
                out.append(BsCell(normalize(m, j + step * fl, row, p)))
            up = row + 1
            width = p**up
            if P % (2 * width) == 0:
                out.append(BsVertex(normalize(m, j + width * (P // (2 * width)), up, p)))
            else:
                out.append(BsAEdge(normalize(m, j + width * (P // (2 * width)), up, p)))
        return out

    def dhu_trace(self, u: BsElement, P: int = 0) -> list[tuple[str, BsPoint]]:
        """Phase-tagged carriers of the DHU path of a vertex (P = 0) or of an
        interior point of the a-edge from u (0 < P < 2 p^s)."""
        m = u.m
        pts = [("down", x) for x in self.down_points(m)]
        end = 2 * u.j + P
        step = 1 if end >= 0 else -1
        for pos in range(step, end + step, step):
            pts.append(("horizontal", self.row_point(m, pos)))
        pts += [("up", x) for x in self.up_points(u, P)] if u.s else []
        return pts

    def is_ray_t_edge(self, u: BsElement) -> bool:
        return u.s == 0 and u.m >= 1 and u.j % self.p == 0

    def t_edge_trace(self, u: BsElement) -> list[tuple[str, BsPoint]]:
        if not self.is_ray_t_edge(u):
            return self.dhu_trace(u) + [("up", BsTEdge(u))]
        m, p = u.m, self.p
        pts = [("down", x) for x in self.down_points(m - 1)]
        pts.append(("down", BsTEdge(BsElement(m, 0, 0))))
        n_end = u.j // p
        step = 1 if n_end >= 0 else -1
        for n in range(step, n_end + step, step):
            left = min(n, n - step)
            pts.append(("horizontal", BsCell(BsElement(m, p * left, 0))))
            pts.append(("horizontal", BsTEdge(BsElement(m, p * n, 0))))
        return pts


# ---------------------------------------------------------------------------
# the two length/exponent bounds


def _exceeds_power(j: int, p: int, e: Fraction) -> bool:
    """|j| > p^e exactly."""
    e = Fraction(e)
    a = abs(j)
    if a == 0:
        return False
    num, den = e.numerator, e.denominator
    lhs = a**den * (p ** (-num) if num < 0 else 1)
    rhs = p**num if num > 0 else 1
    return lhs > rhs


def bound_checks(n: int, B, E, g: BsElement, p: int) -> dict:
    """Evaluate both length/exponent implications on one instance.

    Each entry is ``holds``, ``vacuous`` (premise false), ``fails`` or
    ``not-applicable`` (hypotheses on m, s, B, E not met).
    """
    h = half(p)
    B, E = Fraction(B), Fraction(E)
    in_range = 0 <= g.m < n and 0 <= g.s < n
    l = bs_length(g, p)
    out = {}
    if not (in_range and h + 2 < B):
        out["length_forces_exponent"] = "not-applicable"
    elif not l > B * n:
        out["length_forces_exponent"] = "vacuous"
    else:
        ok = _exceeds_power(g.j, p, (B / (h + 2) - 2) * n)
        out["length_forces_exponent"] = "holds" if ok else "fails"
    if not (in_range and 1 < E):
        out["exponent_forces_length"] = "not-applicable"
    elif not _exceeds_power(g.j, p, E * n):
        out["exponent_forces_length"] = "vacuous"
    else:
        out["exponent_forces_length"] = "holds" if l > (E - 1) * n else "fails"
    return out


def bound_checks_ok(rec: dict) -> bool:
    return all(v != "fails" for v in rec.values())


# ---------------------------------------------------------------------------
# tameness of the DHU combing


def tame_constants(p: int) -> tuple[int, int]:
    h = half(p)
    B = 4 * (h + 2)
    return B, (h + 4) * (B + 1)


@dataclass
class _Scan:
    """Running state of a left-to-right pass over one trace."""

    max_level: Optional[Fraction] = None
    failures: list = field(default_factory=list)
    last_down: Optional[Fraction] = None
    last_abs_r: Optional[Fraction] = None
    last_up_s: Optional[int] = None

    def copy(self) -> "_Scan":
        return _Scan(self.max_level, list(self.failures), self.last_down, self.last_abs_r, self.last_up_s)


class BsTameChecker:
    """Tameness of DHU traces, with the structural facts behind each case."""

    def __init__(self, p: int, slope=None, intercept=None):
        self.cx = BsComplex(p)
        B, C = tame_constants(p)
        self.slope = Fraction(B if slope is None else slope)
        self.intercept = Fraction(C if intercept is None else intercept)
        self._rows: dict = {}
        self._bounds: dict = {}

    @property
    def p(self) -> int:
        return self.cx.p

    def _length_bounds_ok(self, g: BsElement) -> bool:
        if g in self._bounds:
            return self._bounds[g]
        p, B = self.p, tame_constants(self.p)[0]
        l = self.cx.length(g)
        # past these n both premises are false: l <= B n and |j| <= p^(2n)
        top = max((l - 1) // B, _base_p_len(g.j, p) // 2)
        ok = all(bound_checks_ok(bound_checks(n, B, 2, g, p)) for n in range(max(g.m, g.s) + 1, top + 1))
        self._bounds[g] = ok
        return ok

    def _feed(self, st: _Scan, phase: str, x: BsPoint, nadir_key) -> None:
        cx = self.cx
        lev = cx.level(x)
        if st.max_level is not None and st.max_level > self.slope * lev + self.intercept:
            st.failures.append(f"level {st.max_level} before {x} at level {lev}")
        if st.max_level is None or lev > st.max_level:
            st.max_level = lev
        v = cx.associated_vertex(x)
        if abs(cx.length(v) - lev) >= cx.h + 3:
            st.failures.append(f"associated vertex {v} of {x} is {abs(cx.length(v) - lev)} levels away")
        if phase == "down":
            if st.last_down is not None and lev < st.last_down:
                st.failures.append(f"level drops on the downward ray at {x}")
            st.last_down = lev
            return
        if nadir_key is not None and nadir(v) != nadir_key:
            st.failures.append(f"associated vertex {v} of {x} has nadir {nadir(v)} != {nadir_key}")
        r = abs(cx.pi_r(v))
        if st.last_abs_r is not None and r < st.last_abs_r:
            st.failures.append(f"|pi_R| of associated vertices drops at {x}")
        st.last_abs_r = r
        if phase == "up":
            if st.last_up_s is not None and v.s < st.last_up_s:
                st.failures.append(f"associated vertices move down at {x}")
            st.last_up_s = v.s
        if not self._length_bounds_ok(v):
            st.failures.append(f"length bounds fail at {v}")

    def _row_state(self, m: int, pos: int) -> _Scan:
        """State after the down ray to t^-m and the nadir row out to ``pos``.

        Rows are extended lazily and shared by every trace through them.
        """
        sign = 1 if pos >= 0 else -1
        key = (m, sign)
        row = self._rows.get(key)
        if row is None:
            st = _Scan()
            for x in self.cx.down_points(m):
                self._feed(st, "down", x, None)
            row = [st.copy()]
            self._rows[key] = row
        st = row[-1].copy()
        while len(row) <= abs(pos):
            q = sign * len(row)
            self._feed(st, "horizontal", self.cx.row_point(m, q), (m, 0, 0))
            row.append(st.copy())
        return row[abs(pos)].copy()

    def _finish(self, st: _Scan, tagged: list) -> _Scan:
        for phase, x, nk in tagged:
            self._feed(st, phase, x, nk)
        return st

    def vertex_scan(self, u: BsElement, P: int = 0) -> _Scan:
        st = self._row_state(u.m, 2 * u.j + P)
        if u.s:
            st = self._finish(st, [("up", x, nadir(u)) for x in self.cx.up_points(u, P)])
        return st

    def t_edge_scan(self, u: BsElement) -> _Scan:
        cx = self.cx
        if not cx.is_ray_t_edge(u):
            st = self.vertex_scan(u)
            return self._finish(st, [("up", BsTEdge(u), nadir(u))])
        st = _Scan()
        for phase, x in cx.t_edge_trace(u):
            # the horizontal part runs at interior height; the associated
            # vertices sit on the row of t^-m
            self._feed(st, phase, x, (u.m, 0, 0) if phase == "horizontal" else None)
        return st

    def a_edge_samples(self, u: BsElement, rng: random.Random, n_random: int, exhaustive: int) -> list[int]:
        """Half-step offsets P in (0, 2 p^s) of sampled interior points."""
        if u.s == 0:
            return [1]
        top = 2 * self.p**u.s
        if top - 1 <= exhaustive:
            return list(range(1, top))
        picks = {1, 2, 3, top - 1, top - 2, top - 3, top // 2 - 1, top // 2, top // 2 + 1}
        for row in range(1, u.s):
            w = 2 * self.p**row
            picks |= {w - 1, w, w + 1, top - w - 1, top - w, top - w + 1}
        picks |= {rng.randrange(1, top) for _ in range(n_random)}
        return sorted(x for x in picks if 0 < x < top)

    def edge_record(self, kind: str, u: BsElement, rng: random.Random, n_random: int = 8, exhaustive: int = 64) -> dict:
        if kind == "t":
            scans = [self.t_edge_scan(u)]
            samples = 1
        else:
            ps = self.a_edge_samples(u, rng, n_random, exhaustive)
            scans = [self.vertex_scan(u, P) for P in ps]
            samples = len(ps)
        ends = [u, self.cx.act(u, A if kind == "a" else T)]
        scans += [self.vertex_scan(g) for g in ends]
        failures = [f for s in scans for f in s.failures]
        return {
            "edge": f"e{kind}({u})",
            "samples": samples,
            "max_level": str(max(s.max_level for s in scans)),
            "pass": not failures,
            "failures": failures[:5],
        }


def check_tame_bs(
    p: int,
    elements: Sequence[BsElement],
    slope=None,
    intercept=None,
    seed: int = 0,
    n_random: int = 8,
    exhaustive: int = 64,
) -> list[dict]:
    """One record per a-edge and t-edge based at each element."""
    ch = BsTameChecker(p, slope, intercept)
    rng = random.Random(seed)
    out = []
    for u in elements:
        for kind in ("a", "t"):
            out.append(ch.edge_record(kind, u, rng, n_random, exhaustive))
    return out


# ---------------------------------------------------------------------------
# the witness against slope-one combings


def coeff1_witness(p: int, C: int) -> dict:
    if p < 8:
        raise BsDomainError(f"the witness needs p >= 8, got {p}")
    if C < 2:
        raise BsDomainError(f"the witness needs C >= 2, got {C}")
    h = half(p)
    loop = tuple(
        _power("t", C) + [A] + _power("t", -C) + [A] + _power("t", C) + [A_INV] + _power("t", -C) + [A_INV]
    )
    exponent = (h - 2) * (p**C - 1) // (p - 1)
    g = BsElement(0, exponent, 0)
    v = tuple((_power("a", h - 2) + [T]) * (C - 1) + _power("a", h - 2) + _power("t", -(C - 1)))
    return {
        "p": p,
        "C": C,
        "loop": format_bs_word(loop),
        "loop_is_closed": bs_eval_word(loop, p) == IDENTITY_BS,
        "g": format_bs_word(normal_form_word(g)),
        "v": format_bs_word(v),
        "v_evaluates_to_g": bs_eval_word(v, p) == g,
        "len_v": len(v),
        "formula_len": h * C - 2,
        "geodesic_length": bs_length(g, p),
        "bound": 3 * C + 2,
        "exceeds_bound": len(v) > 3 * C + 2,
    }
