"""Reduced tree pair diagrams for Thompson's group F.

Trees are immutable nested tuples: a leaf is ``None`` and a caret is the pair
``(left, right)``.  An element is a :class:`TreePair` ``(neg, pos)``.  Products
follow the convention where ``w*z`` refines ``neg(w)`` against ``pos(z)`` and
keeps ``neg`` from ``z`` and ``pos`` from ``w``; with this convention
``x0^-1 x1 x0 = x2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .words import Letter, Word, expand_infinite, format_word

Tree = Optional[tuple]
LEAF: Tree = None


class MalformedPairError(ValueError):
    """Tree pair with unequal caret counts or otherwise not a valid diagram."""


class InvalidNormalFormError(ValueError):
    """Infinite normal form violating ordering or the Brown-Geoghegan condition."""


# ---------------------------------------------------------------------------
# trees


def caret(left: Tree = LEAF, right: Tree = LEAF) -> Tree:
    return (left, right)


def size(t: Tree) -> int:
    """Number of carets."""
    if t is None:
        return 0
    return 1 + size(t[0]) + size(t[1])


def right_spine(n: int) -> Tree:
    """R_n: n carets along the right side."""
    t: Tree = None
    for _ in range(n):
        t = (None, t)
    return t


def left_spine(n: int) -> Tree:
    """L_n: n carets along the left side."""
    t: Tree = None
    for _ in range(n):
        t = (t, None)
    return t


@lru_cache(maxsize=None)
def all_trees(n: int) -> tuple[Tree, ...]:
    """Every binary tree with n carets (Catalan(n) of them)."""
    if n == 0:
        return (None,)
    return tuple((l, r) for k in range(n) for l in all_trees(k) for r in all_trees(n - 1 - k))


def reduced_pairs(n: int) -> Iterable["TreePair"]:
    """Every element of F whose reduced diagram has exactly n carets."""
    for neg in all_trees(n):
        for pos in all_trees(n):
            w = TreePair(neg, pos)
            if is_reduced(w):
                yield w


def mirror(t: Tree) -> Tree:
    if t is None:
        return None
    return (mirror(t[1]), mirror(t[0]))


def to_text(t: Tree) -> str:
    """Serialize as ``*`` for a leaf and ``(L R)`` for a caret."""
    return repr(t).replace("None", "*").replace(", ", " ")


def parse_tree(text: str) -> Tree:
    tokens = text.replace("(", " ( ").replace(")", " ) ").split()
    pos = 0

    def parse() -> Tree:
        nonlocal pos
        if pos >= len(tokens):
            raise ValueError(f"truncated tree text {text!r}")
        tok = tokens[pos]
        pos += 1
        if tok == "*":
            return None
        if tok != "(":
            raise ValueError(f"unexpected token {tok!r} in {text!r}")
        left = parse()
        right = parse()
        if pos >= len(tokens) or tokens[pos] != ")":
            raise ValueError(f"expected ')' in {text!r}")
        pos += 1
        return (left, right)

    t = parse()
    if pos != len(tokens):
        raise ValueError(f"trailing input in {text!r}")
    return t


def leaf_exponents(t: Tree) -> list[int]:
    """E_T(k) for every leaf k.

    Follow left edges upward from leaf k for as long as possible.  The count of
    edges is the exponent, minus one when the path tops out on the right side
    of the tree (the root or the right spine).
    """
    out: list[int] = []

    def rec(node: Tree, depth: int, top_right: bool, on_right: bool) -> None:
        if node is None:
            if depth == 0:
                out.append(0)
            else:
                out.append(depth - 1 if top_right else depth)
            return
        if depth == 0:
            top_right = on_right
        rec(node[0], depth + 1, top_right, False)
        rec(node[1], 0, False, on_right)

    rec(t, 0, False, True)
    return out


def tree_from_exponents(exps: Sequence[int]) -> Tree:
    """Smallest tree whose leaf exponents start with ``exps`` (zero padded)."""
    if any(e < 0 for e in exps):
        raise InvalidNormalFormError("negative leaf exponent")
    last = max((i for i, e in enumerate(exps) if e), default=-1)
    pos = 0

    def read() -> int:
        nonlocal pos
        e = exps[pos] if pos < len(exps) else 0
        pos += 1
        return e

    def unit() -> Tree:
        e = read()
        node: Tree = None
        if e == 0:
            return node
        subs = [unit() for _ in range(e)]
        for b in subs:
            node = (node, b)
        return node

    lefts = []
    while pos <= last:
        lefts.append(unit())
    t: Tree = None
    for a in reversed(lefts):
        t = (a, t)
    return t


def extend_right(t: Tree, k: int) -> Tree:
    """Graft a chain of k right carets onto the last leaf."""
    if k == 0:
        return t
    if t is None:
        return right_spine(k)
    return (t[0], extend_right(t[1], k))


def caret_info(t: Tree) -> list[tuple[str, bool]]:
    """For each caret in infix order: (kind, has nonempty right subtree).

    kind is one of ``root``, ``left``, ``right``, ``interior``.
    """
    out: list[tuple[str, bool]] = []

    def rec(node: Tree, kind: str) -> None:
        if node is None:
            return
        left, right = node
        if kind == "root":
            lk, rk = "left", "right"
        elif kind == "left":
            lk, rk = "left", "interior"
        elif kind == "right":
            lk, rk = "interior", "right"
        else:
            lk = rk = "interior"
        rec(left, lk)
        out.append((kind, right is not None))
        rec(right, rk)

    rec(t, "root")
    return out


def caret_kinds(t: Tree) -> list[str]:
    return [k for k, _ in caret_info(t)]


def exposed_carets(t: Tree) -> set[int]:
    """Infix numbers of carets whose two children are leaves."""
    found: set[int] = set()
    counter = 0

    def rec(node: Tree) -> None:
        nonlocal counter
        if node is None:
            return
        rec(node[0])
        counter += 1
        if node[0] is None and node[1] is None:
            found.add(counter)
        rec(node[1])

    rec(t)
    return found


def first_exposed_caret(t: Tree) -> int:
    """Smallest exposed caret number (0 for the empty tree)."""
    ex = exposed_carets(t)
    return min(ex) if ex else 0


def _exposed_leaf_starts(t: Tree) -> set[int]:
    """Leaf numbers k such that leaves k, k+1 hang from a common caret."""
    found: set[int] = set()
    counter = 0

    def rec(node: Tree) -> None:
        nonlocal counter
        if node is None:
            counter += 1
            return
        if node[0] is None and node[1] is None:
            found.add(counter)
            counter += 2
            return
        rec(node[0])
        rec(node[1])

    rec(t)
    return found


def _collapse(t: Tree, starts: set[int]) -> Tree:
    counter = 0

    def rec(node: Tree) -> Tree:
        nonlocal counter
        if node is None:
            counter += 1
            return None
        if node[0] is None and node[1] is None and counter in starts:
            counter += 2
            return None
        left = rec(node[0])
        right = rec(node[1])
        return (left, right)

    return rec(t)


def union(a: Tree, b: Tree) -> Tree:
    """Smallest tree containing both a and b as rooted subtrees."""
    if a is None:
        return b
    if b is None:
        return a
    return (union(a[0], b[0]), union(a[1], b[1]))


def hanging(sub: Tree, full: Tree) -> list[Tree]:
    """Subtrees of ``full`` attached at the leaves of ``sub`` (sub ⊆ full)."""
    out: list[Tree] = []

    def rec(s: Tree, f: Tree) -> None:
        if s is None:
            out.append(f)
            return
        if f is None:
            raise MalformedPairError("tree is not a rooted subtree")
        rec(s[0], f[0])
        rec(s[1], f[1])

    rec(sub, full)
    return out


def graft(t: Tree, subs: Sequence[Tree]) -> Tree:
    """Attach subs[k] at leaf k of t."""
    it = iter(subs)

    def rec(node: Tree) -> Tree:
        if node is None:
            return next(it)
        return (rec(node[0]), rec(node[1]))

    return rec(t)


# ---------------------------------------------------------------------------
# tree pairs


@dataclass(frozen=True)
class TreePair:
    neg: Tree
    pos: Tree

    @property
    def n(self) -> int:
        return size(self.neg)

    def key(self) -> str:
        return f"{to_text(self.neg)}|{to_text(self.pos)}"

    def inverse(self) -> "TreePair":
        return TreePair(self.pos, self.neg)

    def is_identity(self) -> bool:
        return self.neg is None and self.pos is None

    def __str__(self) -> str:
        return f"({to_text(self.neg)}, {to_text(self.pos)})"


IDENTITY = TreePair(None, None)


def pair_from_key(key: str) -> TreePair:
    neg, pos = key.split("|")
    return reduce(parse_tree(neg), parse_tree(pos))


def reduce_counted(neg: Tree, pos: Tree) -> tuple[TreePair, int]:
    """Reduce and report how many caret pairs were removed."""
    if size(neg) != size(pos):
        raise MalformedPairError("trees have different caret counts")
    removed = 0
    while True:
        common = _exposed_leaf_starts(neg) & _exposed_leaf_starts(pos)
        if not common:
            return TreePair(neg, pos), removed
        neg = _collapse(neg, common)
        pos = _collapse(pos, common)
        removed += len(common)


def reduce(neg: Tree, pos: Tree) -> TreePair:
    return reduce_counted(neg, pos)[0]


def is_reduced(w: TreePair) -> bool:
    return not (_exposed_leaf_starts(w.neg) & _exposed_leaf_starts(w.pos))


@dataclass(frozen=True)
class Delta:
    added: int
    removed: int


def multiply_counted(u: TreePair, v: TreePair) -> tuple[TreePair, Delta]:
    """u*v together with carets added to u's trees and carets removed."""
    common = union(u.neg, v.pos)
    added = size(common) - size(u.neg)
    if added:
        pos = graft(u.pos, hanging(u.neg, common))
    else:
        pos = u.pos
    neg = graft(v.neg, hanging(v.pos, common))
    result, removed = reduce_counted(neg, pos)
    return result, Delta(added, removed)


def multiply(u: TreePair, v: TreePair) -> TreePair:
    return multiply_counted(u, v)[0]


_R2 = right_spine(2)
_R3 = right_spine(3)
X0_PAIR = TreePair(_R2, ((None, None), None))
X1_PAIR = TreePair(_R3, (None, ((None, None), None)))

GENERATOR_PAIRS: dict[Letter, TreePair] = {
    (0, 1): X0_PAIR,
    (0, -1): X0_PAIR.inverse(),
    (1, 1): X1_PAIR,
    (1, -1): X1_PAIR.inverse(),
}


def apply_generator(w: TreePair, letter: Letter) -> tuple[TreePair, Delta]:
    try:
        g = GENERATOR_PAIRS[letter]
    except KeyError:
        raise ValueError(f"not a finite generator letter: {letter}") from None
    return multiply_counted(w, g)


def eval_word(word: Iterable[Letter]) -> TreePair:
    w = IDENTITY
    for letter in expand_infinite(tuple(word)):
        w = multiply_counted(w, GENERATOR_PAIRS[letter])[0]
    return w


def prefix_elements(word: Sequence[Letter]) -> list[TreePair]:
    """Elements represented by every prefix of ``word`` (length len+1)."""
    out = [IDENTITY]
    w = IDENTITY
    for letter in word:
        w = multiply_counted(w, GENERATOR_PAIRS[letter])[0]
        out.append(w)
    return out


# ---------------------------------------------------------------------------
# normal forms


@dataclass(frozen=True)
class InfNormalForm:
    """x_{i1}^{a1} ... x_{ik}^{ak} . x_{jl}^{-bl} ... x_{j1}^{-b1}.

    Both parts are stored as ascending (index, positive exponent) tuples.
    """

    positive: tuple[tuple[int, int], ...] = ()
    negative: tuple[tuple[int, int], ...] = ()

    def __str__(self) -> str:
        if not self.positive and not self.negative:
            return "e"
        pos = " ".join(f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in self.positive)
        neg = " ".join(f"x{i}^-{e}" for i, e in reversed(self.negative))
        return f"{pos} . {neg}".strip()

    def word(self) -> Word:
        out: list[Letter] = []
        for i, e in self.positive:
            out.extend([(i, 1)] * e)
        for i, e in reversed(self.negative):
            out.extend([(i, -1)] * e)
        return tuple(out)

    def positive_word(self) -> Word:
        return InfNormalForm(self.positive, ()).word()

    def negative_word(self) -> Word:
        return InfNormalForm((), self.negative).word()


def _sparse(exps: Sequence[int]) -> tuple[tuple[int, int], ...]:
    return tuple((i, e) for i, e in enumerate(exps) if e)


def to_inf_normal_form(w: TreePair) -> InfNormalForm:
    return InfNormalForm(_sparse(leaf_exponents(w.pos)), _sparse(leaf_exponents(w.neg)))


def _dense(part: Sequence[tuple[int, int]]) -> list[int]:
    last = -1
    for i, e in part:
        if i <= last:
            raise InvalidNormalFormError("indices must be strictly increasing")
        if e <= 0:
            raise InvalidNormalFormError("exponents must be positive")
        last = i
    exps = [0] * (last + 1)
    for i, e in part:
        exps[i] = e
    return exps


def check_brown_geoghegan(nf: InfNormalForm) -> None:
    pos = dict(nf.positive)
    neg = dict(nf.negative)
    for i in pos.keys() & neg.keys():
        if i + 1 not in pos and i + 1 not in neg:
            raise InvalidNormalFormError(
                f"x{i} and x{i}^-1 both occur but x{i + 1} does not"
            )


def from_inf_normal_form(nf: InfNormalForm) -> TreePair:
    pos_exps = _dense(nf.positive)
    neg_exps = _dense(nf.negative)
    check_brown_geoghegan(nf)
    neg = tree_from_exponents(neg_exps)
    pos = tree_from_exponents(pos_exps)
    a, b = size(neg), size(pos)
    neg = extend_right(neg, max(0, b - a))
    pos = extend_right(pos, max(0, a - b))
    return reduce(neg, pos)


def normal_form_from_word(word: Iterable[Letter]) -> InfNormalForm:
    """Collect exponents of a word that is already of the form p . n^-1."""
    pos: dict[int, int] = {}
    neg: dict[int, int] = {}
    seen_negative = False
    for i, e in word:
        if e > 0:
            if seen_negative:
                raise InvalidNormalFormError("positive letter after negative part")
            pos[i] = pos.get(i, 0) + 1
        else:
            seen_negative = True
            neg[i] = neg.get(i, 0) + 1
    nf = InfNormalForm(tuple(sorted(pos.items())), tuple(sorted(neg.items())))
    # ordering is validated by _dense
    _dense(nf.positive)
    _dense(nf.negative)
    return nf


# ---------------------------------------------------------------------------
# word length


def word_length(w: TreePair) -> int:
    """Length over {x0, x1}^±: non-right carets plus twice the penalty pairs."""
    n = w.n
    if n == 0:
        return 0
    neg = caret_info(w.neg)
    pos = caret_info(w.pos)
    length = 0
    for info in (neg, pos):
        length += sum(1 for kind, _ in info if kind in ("left", "interior"))

    def type_n(info: list[tuple[str, bool]], p: int) -> bool:
        return p < n and info[p - 1][1] and info[p][0] == "interior"

    for p in range(1, n + 1):
        kn, kp = neg[p - 1][0], pos[p - 1][0]
        left_somewhere = kn in ("root", "left") or kp in ("root", "left")
        if left_somewhere:
            continue
        if type_n(neg, p) or type_n(pos, p):
            length += 2
        elif kn == "right" and kp == "right" and p != n:
            length += 2
    return length


def describe(w: TreePair) -> str:
    return f"{to_inf_normal_form(w)}  [{format_word(to_inf_normal_form(w).word())}]"
