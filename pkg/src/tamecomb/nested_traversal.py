"""Nested traversal normal forms eta(w) for Thompson's group F.

Caret types (left, right, interior) are always taken relative to the whole
negative tree, and the "first caret" rule fires only for global caret 1.  This
is the reading that makes the output evaluate back to the element and have
geodesic length; see the test suite for the calibration checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .tree_pair import (
    IDENTITY,
    Tree,
    TreePair,
    exposed_carets,
    prefix_elements,
    right_spine,
    size,
)
from .words import X0, X0_INV, X1_INV, Letter, Word, free_reduce, inverse


class NotANestedPathError(ValueError):
    pass


def _is_right_spine(t: Tree) -> bool:
    while t is not None:
        if t[0] is not None:
            return False
        t = t[1]
    return True


def eta_negative(t: Tree) -> Word:
    """Nested traversal path for the strictly negative element (t, R_N)."""
    out: list[Letter] = []
    counter = 0

    def visit(node: Tree, kind: str) -> None:
        nonlocal counter
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
        visit(left, lk)
        counter += 1
        if counter == 1:
            visit(right, rk)
        elif kind in ("root", "left"):
            out.append(X0_INV)
            visit(right, rk)
        elif kind == "interior":
            if right is None:
                out.append(X1_INV)
            else:
                out.append(X0_INV)
                visit(right, rk)
                out.append(X0)
                out.append(X1_INV)
        else:  # right caret, not the root
            if _is_right_spine(right):
                visit(right, rk)
            else:
                out.append(X0_INV)
                visit(right, rk)
                out.append(X0)

    visit(t, "root")
    return tuple(out)


def eta_parts(w: TreePair) -> tuple[Word, Word]:
    """(eta(w_p), eta(w_n)) before free reduction."""
    return inverse(eta_negative(w.pos)), eta_negative(w.neg)


def eta(w: TreePair) -> Word:
    positive, negative = eta_parts(w)
    reduced = free_reduce(positive + negative)
    # cancellation only happens in the central x0 block
    n = 0
    while (
        n < len(positive)
        and n < len(negative)
        and positive[len(positive) - 1 - n] == X0
        and negative[n] == X0_INV
    ):
        n += 1
    assert reduced == positive[: len(positive) - n] + negative[n:]
    return reduced


def is_ntp(y: Sequence[Letter]) -> bool:
    """Recognize nested traversal paths of strictly negative elements."""
    for letter in y:
        if letter not in (X0, X0_INV, X1_INV):
            raise NotANestedPathError(f"letter {letter} not allowed in a strictly negative path")
    if free_reduce(y) != tuple(y):
        return False
    total = 0
    for g, e in y:
        if g == 0:
            total += e
            if total > 0:
                return False
    for i in range(len(y) - 1):
        if y[i] == X0 and y[i + 1] == X0:
            if any(letter != X0 for letter in y[i + 2 :]):
                return False
            break
    return True


@dataclass(frozen=True)
class ExposureScan:
    first_caret_exposed: bool
    exposed: frozenset[int]
    decided: int  # carets 2..decided were classified


def exposed_scan(y: Sequence[Letter]) -> ExposureScan:
    """Exposed carets of the negative tree read directly off a nested path."""
    y = tuple(y)
    if not is_ntp(y):
        raise NotANestedPathError("input is not a nested traversal path")
    first = False
    if y and y[0] == X0_INV:
        total = 0
        first = True
        for g, e in y:
            if g == 0:
                total += e
            if total >= 0:
                first = False
                break
    exposed: set[int] = set()
    caret = 1
    for k, letter in enumerate(y):
        if letter == X0:
            continue
        prev = y[k - 1] if k > 0 else None
        if letter == X1_INV and prev == X0:
            continue
        caret += 1
        if letter == X0_INV:
            continue
        if prev is None or prev == X0_INV:
            exposed.add(caret)
    return ExposureScan(first, frozenset(exposed), caret)


def direct_exposure(y: Sequence[Letter]) -> ExposureScan:
    """Same record computed by evaluating the path (test oracle)."""
    from .tree_pair import eval_word

    w = eval_word(y)
    ex = exposed_carets(w.neg) if w.n else set()
    scan = exposed_scan(y)
    return ExposureScan(1 in ex, frozenset(c for c in ex if 2 <= c <= scan.decided), scan.decided)


def check_prefix_monotone(y: Sequence[Letter]) -> Optional[int]:
    """First 1-based i with N(a1..a_{i-1}) > N(a1..a_i), or None."""
    counts = [p.n for p in prefix_elements(tuple(y))]
    for i in range(1, len(counts)):
        if counts[i - 1] > counts[i]:
            return i
    return None


def strictly_negative(t: Tree) -> TreePair:
    from .tree_pair import reduce

    return reduce(t, right_spine(size(t)))
