from itertools import product

import pytest

from tamecomb.cayley import distance
from tamecomb.nested_traversal import (
    NotANestedPathError,
    check_prefix_monotone,
    direct_exposure,
    eta,
    eta_negative,
    eta_parts,
    exposed_scan,
    is_ntp,
    strictly_negative,
)
from tamecomb.tree_pair import (
    IDENTITY,
    X1_PAIR,
    all_trees,
    eval_word,
    extend_right,
    left_spine,
    word_length,
)
from tamecomb.words import X0, X0_INV, X1_INV, free_reduce, parse_word


def test_eta_negative_examples():
    assert eta_negative(None) == ()
    assert eta_negative(X1_PAIR.inverse().neg) == (X1_INV,)
    assert eta_negative(left_spine(3)) == parse_word("x0^-2")


def test_eta_negative_ignores_trailing_right_carets():
    for n in range(1, 6):
        for t in all_trees(n):
            assert eta_negative(extend_right(t, 2)) == eta_negative(t)


def test_eta_examples():
    assert eta(IDENTITY) == ()
    w = eval_word(parse_word("x0 x0^-1 x1^-1"))
    assert eta(w) == eta(X1_PAIR.inverse()) == (X1_INV,)
    neg = eval_word(parse_word("x5^-1 x3^-2"))
    assert eta(neg) == eta_negative(neg.neg)


def test_eta_evaluates_and_is_reduced(f_ball_8):
    for w in f_ball_8.elements.values():
        y = eta(w)
        assert free_reduce(y) == y
        assert eval_word(y) == w


def test_eta_splits_at_central_x0_block(f_ball_8):
    for w in list(f_ball_8.elements.values())[::7]:
        positive, negative = eta_parts(w)
        y = eta(w)
        n = (len(positive) + len(negative) - len(y)) // 2
        assert positive[len(positive) - n :] == (X0,) * n
        assert negative[:n] == (X0_INV,) * n


@pytest.mark.parametrize("n", range(1, 10))
def test_strictly_negative_paths_are_minimal(n, f_ball_10):
    for t in all_trees(n):
        w = strictly_negative(t)
        y = eta_negative(w.neg)
        assert eval_word(y) == w
        assert len(y) == word_length(w)
        if len(y) <= f_ball_10.radius:
            assert len(y) == distance(f_ball_10, w)


def test_is_ntp_examples():
    assert is_ntp(())
    assert not is_ntp((X0,))
    assert is_ntp((X0_INV, X1_INV, X0))


def test_is_ntp_rejects_foreign_letters():
    with pytest.raises(NotANestedPathError):
        is_ntp(((1, 1),))


def test_strictly_negative_paths_satisfy_ntp():
    for n in range(1, 7):
        for t in all_trees(n):
            assert is_ntp(eta_negative(t))


def test_exposed_scan_examples():
    s = exposed_scan((X1_INV,))
    assert not s.first_caret_exposed and 2 in s.exposed
    assert not exposed_scan((X0_INV, X1_INV, X0)).first_caret_exposed
    empty = exposed_scan(())
    assert not empty.first_caret_exposed and not empty.exposed


def test_exposed_scan_rejects_non_paths():
    with pytest.raises(NotANestedPathError):
        exposed_scan((X0,))


def _paths(max_len):
    """Every nested traversal path of length at most max_len, by DFS."""
    out = []
    stack = [()]
    while stack:
        y = stack.pop()
        out.append(y)
        if len(y) == max_len:
            continue
        for letter in (X0, X0_INV, X1_INV):
            z = y + (letter,)
            if is_ntp(z):
                stack.append(z)
    return out


def test_ntp_prefix_closed():
    for y in _paths(8):
        assert all(is_ntp(y[:i]) for i in range(len(y)))


def test_exposed_scan_agrees_with_evaluation():
    paths = _paths(12)
    assert len(paths) > 1000
    for y in paths:
        assert exposed_scan(y) == direct_exposure(y)


def test_prefix_monotone_examples():
    assert check_prefix_monotone(()) is None
    assert check_prefix_monotone(parse_word("x1 x1^-1")) == 2


def test_prefix_monotone_fails_for_some_short_words():
    letters = [(0, 1), (0, -1), (1, 1), (1, -1)]
    hits = sum(check_prefix_monotone(y) is not None for y in product(letters, repeat=3))
    assert hits > 0
