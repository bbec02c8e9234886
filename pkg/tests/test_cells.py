from collections import defaultdict
from itertools import product

import pytest

from tamecomb import posets
from tamecomb.cells import (
    BOUNDARY_WORDS,
    CellId,
    OrderDomainError,
    bottom_rotation_ok,
    cell_geometry,
    cell_map,
    edge_less,
    is_cyclic_relator,
    verify_boundary,
)
from tamecomb.edges import EdgeId, is_good
from tamecomb.posets import (
    PosetDomainError,
    left_step,
    less_l,
    less_l_j,
    less_r,
    make_b,
    right_chain,
    right_step,
)
from tamecomb.tree_pair import IDENTITY, all_trees, eval_word, left_spine, mirror, multiply, reduced_pairs, right_spine
from tamecomb.words import parse_word


def elt(text):
    return eval_word(parse_word(text))


# rotation posets


def test_right_step_examples():
    with pytest.raises(PosetDomainError):
        right_step(right_spine(3))
    assert right_step(((None, None), None)) == right_spine(2)


@pytest.mark.parametrize("k", range(1, 7))
def test_right_chain_terminates(k):
    for d in all_trees(k):
        chain = right_chain(d)
        assert chain[-1] == right_spine(k)
        assert len(set(chain)) == len(chain)
        for a, b in zip(chain, chain[1:]):
            assert posets.c_r(b) <= posets.c_r(a)
            if posets.c_r(b) == posets.c_r(a) and posets.s_r(b) > 0:
                assert posets.s_r(a) % 2 != posets.s_r(b) % 2


def test_less_r_examples():
    for k in range(2, 6):
        r = right_spine(k)
        for d in all_trees(k):
            assert less_r(r, d) == (d != r)
            assert not less_r(d, d)


def test_less_r_antisymmetric():
    trees = all_trees(3)
    assert len(trees) == 5
    for a, b in product(trees, repeat=2):
        assert not (less_r(a, b) and less_r(b, a))


def test_less_r_rejects_mixed_sizes():
    with pytest.raises(PosetDomainError):
        less_r(right_spine(2), right_spine(3))


def test_left_step_is_mirror_dual():
    for k in range(1, 6):
        for a in all_trees(k):
            if a != left_spine(k):
                assert left_step(a) == mirror(right_step(mirror(a)))


def test_make_b():
    for k in range(1, 7):
        assert make_b(k - 1, k) == left_spine(k)
        for j in range(k):
            b = make_b(j, k)
            assert not posets.has_interior(b)
    with pytest.raises(PosetDomainError):
        make_b(5, 5)


def test_less_l_j_chain():
    for k in range(4, 8):
        for j in range(2, k - 1):
            assert less_l_j(j, make_b(j, k), make_b(k - 1, k))
            for i in range(j, k - 1):
                assert less_l_j(j, make_b(i, k), make_b(i + 1, k))


def test_less_l_j_edge_indices_match_less_l():
    trees = all_trees(4)
    assert len(trees) == 14
    for j in (1, 3, 4):
        for a, b in product(trees, repeat=2):
            assert less_l_j(j, a, b) == less_l(a, b)


def test_less_l_j_range():
    with pytest.raises(PosetDomainError):
        less_l_j(0, left_spine(3), left_spine(3))
    with pytest.raises(PosetDomainError):
        less_l_j(4, left_spine(3), left_spine(3))


# cells


def test_boundary_words():
    for (side, sub, exp), word in BOUNDARY_WORDS.items():
        assert len(word) == (10 if sub == 1 else 14)
        assert eval_word(word) == IDENTITY
        assert is_cyclic_relator(word)
        x1_at = [i for i, (g, _) in enumerate(word) if g == 1]
        assert len(x1_at) == 4
        gaps = [(b - a) % len(word) for a, b in zip(x1_at, x1_at[1:] + x1_at[:1])]
        assert min(gaps) >= 2


def test_right_cell_loop_and_bottom_vertex():
    word = parse_word("x0^-2 x1^-1 x0^2 x1^-1 x0^-1 x1 x0 x1")
    assert BOUNDARY_WORDS[("r", 1, 1)] == word
    assert eval_word(parse_word("x3^-1 x1^-1 x2 x1")) == IDENTITY
    w = elt("x0 x1^-1 x0^-1 x1^-1")
    g = cell_geometry(CellId("r", 1, 1, w))
    assert g.z_b == multiply(w, eval_word(parse_word("x0^-2 x1^-1 x0^2")))


def test_sample_cells():
    c = cell_map(EdgeId(elt("x5^-1 x3^-2"), 1))
    assert c.label == "Rr1^-1"
    assert cell_geometry(c).z_b == elt("x5^-1 x3^-1")
    assert cell_map(EdgeId(elt("x0 x1 x2 x4 x1^-1 x0^-2"), 1)).label == "Rl2^-1"
    c2 = cell_map(EdgeId(elt("x0 x1 x2 x4 x0^-3"), 1))
    assert c2.label == "Rl1"
    assert cell_geometry(c2).z_b == elt("x0 x1 x3 x0^-2")
    assert str(c) == "Rr1^-1(x5^-1 x3^-2)"


def test_sample_boundaries_verify():
    assert verify_boundary(EdgeId(elt("x5^-1 x3^-2"), 1)).ok
    e = EdgeId(elt("x0 x1 x2 x4 x0^-3"), 1)
    rep = verify_boundary(e)
    assert rep.ok
    bottom = cell_geometry(rep.cell).bottom_edge
    assert bottom.base == elt("x0 x1 x3 x0^-2")
    assert bottom.base.n < e.base.n
    assert is_good(bottom) or edge_less(bottom, e)


def test_edge_less_examples():
    big = EdgeId(elt("x5^-1 x3^-2"), 1)
    small = EdgeId(elt("x0 x1 x2 x4 x0^-3"), 1)
    assert not is_good(big) and not is_good(small)
    assert small.base.n < big.base.n
    assert edge_less(small, big)
    assert not edge_less(big, big)


def test_edge_less_rejects_good_edges():
    with pytest.raises(OrderDomainError):
        edge_less(EdgeId(IDENTITY, 1), EdgeId(elt("x5^-1 x3^-2"), 1))


def _bad_census(n_max):
    for n in range(n_max + 1):
        for w in reduced_pairs(n):
            e = EdgeId(w, 1)
            if not is_good(e):
                yield e


def test_order_is_acyclic_on_census():
    # comparisons between edges with equal N need equal positive trees
    groups = defaultdict(list)
    for e in _bad_census(7):
        groups[(e.base.n, e.base.pos)].append(e)
    for edges in groups.values():
        below = {w: [z for z in edges if z != w and edge_less(z, w)] for w in edges}
        state = {}
        for root in edges:
            if root in state:
                continue
            stack = [(root, iter(below[root]))]
            state[root] = "open"
            while stack:
                node, it = stack[-1]
                nxt = next(it, None)
                if nxt is None:
                    state[node] = "done"
                    stack.pop()
                elif state.get(nxt) == "open":
                    pytest.fail(f"cycle through {nxt}")
                elif nxt not in state:
                    state[nxt] = "open"
                    stack.append((nxt, iter(below[nxt])))


def test_census_cells_are_relator_cells():
    count = 0
    for e in _bad_census(6):
        c = cell_map(e)
        g = cell_geometry(c)
        assert e in g.edges and g.e1_edges[3] == e
        assert is_cyclic_relator(g.boundary_word)
        assert bottom_rotation_ok(g)
        count += 1
    assert count > 0


def test_strict_j_bound_differs_from_fallback():
    fallback = sum(len(verify_boundary(e).j_fallback_edges) for e in _bad_census(7))
    assert fallback > 0
