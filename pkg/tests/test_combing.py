from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tamecomb.cayley import F_GROUP, ball
from tamecomb.cells import CellId, cell_geometry, edge_less
from tamecomb.combing import (
    CELL_CONSTANT,
    CellInterior,
    EdgeInterior,
    Vertex,
    check_tame,
    comb_edge,
    comb_vertex,
    level,
    nmax_nmin,
    tame_record,
    trace,
    vertex_trace,
)
from tamecomb.edges import EdgeId, eta_cached, is_good
from tamecomb.levels import cell_level, first_tameness_violation, grid_violation
from tamecomb.tree_pair import IDENTITY, X0_PAIR, eval_word
from tamecomb.words import parse_word

SAMPLE = eval_word(parse_word("x5^-1 x3^-2"))


def test_cell_constant():
    assert CELL_CONSTANT == 561


def test_level_examples():
    assert level(Vertex(IDENTITY)) == 0
    assert level(EdgeInterior(EdgeId(X0_PAIR, 0))) == Fraction(3, 4)
    c = CellId("r", 1, 1, SAMPLE)
    levels = [level(Vertex(v)) for v in cell_geometry(c).vertices]
    assert len(levels) == 10
    assert level(CellInterior(c)) == Fraction(sum(levels), 10) + Fraction(1, 4) + Fraction(1, 561)


def test_nmax_nmin_examples():
    assert nmax_nmin(Vertex(SAMPLE)) == (SAMPLE.n, SAMPLE.n)
    e = EdgeId(SAMPLE, 1)
    ns = sorted(v.n for v in e.endpoints())
    assert nmax_nmin(EdgeInterior(e)) == (ns[1], ns[0])


def test_comb_vertex_is_eta():
    assert comb_vertex(IDENTITY) == ()
    assert comb_vertex(X0_PAIR) == eta_cached(X0_PAIR)
    assert eval_word(comb_vertex(SAMPLE)) == SAMPLE


def test_comb_edge_examples():
    for w in ball(F_GROUP, 3).elements.values():
        assert comb_edge(EdgeId(w, 0)).good
    assert comb_edge(EdgeId(IDENTITY, 1)).good
    d = comb_edge(EdgeId(SAMPLE, 1))
    assert not d.good and d.cell.label == "Rr1^-1"
    assert 1 <= len(d.cells()) < 50
    assert d.depth() >= 1


def test_bad_children_are_smaller(f_ball_8):
    for w in list(f_ball_8.elements.values())[::3]:
        d = comb_edge(EdgeId(w, 1))
        if d.good:
            continue
        for ch in d.children:
            assert ch.edge.gen == 0 or is_good(ch.edge) or edge_less(ch.edge, d.edge)


def test_good_trace_shape():
    e = EdgeId(eval_word(parse_word("x1^-1")), 0)
    t = trace(e)
    assert isinstance(t[-1][0], EdgeInterior)
    refs = [p for p, _ in t]
    near = e.base if comb_edge(e).direction == "forward" else e.tail()
    assert refs[:-1] == vertex_trace(near)


def test_bad_trace_passes_through_cell():
    t = trace(EdgeId(SAMPLE, 1))
    cells = [p for p, _ in t if isinstance(p, CellInterior)]
    assert cells and cells[-1].c.label == "Rr1^-1"


def test_identity_adjacent_traces_are_short():
    for letter in [(0, 1), (0, -1), (1, 1), (1, -1)]:
        w = eval_word((letter,))
        e = EdgeId(w, letter[0]) if letter[1] > 0 else EdgeId(IDENTITY, letter[0])
        assert len(trace(e)) <= 3


def test_traces_are_monotone_and_bounded():
    for w in ball(F_GROUP, 5).elements.values():
        for gen in (0, 1):
            t = trace(EdgeId(w, gen))
            ns = [n for _, n in t]
            assert ns == sorted(ns)
            for p, _ in t:
                nmax, nmin = nmax_nmin(p)
                assert nmin - 2 <= level(p) < 4 * nmax + 1
                if isinstance(p, CellInterior):
                    assert nmax - nmin <= 9


def test_tameness_examples():
    assert check_tame(EdgeId(SAMPLE, 1), 4, 45)
    # the trace of e1(identity) has nondecreasing levels, so rho(q) = q suffices
    assert check_tame(EdgeId(IDENTITY, 1), 1, 0)
    assert not check_tame(EdgeId(IDENTITY, 1), 0, 0)
    rec = tame_record(EdgeId(SAMPLE, 1))
    assert rec["pass"] and not rec["good"] and rec["cells_used"] >= 1


def test_constant_rho_fails_somewhere():
    assert not all(check_tame(EdgeId(w, 1), 0, 0) for w in ball(F_GROUP, 5).elements.values())


def test_tameness_single_point():
    assert first_tameness_violation([Fraction(3)], 0, 0) is None


def test_cell_levels_leave_the_quarter_grid():
    # mean over 14 vertices is not a multiple of 1/(4*561) in general
    lev = cell_level([1] * 13 + [2], CELL_CONSTANT)
    assert (lev * 4 * CELL_CONSTANT).denominator != 1


levels_st = st.lists(
    st.fractions(min_value=0, max_value=30, max_denominator=60), min_size=1, max_size=12
)


@settings(max_examples=300, deadline=None)
@given(levels_st, st.integers(0, 4), st.integers(0, 5))
def test_exact_test_catches_everything_the_grid_does(levels, slope, intercept):
    if grid_violation(levels, Fraction(slope), Fraction(intercept), 4 * CELL_CONSTANT) is not None:
        assert first_tameness_violation(levels, Fraction(slope), Fraction(intercept)) is not None


@settings(max_examples=300, deadline=None)
@given(levels_st, st.integers(0, 4), st.integers(0, 5))
def test_exact_test_matches_brute_force(levels, slope, intercept):
    qs = sorted(set(levels))
    brute = any(
        levels[s] > slope * q + intercept and levels[t] <= q
        for q in qs
        for t in range(len(levels))
        for s in range(t)
    )
    assert (first_tameness_violation(levels, Fraction(slope), Fraction(intercept)) is not None) == brute


def test_rejects_negative_slope():
    with pytest.raises(ValueError):
        first_tameness_violation([Fraction(1)], -1, 0)
