import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shiftcrit import (
    ConstructionError,
    InvalidParameterError,
    SearchBudget,
    SubsetSequence,
    build_shift_graph,
    chromatic_number,
    critical_core,
    greedy_coloring,
    induced_subgraph,
    is_good,
    k_colorable_bb,
    k_colorable_via_sequences,
    proper_coloring_violation,
)

from oracles import brute_chromatic, brute_k_colorable

TIGHT = SearchBudget(max_nodes=2_000_000, max_seconds=60.0)


def pairs_of(view):
    return [(v.x, v.y) for v in view.vertex_list()]


def test_budget_validation():
    with pytest.raises(InvalidParameterError):
        SearchBudget(max_nodes=0)
    with pytest.raises(InvalidParameterError):
        SearchBudget(max_seconds=-1)


def test_sequence_engine_worked_examples():
    r = k_colorable_via_sequences(4, 2, build_shift_graph(4), TIGHT)
    assert r.decision == "yes"
    assert r.certificate_sequence == SubsetSequence((0b11, 0b10, 0b01, 0), 2)
    assert r.certificate_coloring is not None

    r = k_colorable_via_sequences(5, 2, build_shift_graph(5), TIGHT)
    assert r.decision == "no"
    assert r.refutation_record()["conclusive"] is True

    r = k_colorable_via_sequences(5, 2, critical_core(2), TIGHT)
    assert r.decision == "no"


def test_bb_engine_worked_examples():
    core = critical_core(2).induced()
    assert k_colorable_bb(core, 3, TIGHT).decision == "yes"
    assert k_colorable_bb(core, 2, TIGHT).decision == "no"
    g9 = build_shift_graph(9)
    assert k_colorable_bb(g9, 3, TIGHT).decision == "no"
    r = k_colorable_bb(g9, 4, TIGHT)
    assert r.decision == "yes"
    assert proper_coloring_violation(r.certificate_coloring, g9) is None


def test_engines_and_results_carry_counters():
    r = k_colorable_via_sequences(5, 2, build_shift_graph(5), TIGHT)
    assert r.nodes > 0 and r.engine == "sequence"
    assert set(r.refutation_record()) == {"k", "nodes", "prunes", "conclusive"}
    r = k_colorable_bb(build_shift_graph(5), 2, TIGHT)
    assert r.nodes > 0 and r.engine == "bb"
    with pytest.raises(InvalidParameterError):
        k_colorable_via_sequences(5, 3, build_shift_graph(5), TIGHT).refutation_record()


def test_chromatic_ladder():
    want = {2: 1, 3: 2, 4: 2, 5: 3, 6: 3, 7: 3, 8: 3, 9: 4}
    for n_points, chi in want.items():
        res = chromatic_number(build_shift_graph(n_points), TIGHT)
        assert res.conclusive and res.chi == chi, n_points
        assert proper_coloring_violation(res.coloring, build_shift_graph(n_points)) is None
        if chi > 1:
            assert res.refutation["k"] == chi - 1
            assert res.refutation["conclusive"] is True


def test_core_chromatic_numbers():
    assert chromatic_number(critical_core(2).induced(), TIGHT).chi == 3
    assert chromatic_number(critical_core(3).induced(), TIGHT).chi == 4


def test_deleting_core_vertex_drops_chi():
    core = critical_core(2)
    g = core.graph()
    for v in core.members:
        sub = g.induced([w for w in g.vertices() if w != v])
        assert chromatic_number(sub, TIGHT).chi == 2
    for v in g.vertices():
        if v in core.member_set():
            continue
        sub = g.induced([w for w in g.vertices() if w != v])
        assert chromatic_number(sub, TIGHT).chi == 3


def test_budget_exhaustion_is_inconclusive():
    starved = SearchBudget(max_nodes=3, max_seconds=600)
    r = k_colorable_via_sequences(9, 3, build_shift_graph(9), starved)
    assert r.decision == "inconclusive" and not r.conclusive
    r = k_colorable_bb(build_shift_graph(9), 3, starved)
    assert r.decision == "inconclusive"
    res = chromatic_number(build_shift_graph(9), starved)
    assert not res.conclusive and res.chi is None


def test_saturated_only_agrees_with_plain():
    for X, npts, k in ((critical_core(2), 5, 2), (critical_core(3), 9, 3),
                       (build_shift_graph(5), 5, 2), (build_shift_graph(5), 5, 3)):
        plain = k_colorable_via_sequences(npts, k, X, TIGHT, saturated_only=False)
        sat = k_colorable_via_sequences(npts, k, X, TIGHT, saturated_only=True)
        assert plain.decision == sat.decision


def test_greedy_coloring_is_proper():
    for n_points in (5, 9, 17):
        g = build_shift_graph(n_points)
        col = greedy_coloring(g, TIGHT)
        assert proper_coloring_violation(col, g) is None


@st.composite
def small_instances(draw):
    n_points = draw(st.integers(3, 7))
    g = build_shift_graph(n_points)
    verts = draw(st.lists(st.sampled_from(g.vertex_list()),
                          unique=True, min_size=1, max_size=8))
    return g, sorted(verts)


@given(small_instances(), st.integers(1, 4))
@settings(max_examples=150)
def test_engines_agree_with_brute_force(case, k):
    g, verts = case
    sub = induced_subgraph(g, verts)
    edges = [(tuple(u), tuple(v)) for u, v in sub.edges()]
    want = brute_k_colorable([tuple(v) for v in verts], edges, k)
    r_seq = k_colorable_via_sequences(g.n_points, k, sub, TIGHT)
    r_bb = k_colorable_bb(sub, k, TIGHT)
    assert r_seq.decision == ("yes" if want else "no")
    assert r_bb.decision == ("yes" if want else "no")
    if want:
        assert proper_coloring_violation(r_seq.certificate_coloring, sub) is None
        assert proper_coloring_violation(r_bb.certificate_coloring, sub) is None
        assert is_good(r_seq.certificate_sequence, sub)


@given(small_instances())
@settings(max_examples=60)
def test_chromatic_number_matches_brute_force(case):
    g, verts = case
    sub = induced_subgraph(g, verts)
    edges = [(tuple(u), tuple(v)) for u, v in sub.edges()]
    want = brute_chromatic([tuple(v) for v in verts], edges)
    res = chromatic_number(sub, TIGHT)
    assert res.conclusive and res.chi == want


@given(small_instances(), st.integers(1, 3))
@settings(max_examples=60)
def test_colorability_is_monotone_in_k(case, k):
    g, verts = case
    sub = induced_subgraph(g, verts)
    first = k_colorable_via_sequences(g.n_points, k, sub, TIGHT).decision
    second = k_colorable_via_sequences(g.n_points, k + 1, sub, TIGHT).decision
    assert not (first == "yes" and second == "no")


def test_chromatic_result_json():
    res = chromatic_number(build_shift_graph(5), TIGHT)
    d = res.to_json_dict()
    assert d["chi"] == 3 and d["conclusive"] is True
    assert d["coloring"]["k"] == 3
    assert d["refutation"]["k"] == 2
    assert all(q["decision"] != "inconclusive" for q in d["queries"])
    assert {q["engine"] for q in d["queries"]} == {"sequence", "bb"}
