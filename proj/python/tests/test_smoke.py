"""Smoke tests for the python bindings: exact values on small fixtures."""

from fractions import Fraction

import pytest

try:
    import cdpack as m
except ImportError:
    import _cdpack as m


def cycle(n):
    return m.Graph(n, [(v, v + 1) for v in range(n - 1)] + [(0, n - 1)])


def path(n):
    return m.Graph(n, [(v, v + 1) for v in range(n - 1)])


def star(leaves):
    return m.Graph(leaves + 1, [(0, leaf) for leaf in range(1, leaves + 1)])


def test_graph_basics():
    g = path(3)
    assert g.n == 3
    assert g.neighbors(1) == [0, 2]
    assert m.closed_neighborhood(g, 1) == [0, 1, 2]
    assert m.boundary(g, [0]) == [1]
    assert m.is_dominating(g, [1])
    assert not m.is_dominating(g, [])
    assert m.is_connected_dominating(cycle(5), [0, 1, 2])


def test_separator_is_exact():
    cert = m.min_capacity_separator(cycle(5), [1] * 5)
    assert cert.capacity == 2
    heavy = m.min_vertex_cut(path(3), [1, Fraction(7, 2), 1], 0, 2)
    assert heavy.capacity == Fraction(7, 2)
    assert heavy.separator == [1]
    with pytest.raises(m.CompleteGraphError):
        m.min_capacity_separator(m.Graph(3, [(0, 1), (0, 2), (1, 2)]), [1, 1, 1])


def test_primal_dual_star():
    run = m.primal_dual_ds(star(3), [2, 1, 1, 1])
    assert run.dominating_set == [0]
    assert run.dual == [Fraction(1, 2)] * 4
    assert len(run.trace.iterations) == 1
    assert run.trace.iterations[0].raise_amount == Fraction(1, 2)
    holds, worst = m.check_gamma_bound(star(3), run.trace, run.dominating_set, 3)
    assert holds and worst == 1
    assert m.check_witness_lemma(star(3), run.trace, run.dominating_set)


def test_cds_lp_and_rounding():
    lp = m.solve_cds_lp(cycle(5), [1] * 5)
    assert lp.status == "optimal"
    assert lp.value == Fraction(5, 2)
    rounded = m.round_cds(cycle(5), [1] * 5, lp.x)
    assert m.is_connected_dominating(cycle(5), rounded.cds)
    assert rounded.cost == 3
    assert rounded.certified_r == Fraction(6, 5)


def test_exact_packing_oracle():
    value, packing = m.exact_fractional_cds_packing(cycle(5), [1] * 5)
    assert value == Fraction(5, 3)
    assert packing.size() == Fraction(5, 3)


def test_capacitated_packing_pipeline():
    packed = m.pack_capacitated(cycle(5), [1] * 5)
    assert packed.k == 2
    assert packed.packing.size() == packed.k / packed.rho
    report = m.verify_packing(cycle(5), [1] * 5, packed.packing)
    assert report.ok
    # deterministic runs
    again = m.pack_capacitated(cycle(5), [1] * 5)
    assert again.packing.entries == packed.packing.entries


def test_verify_packing_flags_bad_entries():
    bogus = m.Packing([([0], Fraction(1))])
    report = m.verify_packing(path(3), [1, 1, 1], bogus)
    assert not report.ok
    assert len(report.violations) == 1


def test_instances_round_trip():
    inst = m.make_grid_subgraph(3, 3, seed=4, keep_percent=40)
    text = m.serialize_instance(inst)
    again = m.parse_instance(text)
    assert m.serialize_instance(again) == text
    assert again.graph.is_connected()


def test_rejects_floats():
    with pytest.raises(TypeError):
        m.primal_dual_ds(path(3), [1.5, 1, 1])
