import pytest
from hypothesis import given, settings

from ngverify import families as fam
from ngverify.graph import complement, empty_graph, from_edge_list
from ngverify.invariants import (
    SolverGuardError,
    alpha_bruteforce,
    alpha_exact,
    beta,
    has_perfect_matching,
    invariant_report,
    is_independent,
    is_matching,
    matching_bruteforce,
    matching_number,
    matching_via_line_graph,
)

from conftest import max_clique_bruteforce, min_vertex_cover_bruteforce, random_graph
from test_graph import graphs


def test_alpha_bruteforce_examples():
    assert alpha_bruteforce(fam.complete(5)) == (1, [0])
    assert alpha_bruteforce(empty_graph(4)) == (4, [0, 1, 2, 3])
    assert alpha_bruteforce(fam.cycle(5)) == (2, [0, 2])


def test_alpha_bruteforce_guard():
    with pytest.raises(SolverGuardError, match="n <= 25"):
        alpha_bruteforce(empty_graph(26))


def test_alpha_exact_examples():
    assert alpha_exact(complement(fam.wheel(4)))[0] == 3
    assert alpha_exact(fam.complete_bipartite(2, 3))[0] == 3
    assert alpha_exact(fam.helm(4))[0] == 5


def test_alpha_exact_degenerate_graphs():
    assert alpha_exact(empty_graph(0)) == (0, [])
    assert alpha_exact(empty_graph(1)) == (1, [0])
    assert alpha_exact(empty_graph(7)) == (7, list(range(7)))
    assert matching_number(empty_graph(0)) == (0, [])
    assert matching_number(empty_graph(5))[0] == 0
    assert beta(empty_graph(3)) == 0


def test_alpha_exact_is_deterministic():
    g = fam.armed_crown(3, 5)
    assert alpha_exact(g) == alpha_exact(fam.armed_crown(3, 5))


def test_beta_examples():
    assert beta(fam.complete(5)) == 4
    assert beta(complement(fam.complete(5))) == 0
    assert beta(empty_graph(4)) == 0
    assert beta(fam.helm(3)) == 3


def test_matching_examples():
    assert matching_number(fam.path(4)) == (2, [(0, 1), (2, 3)])
    size, witness = matching_number(fam.complete(4))
    assert size == 2 and is_matching(fam.complete(4), witness)
    assert {tuple(sorted(v for e in witness for v in e))} == {(0, 1, 2, 3)}
    assert matching_bruteforce(fam.cycle(5))[0] == 2
    assert matching_number(fam.cycle(5))[0] == 2


def test_matching_via_line_graph_examples():
    assert matching_via_line_graph(fam.cycle(6)) == 3
    assert matching_via_line_graph(fam.complete(3)) == 1
    assert matching_bruteforce(fam.sunlet(4))[0] == 4
    assert matching_via_line_graph(fam.sunlet(4)) == 4


def test_matching_via_line_graph_guard():
    with pytest.raises(SolverGuardError, match="e <= 64"):
        matching_via_line_graph(fam.complete(12))


def test_has_perfect_matching_examples():
    assert has_perfect_matching(fam.complete(2))
    assert not has_perfect_matching(fam.complete(3))
    for n in (3, 4, 5):
        assert matching_bruteforce(fam.sunlet(n))[0] == n
        assert has_perfect_matching(fam.sunlet(n))
    # even order but no perfect matching: a star
    assert not has_perfect_matching(fam.complete_bipartite(1, 3))


def test_blossom_needs_contraction():
    # Two triangles joined by a path: greedy order leaves an odd blossom to shrink.
    g = from_edge_list(
        8, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (5, 7)]
    )
    assert matching_number(g)[0] == matching_bruteforce(g)[0] == 4
    petersen = from_edge_list(
        10,
        [(i, (i + 1) % 5) for i in range(5)]
        + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        + [(i, i + 5) for i in range(5)],
    )
    assert matching_number(petersen)[0] == 5


def test_oracle_agreement_on_families(family_sweep):
    for name, g in family_sweep:
        if g.n > 20:
            continue
        for h in (g, complement(g)):
            size, witness = alpha_exact(h)
            assert size == alpha_bruteforce(h)[0], name
            assert len(witness) == size and is_independent(h, witness), name


def test_oracle_agreement_on_random_graphs(rng):
    checked = 0
    for n in range(4, 19):
        for p in (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9):
            for _ in range(4):
                g = random_graph(rng, n, p)
                assert alpha_exact(g)[0] == alpha_bruteforce(g)[0]
                checked += 1
    assert checked >= 500


def test_gallai_against_bruteforce_cover(rng):
    for _ in range(150):
        g = random_graph(rng, rng.randint(1, 14), rng.random())
        assert beta(g) == min_vertex_cover_bruteforce(g)
        assert alpha_exact(g)[0] + beta(g) == g.n


def test_complement_clique_duality(rng):
    for _ in range(150):
        g = random_graph(rng, rng.randint(1, 16), rng.random())
        assert alpha_exact(complement(g))[0] == max_clique_bruteforce(g)


def test_line_graph_law_on_families(family_sweep):
    for name, g in family_sweep:
        if g.edge_count <= 64:
            assert matching_via_line_graph(g) == matching_number(g)[0], name


def test_matching_against_bruteforce(rng):
    count = 0
    while count < 400:
        g = random_graph(rng, rng.randint(2, 12), rng.random())
        if g.edge_count > 16:
            continue
        size, witness = matching_number(g)
        assert size == matching_bruteforce(g)[0]
        assert is_matching(g, witness) and len(witness) == size
        count += 1


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=14))
def test_alpha_exact_matches_bruteforce_property(g):
    size, witness = alpha_exact(g)
    ref_size, ref_witness = alpha_bruteforce(g)
    assert size == ref_size
    assert is_independent(g, witness) and is_independent(g, ref_witness)
    assert ref_witness == sorted(ref_witness)


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=12))
def test_matching_properties(g):
    size, witness = matching_number(g)
    assert is_matching(g, witness) and len(witness) == size
    assert size <= g.n // 2
    assert (size == g.n // 2 and g.n % 2 == 0) == has_perfect_matching(g)
    if g.edge_count <= 16:
        assert size == matching_bruteforce(g)[0]
    if g.edge_count <= 40:
        assert size == matching_via_line_graph(g)


def test_invariant_report_fields():
    r = invariant_report(fam.complete(5))
    d = r.to_dict()
    assert (d["n"], d["m"], d["alpha"], d["beta"], d["nu"]) == (5, 10, 1, 4, 2)
    assert (d["m_c"], d["alpha_c"], d["beta_c"], d["nu_c"]) == (0, 5, 0, 0)
    assert d["alpha_witness_c"] == [0, 1, 2, 3, 4]
    assert (r.ng_sum, r.ng_product) == (4, 0)


def test_invariant_report_invariants(family_sweep):
    for name, g in family_sweep:
        r = invariant_report(g)
        assert r.alpha + r.beta == r.n and r.alpha_c + r.beta_c == r.n, name
        assert is_independent(g, r.alpha_witness) and len(r.alpha_witness) == r.alpha
        assert is_matching(g, r.nu_witness) and len(r.nu_witness) == r.nu
        assert r.nu <= r.n // 2 and r.nu_c <= r.n // 2
        assert r.m + r.m_c == r.n * (r.n - 1) // 2
