"""Property suites over randomly generated graphs and arrangements."""

import itertools

import hypothesis.strategies as st
from hypothesis import assume, given, settings

from conftest import certifiable_multipartite_graphs, graphs, multipartite_graphs, relabelled
from horicert import (
    ContractionCertificate,
    WeightedMultigraph,
    adjunction_genus,
    brute_force_oracle,
    canonical_form,
    contract,
    contract_multipartite,
    decide_contractible,
    feasible_l_range,
    fibers_and_sections,
    general_lines,
    lift_certificate,
    multipartite_partition,
    pairwise_nodes,
    total_class,
    verify_certificate,
)

BIG = settings(max_examples=1000, deadline=None, derandomize=True)


@BIG
@given(graphs(min_vertices=2), st.data())
def test_contract_conserves_weight_and_counts(g, data):
    pairs = g.adjacent_pairs()
    assume(pairs)
    u, v = data.draw(st.sampled_from(pairs))
    h = contract(g, (u, v))
    assert h.total_weight() == g.total_weight()
    assert h.vertex_count == g.vertex_count - 1
    assert h.total_multiplicity() == g.total_multiplicity() - g.multiplicity(u, v)


@BIG
@given(multipartite_graphs(), st.data())
def test_contraction_preserves_complete_multipartiteness(g, data):
    pairs = g.adjacent_pairs()
    assume(pairs)
    u, v = data.draw(st.sampled_from(pairs))
    h = contract(g, (u, v))
    assert multipartite_partition(h) is not None


@BIG
@given(certifiable_multipartite_graphs(), st.data())
def test_lift_survives_random_augmentation(g, data):
    cert = contract_multipartite(g)
    assert verify_certificate(cert)
    # augment: raise some weights and multiplicities, add edges anywhere
    verts = g.vertices
    weights = {v: g.weight(v) + data.draw(st.integers(0, 2)) for v in verts}
    bumps = data.draw(
        st.lists(
            st.tuples(st.sampled_from(verts), st.sampled_from(verts), st.integers(1, 2)),
            max_size=6,
        )
    )
    edges = [(u, v, m) for u, v, m in g.edge_items()]
    edges += [(u, v, m) for u, v, m in bumps if u != v]
    host = WeightedMultigraph(weights, edges)
    lifted = lift_certificate(cert, host, {v: v for v in verts})
    assert verify_certificate(lifted)
    assert [s.l for s in lifted.steps] == [s.l for s in cert.steps]


@BIG
@given(
    st.sampled_from(["lines", "fn"]),
    st.integers(0, 3),
    st.integers(1, 7),
    st.integers(0, 6),
)
def test_dual_graph_genus_identity(kind, N, a, b):
    if kind == "lines":
        arr = general_lines(a)
    else:
        assume(a + b >= 1)
        arr = fibers_and_sections(N, a, b)
    expected = pairwise_nodes(arr) - (arr.size - 1)
    assert adjunction_genus(total_class(arr)) == expected


@BIG
@given(graphs(max_vertices=6), st.permutations(["w1", "w2", "w3", "w4", "w5", "w6"]))
def test_canonical_form_is_relabelling_invariant(g, new_names):
    mapping = dict(zip(g.vertices, new_names))
    assert canonical_form(g) == canonical_form(relabelled(g, mapping))


@given(graphs(max_vertices=5), graphs(max_vertices=5))
@settings(max_examples=300, deadline=None, derandomize=True)
def test_canonical_form_separates_obvious_invariants(g, h):
    wts = sorted(g.weight(v) for v in g.vertices)
    wts2 = sorted(h.weight(v) for v in h.vertices)
    degs = sorted(g.degree(v) for v in g.vertices)
    degs2 = sorted(h.degree(v) for v in h.vertices)
    if wts != wts2 or degs != degs2:
        assert canonical_form(g) != canonical_form(h)


@given(graphs(min_vertices=2, max_vertices=5, min_weight=0))
@settings(max_examples=1000, deadline=None, derandomize=True)
def test_feasible_range_is_the_predicted_interval(g):
    for u, v in g.adjacent_pairs():
        mult = g.multiplicity(u, v)
        others_ok = all(g.degree(x) >= 3 for x in g.vertices if x not in (u, v))
        for a, b in ((u, v), (v, u)):
            got = feasible_l_range(g, a, b)
            if not others_ok:
                assert got == ()
                continue
            lo = max(0, 3 - g.degree(a) + mult, 3 - g.degree(b) + mult)
            hi = min(mult - 1, g.weight(a) - 1, g.weight(b) - 2)
            assert got == tuple(range(lo, hi + 1))


@given(graphs(max_vertices=4, min_weight=0, max_weight=5))
@settings(max_examples=500, deadline=None, derandomize=True)
def test_search_matches_oracle_on_random_graphs(g):
    cert = decide_contractible(g)
    assert (cert is not None) == brute_force_oracle(g, max_total_multiplicity=30)
    if cert is not None:
        assert verify_certificate(cert)


@given(graphs(max_vertices=6))
@settings(max_examples=300, deadline=None, derandomize=True)
def test_search_certificates_always_verify(g):
    cert = decide_contractible(g)
    if cert is not None:
        assert verify_certificate(cert)
        assert cert.initial == g


@given(certifiable_multipartite_graphs())
@settings(max_examples=200, deadline=None, derandomize=True)
def test_multipartite_certificates_always_verify(g):
    cert = contract_multipartite(g)
    assert verify_certificate(cert)
    assert cert.initial == g


@given(graphs())
@settings(max_examples=300, deadline=None, derandomize=True)
def test_graph_json_round_trip(g):
    doc = g.to_json_dict()
    assert WeightedMultigraph.from_json_dict(doc) == g


@given(certifiable_multipartite_graphs())
@settings(max_examples=100, deadline=None, derandomize=True)
def test_certificate_json_round_trip(g):
    cert = contract_multipartite(g)
    again = ContractionCertificate.from_json_dict(cert.to_json_dict())
    assert again == cert


@given(multipartite_graphs(max_classes=4, max_class_size=3))
@settings(max_examples=300, deadline=None, derandomize=True)
def test_partition_matches_non_adjacency(g):
    part = multipartite_partition(g)
    assert part is not None
    for u, v in itertools.combinations(g.vertices, 2):
        same = part.class_of(u) == part.class_of(v)
        assert same == (g.multiplicity(u, v) == 0)


@given(graphs(min_vertices=2, max_vertices=6, min_weight=1))
@settings(max_examples=300, deadline=None, derandomize=True)
def test_rdeg_degree_relation(g):
    for v in g.vertices:
        assert g.rdeg(v) <= g.degree(v)
        simple = all(m == 1 for u, w, m in g.edge_items() if v in (u, w))
        assert (g.rdeg(v) == g.degree(v)) == simple
