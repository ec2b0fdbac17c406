"""2-cycle forms: axioms, named constructions, lattices and (un)contraction."""

import itertools

import oracles
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twocycles.catalog import (
    complete_bipartite_graph,
    complete_graph,
    cube_graph,
    full_subdivision,
    prism_graph,
    width0_quad_graph,
    width_positive_quad_graph,
)
from twocycles.forms import (
    Form2,
    FormError,
    SigmaMode,
    circuit_pair_form,
    contract_form,
    elementary_k5_form,
    elementary_k33_form,
    form_vector,
    is_two_cycle,
    kuratowski_form,
    pair_key,
    puv,
    quad_form,
    sigma_apply,
    subdivide_form,
    transpose,
    two_cycle_lattice,
    uncontract_form,
    vector_form,
)
from twocycles.graph import Graph, contract, subdivide
from twocycles.intlattice import is_sublattice, lattice_sum
from twocycles.patterns import (
    enumerate_cycles,
    enumerate_disjoint_cycle_pairs,
    enumerate_kuratowski_subdivisions,
    enumerate_quads,
)


@st.composite
def graphs(draw, max_n=6, max_m=8):
    n = draw(st.integers(2, max_n))
    pairs = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda p: p[0] != p[1])
    return Graph(n, draw(st.lists(pairs, max_size=max_m)))


@st.composite
def sparse_forms(draw, m=8):
    keys = st.tuples(st.integers(0, m - 1), st.integers(0, m - 1))
    return Form2(draw(st.dictionaries(keys, st.integers(-4, 4), max_size=12)))


def k5_edge(g, i, j):
    (e,) = g.edges_between(i, j)
    return e


def two_triangles():
    return Graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])


def _combination(lat, coeffs):
    return [sum(c * b[i] for c, b in zip(coeffs, lat.basis)) for i in range(lat.ambient_dim)]


# -- the 2-cycle test -----------------------------------------------------------------


def test_zero_form_is_a_two_cycle():
    assert is_two_cycle(complete_graph(4), Form2())


def test_adjacent_entry_is_reported():
    g = complete_graph(4)
    check = is_two_cycle(g, Form2({(0, 1): 1}))
    assert not check and "share an end" in check.report


def test_non_circulation_is_reported():
    g = two_triangles()
    check = is_two_cycle(g, Form2({(0, 3): 1}))
    assert not check and "circulation" in check.report


def test_sym_mode_rejects_asymmetric_form():
    g = two_triangles()
    c, d = enumerate_cycles(g)
    x = circuit_pair_form(g, c, d)
    assert is_two_cycle(g, x)
    assert not is_two_cycle(g, x, SigmaMode.SYM)
    assert is_two_cycle(g, sigma_apply(x, "sym"), SigmaMode.SYM)
    assert is_two_cycle(g, sigma_apply(x, "skew"), SigmaMode.SKEW)


def test_unknown_mode():
    with pytest.raises(FormError):
        SigmaMode.parse("twisted")


# -- transpose and sigma ----------------------------------------------------------------


@given(sparse_forms())
def test_transpose_is_an_involution(d):
    assert transpose(transpose(d)) == d


@given(sparse_forms())
def test_sigma_images(d):
    s, k = sigma_apply(d, SigmaMode.SYM), sigma_apply(d, SigmaMode.SKEW)
    assert transpose(s) == s
    assert transpose(k) == -k
    assert sigma_apply(d, SigmaMode.PLAIN) == d
    assert s + k == d * 2


@given(sparse_forms())
def test_vector_round_trip(d):
    key = sorted({k for k in d.entries} | {(0, 0)})
    assert Form2.from_vector(d.to_vector(key), key) == d


def test_form_list_round_trip():
    d = Form2({(0, 3): 2, (3, 0): -1})
    assert Form2.from_list(d.to_list()) == d
    with pytest.raises(FormError):
        Form2.from_list([[0, 1]])


# -- circuit pairs ------------------------------------------------------------------------


def test_circuit_pair_on_two_triangles():
    g = complete_graph(6)
    tri = [c for c in enumerate_cycles(g) if c.length == 3]
    c = next(x for x in tri if x.vertex_set == {0, 1, 2})
    d = next(x for x in tri if x.vertex_set == {3, 4, 5})
    x = circuit_pair_form(g, c, d)
    assert len(x.entries) == 9 and set(x.entries.values()) <= {1, -1}
    assert is_two_cycle(g, x)
    assert circuit_pair_form(g, c, d.reversed()) == -x


def test_circuit_pair_rejects_shared_vertex():
    g = complete_graph(5)
    tri = [c for c in enumerate_cycles(g) if c.length == 3]
    c = next(x for x in tri if x.vertex_set == {0, 1, 2})
    d = next(x for x in tri if x.vertex_set == {2, 3, 4})
    with pytest.raises(FormError, match="share vertex 2"):
        circuit_pair_form(g, c, d)


def test_k5_has_no_circuit_pairs():
    assert enumerate_disjoint_cycle_pairs(complete_graph(5)) == []


@given(graphs(max_n=7, max_m=10))
@settings(max_examples=30, deadline=None)
def test_circuit_pairs_pass(g):
    for c, d in enumerate_disjoint_cycle_pairs(g):
        assert is_two_cycle(g, circuit_pair_form(g, c, d))


# -- Kuratowski forms -------------------------------------------------------------------


def test_k5_values():
    g = complete_graph(5)
    k = elementary_k5_form()
    assert k[(k5_edge(g, 0, 1), k5_edge(g, 2, 3))] == 1
    assert k[(k5_edge(g, 0, 1), k5_edge(g, 2, 4))] == -1  # sgn(0 1 2 4 3)


def test_k5_value_formula_on_every_pair():
    from twocycles.forms import k5_model_value

    assert k5_model_value((0, 1), (2, 3)) == 1
    assert k5_model_value((0, 1), (3, 2)) == -1
    assert k5_model_value((0, 1), (1, 2)) == 0


def test_k33_value():
    g = complete_bipartite_graph(3, 3)
    k = elementary_k33_form()
    (e,) = g.edges_between(0, 3)
    (f,) = g.edges_between(1, 4)
    assert k[(e, f)] == 1
    (f2,) = g.edges_between(1, 5)
    assert k[(e, f2)] == -1


@pytest.mark.parametrize("labeling", list(itertools.permutations(range(5)))[::17])
def test_elementary_k5_is_symmetric_two_cycle(labeling):
    k = elementary_k5_form(labeling)
    assert is_two_cycle(complete_graph(5), k, SigmaMode.SYM)
    assert k == elementary_k5_form() or k == -elementary_k5_form()


@pytest.mark.parametrize("labeling", [(0, 1, 2, 3, 4, 5), (1, 0, 2, 3, 4, 5), (2, 0, 1, 5, 3, 4)])
def test_elementary_k33_is_symmetric_two_cycle(labeling):
    assert is_two_cycle(complete_bipartite_graph(3, 3), elementary_k33_form(labeling), SigmaMode.SYM)


def test_bad_labeling():
    with pytest.raises(FormError):
        elementary_k5_form((0, 1, 2, 3, 3))
    with pytest.raises(FormError):
        elementary_k33_form((0, 1, 2, 3, 4))


def test_subdivided_form_duplicates_block():
    g = complete_graph(5)
    g2, mapping = subdivide(g, {0: 1})
    k2 = subdivide_form(elementary_k5_form(), mapping)
    assert is_two_cycle(g2, k2)
    a, b = mapping[0]
    assert k2.row(a) == k2.row(b)


@pytest.mark.parametrize("g", [complete_graph(5), full_subdivision(complete_bipartite_graph(3, 3)), cube_graph(),
                               width0_quad_graph()])
def test_kuratowski_forms_are_symmetric_two_cycles(g):
    for h in enumerate_kuratowski_subdivisions(g):
        d = kuratowski_form(g, h)
        assert is_two_cycle(g, d, SigmaMode.SYM)
        assert d.support_edges() == set(h.edge_set)
        assert kuratowski_form(g, h, -1) == -d


def test_kuratowski_form_on_k5_spans():
    g = complete_graph(5)
    (h,) = enumerate_kuratowski_subdivisions(g)
    d = kuratowski_form(g, h)
    assert d in (elementary_k5_form(), -elementary_k5_form())
    lat = two_cycle_lattice(g)
    assert lat.rank == 1 and lat.basis[0] in (form_vector(g, d), tuple(-x for x in form_vector(g, d)))


# -- quads --------------------------------------------------------------------------------


@pytest.mark.parametrize("g", [complete_bipartite_graph(3, 4), width0_quad_graph(), width_positive_quad_graph()])
def test_quad_forms_are_two_cycles(g):
    for q in enumerate_quads(g):
        for side in q.left_sides():
            for first in range(3):
                assert is_two_cycle(g, quad_form(g, q, side, first))


def test_quad_form_not_symmetric_on_k34():
    g = complete_bipartite_graph(3, 4)
    for q in enumerate_quads(g):
        d = quad_form(g, q, q.left_sides()[0])
        assert d and transpose(d) != d


def test_quad_form_bad_side():
    g = complete_bipartite_graph(3, 4)
    q = enumerate_quads(g)[0]
    with pytest.raises(FormError):
        quad_form(g, q, (q.a, q.b))
    with pytest.raises(FormError):
        quad_form(g, q, q.left_sides()[0], first=3)


# -- lattices ------------------------------------------------------------------------------


@pytest.mark.parametrize(
    "g, mode, expected",
    [(complete_graph(5), "plain", 1), (complete_graph(4), "plain", 0),
     (complete_bipartite_graph(3, 3), "skew", 0), (complete_bipartite_graph(3, 3), "plain", 1)],
)
def test_rank_examples(g, mode, expected):
    assert two_cycle_lattice(g, mode).rank == expected


@pytest.mark.parametrize("g", [complete_graph(5), complete_bipartite_graph(3, 3), two_triangles(), prism_graph(),
                               Graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (3, 4)])])
@pytest.mark.parametrize("mode", ["plain", "sym", "skew"])
def test_rank_matches_dense_oracle(g, mode):
    assert two_cycle_lattice(g, mode).rank == oracles.two_cycle_rank(g, mode)


@given(graphs())
@settings(max_examples=25, deadline=None)
def test_rank_matches_dense_oracle_random(g):
    assert two_cycle_lattice(g).rank == oracles.two_cycle_rank(g)


@given(graphs(max_n=7, max_m=10), st.lists(st.integers(-3, 3), min_size=8, max_size=8))
@settings(max_examples=40, deadline=None)
def test_lattice_elements_pass_and_sigma_lands(g, coeffs):
    lat = two_cycle_lattice(g)
    d = vector_form(g, _combination(lat, coeffs))
    assert is_two_cycle(g, d)
    for mode in ("sym", "skew"):
        s = sigma_apply(d, mode)
        assert is_two_cycle(g, s, mode)
        assert form_vector(g, s) in two_cycle_lattice(g, mode)


@given(graphs(max_n=7, max_m=10))
@settings(max_examples=30, deadline=None)
def test_sym_plus_skew_inside_plain(g):
    both = lattice_sum(two_cycle_lattice(g, "sym"), two_cycle_lattice(g, "skew"))
    assert is_sublattice(both, two_cycle_lattice(g))


@pytest.mark.parametrize("g", [complete_graph(5), complete_bipartite_graph(3, 3), two_triangles()])
def test_rank_invariant_under_subdivision(g):
    for mode in SigmaMode:
        assert two_cycle_lattice(full_subdivision(g), mode).rank == two_cycle_lattice(g, mode).rank


def test_pair_key_excludes_adjacent():
    g = complete_graph(4)
    assert all(not g.adjacent(e, f) for e, f in pair_key(g))
    assert len(pair_key(g)) == 6


# -- P_uv, contraction and lifting --------------------------------------------------------


def _subdivided_k5():
    g, mapping = subdivide(complete_graph(5), {0: 1})
    return g, subdivide_form(elementary_k5_form(), mapping), mapping


def test_contract_then_uncontract_is_identity():
    g, d, mapping = _subdivided_k5()
    e = mapping[0][0]
    u, v = g.ends(e)
    assert not puv(g, d, u, v) and not puv(g, d, v, u)
    g2, d2 = contract_form(g, d, e)
    assert is_two_cycle(g2, d2)
    assert uncontract_form(g, d2, e) == d


def test_contract_precondition_names_witness():
    g = complete_graph(5)
    with pytest.raises(FormError, match="P_uv"):
        contract_form(g, elementary_k5_form(), 0)


@pytest.mark.parametrize("g", [complete_graph(5), complete_bipartite_graph(3, 3), prism_graph(),
                               complete_bipartite_graph(3, 4)])
def test_uncontract_then_contract_is_identity(g):
    for e in range(g.m):
        g2, _ = contract(g, e)
        for mode in SigmaMode:
            lat = two_cycle_lattice(g2, mode)
            for row in lat.basis:
                d2 = vector_form(g2, row)
                d = uncontract_form(g, d2, e, mode)
                assert is_two_cycle(g, d, mode)
                u, v = g.ends(e)
                assert not puv(g, d, u, v) and not puv(g, d, v, u)
                assert contract_form(g, d, e)[1] == d2


def test_uncontract_rejects_non_cycle():
    g = complete_graph(5)
    with pytest.raises(FormError):
        uncontract_form(g, Form2({(0, 5): 1}), 0)


def test_lifted_circuit_pair_is_circuit_pair():
    # two triangles joined by an edge; contracting the bridge keeps them disjoint
    g = Graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)])
    h = Graph(7, list(g.edges[:6]) + [(2, 6), (6, 3)])
    g2, emap = contract(h, 7)
    assert g2.edges == g.edges
    c, d = enumerate_disjoint_cycle_pairs(g2)[0]
    lifted = uncontract_form(h, circuit_pair_form(g2, c, d), 7)
    pairs = [circuit_pair_form(h, x, y) for x, y in enumerate_disjoint_cycle_pairs(h)]
    assert lifted in pairs or -lifted in pairs
