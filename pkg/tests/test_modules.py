"""Generator spans, separations, linkages, decomposition and theorem drivers."""

import itertools

import networkx as nx
import pytest
import sympy

from twocycles.catalog import (
    complete_bipartite_graph,
    complete_graph,
    cube_graph,
    path_graph,
    petersen_graph,
    prism_graph,
    width0_quad_graph,
    width_positive_quad_graph,
)
from twocycles.forms import (
    Form2,
    FormError,
    SigmaMode,
    elementary_k5_form,
    is_two_cycle,
    quad_form,
    sigma_apply,
    two_cycle_lattice,
    vector_form,
)
from twocycles.graph import Graph, enumerate_separations, separation_from_sides
from twocycles.intlattice import is_sublattice, zero_lattice
from twocycles.modules import (
    THEOREMS,
    build_B,
    build_B_sigma_sep,
    build_B_uv,
    build_kuratowski_span,
    build_quad_span,
    build_S_sigma,
    decompose,
    is_RS_connected,
    lifted_pairs_are_pairs,
    linkage_module,
    sym_quad_certificate,
    tensor_key,
    verify_contraction_round_trip,
    verify_separation,
    verify_theorem,
)
from twocycles.patterns import Budget, enumerate_quads


def two_triangles_at_vertex():
    return Graph(5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)])


def two_triangles_two_edges():
    return Graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4)])


def k4s_on_an_edge():
    # K4 on {0,1,2,3} and K4 on {2,3,4,5} sharing the edge 2-3
    edges = list(itertools.combinations(range(4), 2))
    edges += [e for e in itertools.combinations((2, 3, 4, 5), 2) if e != (2, 3)]
    return Graph(6, edges)


# -- spans ------------------------------------------------------------------------------


def test_b_examples():
    assert build_B(complete_graph(5)).span.rank == 0
    assert build_B(cube_graph()).span == two_cycle_lattice(cube_graph())
    k33 = complete_bipartite_graph(3, 3)
    assert build_B(k33, SigmaMode.SKEW).span.rank == 0 == two_cycle_lattice(k33, SigmaMode.SKEW).rank


def test_b_uv_examples():
    assert build_B_uv(complete_graph(5), 0, 1).span.rank == 0
    g = prism_graph()
    buv = build_B_uv(g, 0, 3).span
    assert buv.rank >= 1
    assert is_sublattice(buv, build_B(g).span)


@pytest.mark.parametrize("g", [prism_graph(), cube_graph(), petersen_graph()])
def test_b_uv_inside_b(g):
    b = build_B(g).span
    for u, v in [(0, 5), (1, 6), (2, 7)]:
        assert is_sublattice(build_B_uv(g, u, v).span, b)


def test_kuratowski_and_quad_spans():
    k5 = complete_graph(5)
    assert build_kuratowski_span(k5).span == two_cycle_lattice(k5)
    assert build_quad_span(k5).span.rank == 0
    for g in (complete_bipartite_graph(3, 4), width0_quad_graph(), width_positive_quad_graph()):
        sym_quads = build_quad_span(g, SigmaMode.SYM).span
        assert is_sublattice(sym_quads, build_kuratowski_span(g, SigmaMode.SYM).span)


def test_generators_are_two_cycles():
    g = complete_bipartite_graph(3, 4)
    for mode in SigmaMode:
        for gs in (build_B(g, mode), build_kuratowski_span(g, mode), build_quad_span(g, mode)):
            for gen in gs.generators:
                assert is_two_cycle(g, gen.form, mode)


def test_kuratowski_generators_in_skew_mode_are_absent():
    assert len(build_kuratowski_span(complete_graph(5), SigmaMode.SKEW)) == 0


# -- separations --------------------------------------------------------------------------


def test_one_separation_at_a_vertex():
    g = two_triangles_at_vertex()
    (sep,) = enumerate_separations(g, 1)
    for mode in SigmaMode:
        assert build_S_sigma(g, sep, mode).rank == 0
        assert build_B_sigma_sep(g, sep, mode).span.rank == 0


def test_two_separation_of_joined_triangles():
    g = two_triangles_two_edges()
    sep = separation_from_sides(g, [0, 1], [2])
    # the only cross pair is the two triangles; plain mode keeps both orders
    expected = {SigmaMode.PLAIN: 2, SigmaMode.SYM: 1, SigmaMode.SKEW: 1}
    for mode, r in expected.items():
        S = build_S_sigma(g, sep, mode)
        assert S.rank == r and S == build_B_sigma_sep(g, sep, mode).span


@pytest.mark.parametrize("g", [two_triangles_two_edges(), prism_graph(), k4s_on_an_edge(),
                               complete_bipartite_graph(3, 4), cube_graph()])
def test_b_sigma_inside_s_sigma(g):
    for k in (1, 2, 3):
        for sep in enumerate_separations(g, k):
            for mode in SigmaMode:
                assert is_sublattice(build_B_sigma_sep(g, sep, mode).span, build_S_sigma(g, sep, mode))


@pytest.mark.parametrize("g", [two_triangles_two_edges(), k4s_on_an_edge(), complete_bipartite_graph(3, 4)])
def test_separation_verdicts_pass(g):
    for k in (1, 2, 3):
        for sep in enumerate_separations(g, k):
            for mode in SigmaMode:
                assert verify_separation(g, sep, mode).status == "pass"


# -- linkages --------------------------------------------------------------------------


def _brute_linkage_rank(g, R1, R2):
    h = nx.Graph([g.ends(e) for e in range(g.m)])
    h.add_nodes_from(g.vertices)
    key = tensor_key(R1, R2)
    rows = []
    for r1, r2 in itertools.combinations(sorted(R1), 2):
        for p in nx.all_simple_paths(h, r1, r2):
            rest = h.subgraph(set(h) - set(p))
            for s1, s2 in itertools.combinations(sorted(R2), 2):
                if s1 in rest and s2 in rest and nx.has_path(rest, s1, s2):
                    for _ in nx.all_simple_paths(rest, s1, s2):
                        row = [0] * len(key)
                        for (x, y), c in (((r1, s1), 1), ((r1, s2), -1), ((r2, s1), -1), ((r2, s2), 1)):
                            row[key.index((x, y))] += c
                        rows.append(row)
    return sympy.Matrix(rows).rank() if rows else 0


def test_linkage_examples():
    g = Graph(4, [(0, 1), (2, 3)])
    lat = linkage_module(g, {0, 1}, {2, 3})
    assert lat.rank == 1 and lat.basis[0] in {(1, -1, -1, 1), (-1, 1, 1, -1)}
    star = Graph(4, [(0, 1), (0, 2), (0, 3)])
    assert linkage_module(star, {1, 2, 3}, {1, 2, 3}).rank == 0


@pytest.mark.parametrize(
    "g, R1, R2",
    [
        (complete_bipartite_graph(3, 3).edge_subgraph([e for e, (t, h) in enumerate(complete_bipartite_graph(3, 3).edges)
                                                        if 0 not in (t, h) and 3 not in (t, h)]), {4, 5}, {1, 2}),
        (complete_graph(4), range(4), range(4)),
        (cube_graph(), {0, 1, 2, 3}, {4, 5, 6, 7}),
        (prism_graph(), {0, 1, 2}, {3, 4, 5}),
    ],
)
def test_linkage_rank_matches_brute_force(g, R1, R2):
    assert linkage_module(g, R1, R2).rank == _brute_linkage_rank(g, set(R1), set(R2))


def test_rs_connected_examples():
    k5 = complete_graph(5)
    assert is_RS_connected(k5, k5.vertices, k5.vertices)
    assert not is_RS_connected(path_graph(4), {0}, {3})
    assert not is_RS_connected(two_triangles_at_vertex(), {1}, {3})
    g = k4s_on_an_edge()
    # the K4 on 0..3 is a sided side for R = {0, 1} unless S touches it
    assert not is_RS_connected(g, {0, 1}, {4})
    assert is_RS_connected(g, {0, 1}, {2})


# -- decomposition ----------------------------------------------------------------------


def test_k5_form_needs_one_kuratowski_term():
    g = complete_graph(5)
    k = elementary_k5_form()
    rep = decompose(g, k, ["pairs"])
    assert not rep.success and rep.quotient.free_rank == 1
    rep = decompose(g, k, ["pairs", "kuratowski"])
    assert rep.success and len(rep.terms) == 1
    (c, gen), = rep.terms
    assert gen.family == "kuratowski" and abs(c) == 1
    assert rep.reconstruct() == k


def test_k34_quad_form_needs_quads():
    g = complete_bipartite_graph(3, 4)
    q = enumerate_quads(g)[0]
    d = quad_form(g, q, q.left_sides()[0])
    rep = decompose(g, d, ["pairs", "kuratowski"])
    assert not rep.success and not rep.quotient.trivial
    full = decompose(g, d)
    assert full.success and full.reconstruct() == d


def test_every_k34_basis_element_decomposes():
    g = complete_bipartite_graph(3, 4)
    for row in two_cycle_lattice(g).basis:
        d = vector_form(g, row)
        rep = decompose(g, d)
        assert rep.success and rep.reconstruct() == d


def test_decompose_rejects_non_cycle():
    with pytest.raises(FormError):
        decompose(complete_graph(5), Form2({(0, 7): 1}))


def test_decompose_cap_is_inconclusive():
    rep = decompose(petersen_graph(), Form2(), budget=Budget(max_items=3))
    assert rep.inconclusive and not rep.success


# -- theorem drivers ----------------------------------------------------------------------


def test_verify_examples():
    assert verify_theorem(complete_bipartite_graph(3, 4), "main")[0].status == "pass"
    (v,) = verify_theorem(petersen_graph(), "main-sym")
    assert v.status == "pass"
    (v,) = verify_theorem(petersen_graph(), "kuratowski-connected", meta={"petersen": True})
    assert v.status == "pass"


def test_trichotomy_for_linkless_nonplanar():
    (v,) = verify_theorem(complete_graph(5), "kuratowski-connected", meta={"planar": False, "linkless": True})
    assert v.status == "pass" and v.details["L_over_B"] == {"free_rank": 1, "torsion": []}


def test_k34_is_not_kuratowski_connected():
    g = complete_bipartite_graph(3, 4)
    for which in ("kuratowski-connected", "kuratowski-pairs", "quad-kuratowski-connected"):
        assert verify_theorem(g, which)[0].status == "not-applicable"


@pytest.mark.parametrize("g", [width0_quad_graph(), width_positive_quad_graph(), complete_bipartite_graph(3, 4)])
def test_quad_lemmas(g):
    for which in ("sym-quad", "quad-sum"):
        verdicts = verify_theorem(g, which)
        assert verdicts and all(v.status == "pass" for v in verdicts), verdicts


def test_sym_quad_certificate_signs():
    g = complete_bipartite_graph(3, 4)
    q = enumerate_quads(g)[0]
    for side in q.left_sides():
        cert = sym_quad_certificate(g, q, side)
        assert cert is not None
        s1, s2 = cert.signs
        from twocycles.forms import kuratowski_form

        total = s1 * kuratowski_form(g, cert.H1) + s2 * kuratowski_form(g, cert.H2)
        assert total == sigma_apply(quad_form(g, q, side), SigmaMode.SYM)


@pytest.mark.parametrize("which", ["drawing-force", "one-side"])
def test_projected_checks(which):
    for g in (complete_graph(5), complete_bipartite_graph(3, 3)):
        assert verify_theorem(g, which)[0].status == "pass"
    assert verify_theorem(complete_bipartite_graph(3, 4), which)[0].status == "not-applicable"


def test_separations_driver():
    verdicts = verify_theorem(k4s_on_an_edge(), "separations")
    assert verdicts and all(v.status == "pass" for v in verdicts)
    assert {v.name for v in verdicts} == {"separation-2-plain", "separation-2-sym", "separation-2-skew"}


def test_cap_gives_inconclusive():
    for which in ("main", "sym-quad", "quad-sum", "kuratowski-pairs"):
        (v,) = verify_theorem(petersen_graph(), which, Budget(max_items=2))
        assert v.status == "inconclusive"


def test_unknown_theorem():
    with pytest.raises(FormError):
        verify_theorem(complete_graph(5), "nope")
    assert "main" in THEOREMS


def test_contraction_round_trip_and_lifted_pairs():
    g = prism_graph()
    for e in range(g.m):
        assert verify_contraction_round_trip(g, e, trials=10).status == "pass"
        assert lifted_pairs_are_pairs(g, e).status == "pass"


def test_zero_lattice_helper():
    assert zero_lattice(3).rank == 0
