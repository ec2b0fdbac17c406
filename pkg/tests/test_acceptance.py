"""One test per acceptance criterion; all checks are exact integer identities."""

import itertools
import random
import time

import pytest

from twocycles.catalog import (
    catalog,
    complete_bipartite_graph,
    complete_graph,
    cube_graph,
    full_subdivision,
    get,
)
from twocycles.certificates import check_certificate, sym_quad_document
from twocycles.crossing import (
    is_generic,
    kr_functional,
    random_generic_drawing,
    signed_crossing,
)
from twocycles.forms import (
    Form2,
    SigmaMode,
    is_two_cycle,
    kuratowski_form,
    pair_key,
    two_cycle_lattice,
)
from twocycles.graph import Graph, enumerate_separations
from twocycles.homology import h2_lattice, planar_face_basis_check
from twocycles.intlattice import lattice_sum, quotient_invariants, span
from twocycles.modules import (
    build_B,
    build_kuratowski_span,
    build_quad_span,
    lifted_pairs_are_pairs,
    random_element,
    sym_quad_certificate,
    verify_contraction_round_trip,
    verify_kuratowski_trichotomy,
    verify_main,
    verify_separation,
)
from twocycles.patterns import enumerate_kuratowski_subdivisions, enumerate_quads

CATALOG = catalog()


def criterion(number, title):
    return pytest.mark.criterion(number, title)


@criterion(1, "two_cycle_lattice equals h2_lattice on every catalog graph")
def test_oracle_equivalence():
    start = time.perf_counter()
    for e in CATALOG:
        assert e.graph.n <= 14
        a, b = two_cycle_lattice(e.graph), h2_lattice(e.graph)
        assert a.basis == b.basis and a.index_key == b.index_key and a.ambient_dim == b.ambient_dim, e.name
    assert time.perf_counter() - start < 60


@criterion(2, "circuit pairs, Kuratowski and quad forms generate L(G) on every catalog graph")
def test_main_theorem():
    for e in CATALOG:
        v = verify_main(e.graph, SigmaMode.PLAIN)
        assert v.status == "pass", (e.name, v.details)
        assert v.details["quotient"] == {"free_rank": 0, "torsion": []}


@criterion(3, "K_{3,4}: pairs and Kuratowski forms fall short, quads close the gap")
def test_k34_counterexample():
    g = complete_bipartite_graph(3, 4)
    L = two_cycle_lattice(g)
    BK = lattice_sum(build_B(g).span, build_kuratowski_span(g).span)
    q = quotient_invariants(BK, L)
    assert q.free_rank + len(q.torsion) >= 1
    full = lattice_sum(BK, build_quad_span(g).span)
    assert quotient_invariants(full, L).trivial and full == L


@criterion(4, "symmetric lattice from symmetric pairs and Kuratowski forms; q + T(q) certificates")
def test_symmetric_theorem():
    for e in CATALOG:
        g = e.graph
        v = verify_main(g, SigmaMode.SYM)
        assert v.status == "pass", (e.name, v.details)
        for q in enumerate_quads(g):
            for side in q.left_sides():
                for first in range(3):
                    cert = sym_quad_certificate(g, q, side, first)
                    assert cert is not None, (e.name, side, first)
                    assert check_certificate(sym_quad_document(g, cert)).ok


@criterion(5, "skew lattice from skew pairs and skew quads; K5 and K_{3,3} have none")
def test_skew_theorem():
    for e in CATALOG:
        v = verify_main(e.graph, SigmaMode.SKEW)
        assert v.status == "pass", (e.name, v.details)
    assert two_cycle_lattice(complete_graph(5), SigmaMode.SKEW).rank == 0
    assert two_cycle_lattice(complete_bipartite_graph(3, 3), SigmaMode.SKEW).rank == 0


@criterion(6, "Kuratowski-connected trichotomy on the catalog")
def test_kuratowski_connected_trichotomy():
    seen = set()
    for e in CATALOG:
        g = e.graph
        v = verify_kuratowski_trichotomy(g, e.planar, e.petersen_family, e.linkless)
        if v.status == "not-applicable":
            continue
        assert v.status == "pass", (e.name, v.details)
        L, B = two_cycle_lattice(g), build_B(g).span
        q = quotient_invariants(B, L)
        if e.planar or e.petersen_family:
            assert q.trivial, e.name
            seen.add("planar" if e.planar else "petersen")
            if e.petersen_family:
                key = pair_key(g)
                for h in enumerate_kuratowski_subdivisions(g):
                    assert kuratowski_form(g, h).to_vector(key) in B
        elif e.linkless:
            assert (q.free_rank, q.torsion) == (1, ()), e.name
            key = pair_key(g)
            for h in enumerate_kuratowski_subdivisions(g):
                with_h = span(list(B.basis) + [kuratowski_form(g, h).to_vector(key)], len(key))
                assert with_h == L, e.name
            seen.add("linkless")
    assert {"cube", "K5", "K33", "petersen"} <= {e.name for e in CATALOG}
    assert seen == {"planar", "petersen", "linkless"}


def _two_k5_at_a_vertex():
    edges = list(itertools.combinations(range(5), 2)) + list(itertools.combinations(range(4, 9), 2))
    return Graph(9, edges)


def _k5_and_k5_minus_edge():
    edges = list(itertools.combinations(range(5), 2))
    edges += [x for x in itertools.combinations((3, 4, 5, 6, 7), 2) if x != (3, 4)]
    return Graph(8, edges)


@criterion(7, "separation lemmas for orders 1, 2 and 3 in all three modes")
def test_separation_lemmas():
    cases = [
        (_two_k5_at_a_vertex(), 1),
        (_k5_and_k5_minus_edge(), 2),
        (get("two-K5").graph, 3),
        (complete_bipartite_graph(3, 4), 3),
        (cube_graph(), 3),
    ]
    for g, k in cases:
        seps = enumerate_separations(g, k)
        assert seps
        for sep in seps:
            for mode in SigmaMode:
                v = verify_separation(g, sep, mode)
                assert v.status == "pass", (k, mode, v.details)


@criterion(8, "every pair of Kuratowski forms differs from B(G) by a sign choice")
def test_kuratowski_pairs():
    for g in (complete_graph(5), complete_bipartite_graph(3, 3), get("petersen").graph, get("K33-sub").graph):
        key = pair_key(g)
        B = build_B(g).span
        forms = [kuratowski_form(g, h).to_vector(key) for h in enumerate_kuratowski_subdivisions(g)]
        assert forms
        for a, b in itertools.combinations(forms, 2):
            minus = tuple(x - y for x, y in zip(a, b))
            plus = tuple(x + y for x, y in zip(a, b))
            assert minus in B or plus in B


@criterion(9, "crossing functional vanishes on 2-cycles over 200+ random trials")
def test_crossing_invariant():
    start = time.perf_counter()
    graphs = [e.graph for e in CATALOG if e.graph.m <= 16 and two_cycle_lattice(e.graph).rank]
    trials = 0
    rng = random.Random(2026)
    for seed in range(20):
        for g in graphs:
            dr = random_generic_drawing(g, seed)
            assert is_generic(g, dr)
            L = two_cycle_lattice(g)
            d = Form2.from_vector(random_element(L, rng), pair_key(g))
            assert kr_functional(g, dr, d) == 0
            trials += 1
            for e, f in g.nonadjacent_pairs():
                assert signed_crossing(g, dr, e, f) == -signed_crossing(g, dr, f, e)
    assert trials >= 200
    # negative control: a single entry on a crossing pair is not a 2-cycle and is caught
    g = get("K5").graph
    dr = random_generic_drawing(g, 0)
    crossing = [(e, f) for e, f in g.nonadjacent_pairs() if signed_crossing(g, dr, e, f)]
    assert crossing
    bad = Form2({crossing[0]: 1})
    assert not is_two_cycle(g, bad) and kr_functional(g, dr, bad) != 0
    assert time.perf_counter() - start < 30


@criterion(10, "contraction and lifting are mutually inverse; lifted circuit pairs stay circuit pairs")
def test_contraction_round_trips():
    for e in CATALOG:
        g = e.graph
        for k in range(g.m):
            v = verify_contraction_round_trip(g, k, trials=50, seed=k)
            assert v.status == "pass" and v.details["trials"] >= 50, (e.name, k, v.details)
            w = lifted_pairs_are_pairs(g, k)
            assert w.status == "pass", (e.name, k, w.details)


@criterion(11, "rank of L(G) is unchanged by subdividing every edge")
def test_subdivision_invariance():
    for e in CATALOG:
        assert two_cycle_lattice(full_subdivision(e.graph)).rank == two_cycle_lattice(e.graph).rank, e.name


@criterion(12, "nonadjacent face pairs of the cube form a basis of L")
def test_planar_face_basis():
    entry = get("cube")
    v = planar_face_basis_check(entry.graph, entry.extra["faces"])
    assert v.ok, v.detail
    assert v.family_size == v.lattice_rank == 6
