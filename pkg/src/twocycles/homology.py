"""Combinatorial deleted product of a graph and its second homology.

This is an independent route to the 2-cycle lattice: the kernel of the second
boundary map is computed from a Smith decomposition rather than the
constraint sweep used by :func:`twocycles.forms.two_cycle_lattice`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .forms import circuit_pair_form, pair_key, two_cycle_lattice
from .graph import Graph, GraphError
from .intlattice import (
    IntMatrix,
    SubLattice,
    matmul,
    quotient_invariants,
    rank,
    smith_normal_form,
    span,
)
from .patterns import OrientedCycle


@dataclass(frozen=True)
class DeletedProductComplex:
    cells0: tuple  # (u, v), u != v
    cells1: tuple  # ("ev", e, v) or ("ve", v, e)
    cells2: tuple  # (e, f) nonadjacent
    boundary1: tuple  # rows: cells0, cols: cells1
    boundary2: tuple  # rows: cells1, cols: cells2

    def to_dict(self) -> dict:
        return {
            "cells0": [list(c) for c in self.cells0],
            "cells1": [list(c) for c in self.cells1],
            "cells2": [list(c) for c in self.cells2],
            "boundary1": [list(r) for r in self.boundary1],
            "boundary2": [list(r) for r in self.boundary2],
        }


def build_complex(g: Graph) -> DeletedProductComplex:
    """Cells sigma x tau with disjoint closures.

    d(e x f) = (head e, f) - (tail e, f) - (e, head f) + (e, tail f), i.e.
    (de) x f - e x (df) with d(e) = head - tail.
    """
    cells0 = tuple((u, v) for u in g.vertices for v in g.vertices if u != v)
    cells1 = tuple(("ev", e, v) for e in range(g.m) for v in g.vertices if v not in g.ends(e)) + tuple(
        ("ve", v, e) for v in g.vertices for e in range(g.m) if v not in g.ends(e)
    )
    cells2 = pair_key(g)
    i0 = {c: i for i, c in enumerate(cells0)}
    i1 = {c: i for i, c in enumerate(cells1)}
    b1 = [[0] * len(cells1) for _ in cells0]
    for j, (kind, x, y) in enumerate(cells1):
        if kind == "ev":
            t, h = g.ends(x)
            b1[i0[(h, y)]][j] += 1
            b1[i0[(t, y)]][j] -= 1
        else:
            t, h = g.ends(y)
            b1[i0[(x, h)]][j] += 1
            b1[i0[(x, t)]][j] -= 1
    b2 = [[0] * len(cells2) for _ in cells1]
    for j, (e, f) in enumerate(cells2):
        te, he = g.ends(e)
        tf, hf = g.ends(f)
        b2[i1[("ve", he, f)]][j] += 1
        b2[i1[("ve", te, f)]][j] -= 1
        b2[i1[("ev", e, hf)]][j] -= 1
        b2[i1[("ev", e, tf)]][j] += 1
    return DeletedProductComplex(cells0, cells1, cells2, tuple(map(tuple, b1)), tuple(map(tuple, b2)))


def boundary_composition_is_zero(cx: DeletedProductComplex) -> bool:
    if not cx.cells0 or not cx.cells1 or not cx.cells2:
        return True
    prod = matmul([list(r) for r in cx.boundary1], [list(r) for r in cx.boundary2])
    return all(not x for row in prod for x in row)


def _kernel_via_smith(m: IntMatrix, ncols: int) -> list[list[int]]:
    """Columns of V beyond the rank of U m V = S span ker m."""
    if not m or ncols == 0:
        return [[int(i == j) for j in range(ncols)] for i in range(ncols)]
    s, _, v = smith_normal_form(m)
    r = sum(1 for i in range(min(len(s), ncols)) if s[i][i])
    return [[v[i][j] for i in range(ncols)] for j in range(r, ncols)]


def h2_lattice(g: Graph) -> SubLattice:
    """H_2 of the deleted product (the complex has no 3-cells)."""
    cx = build_complex(g)
    n2 = len(cx.cells2)
    kern = _kernel_via_smith([list(r) for r in cx.boundary2], n2)
    return span(kern, n2, index_key=cx.cells2)


def betti_numbers(g: Graph) -> tuple[int, int, int]:
    cx = build_complex(g)
    r1 = rank([list(r) for r in cx.boundary1]) if cx.cells0 and cx.cells1 else 0
    r2 = rank([list(r) for r in cx.boundary2]) if cx.cells1 and cx.cells2 else 0
    return len(cx.cells0) - r1, len(cx.cells1) - r1 - r2, len(cx.cells2) - r2


@dataclass
class FaceBasisVerdict:
    ok: bool
    family_size: int
    lattice_rank: int
    detail: str
    forms: list

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "family_size": self.family_size,
            "lattice_rank": self.lattice_rank,
            "detail": self.detail,
        }


def face_cycle(g: Graph, verts) -> OrientedCycle:
    """Oriented cycle through ``verts`` in order (first edge found per step)."""
    edges = []
    k = len(verts)
    for i in range(k):
        es = g.edges_between(verts[i], verts[(i + 1) % k])
        if not es:
            raise GraphError(f"face lists consecutive vertices {verts[i]}, {verts[(i + 1) % k]} with no edge")
        edges.append(es[0])
    return OrientedCycle.from_vertices_edges(g, verts, edges)


def planar_face_basis_check(g: Graph, faces) -> FaceBasisVerdict:
    """Check that chi_{C,D} over vertex-disjoint face pairs is a Z-basis of L(G)."""
    cycles = [face_cycle(g, f) for f in faces]
    forms = []
    for i, c in enumerate(cycles):
        for j, d in enumerate(cycles):
            if i != j and not c.vertex_set & d.vertex_set:
                forms.append(circuit_pair_form(g, c, d))
    key = pair_key(g)
    L = two_cycle_lattice(g)
    vecs = [f.to_vector(key) for f in forms]
    S = span(vecs, len(key))
    if len(vecs) != S.rank:
        return FaceBasisVerdict(False, len(vecs), L.rank, f"family of {len(vecs)} forms has rank {S.rank}", forms)
    for v, f in zip(vecs, forms):
        if v not in L:
            return FaceBasisVerdict(False, len(vecs), L.rank, f"face-pair form {f} is not a 2-cycle", forms)
    q = quotient_invariants(S, L)
    if not q.trivial:
        return FaceBasisVerdict(False, len(vecs), L.rank, f"L / span has invariants {q.to_dict()}", forms)
    return FaceBasisVerdict(True, len(vecs), L.rank, "independent family of index 1", forms)
