"""Named test graphs with known structure, plus seeded subdivision variants."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .graph import Graph, GraphError, subdivide


def complete_graph(n: int) -> Graph:
    return Graph(n, itertools.combinations(range(n), 2))


def complete_bipartite_graph(p: int, q: int) -> Graph:
    """Colour classes ``0..p-1`` and ``p..p+q-1``; edges run from the first class."""
    return Graph(p + q, [(a, p + b) for a in range(p) for b in range(q)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) if i + 1 < n else (0, n - 1) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cube_graph() -> Graph:
    return Graph(8, [(i, i | b) for i in range(8) for b in (1, 2, 4) if not i & b])


CUBE_FACES = tuple(
    tuple(v for v in range(8) if (v >> bit) & 1 == val) for bit in range(3) for val in (0, 1)
)


def cube_face_cycles():
    """The six faces of :func:`cube_graph` as vertex sequences in cyclic order."""
    out = []
    for bit in range(3):
        x, y = [b for b in (1, 2, 4) if b != 1 << bit]
        for val in (0, 1):
            base = val << bit
            out.append((base, base | x, base | x | y, base | y))
    return out


def prism_graph() -> Graph:
    return Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])


def octahedron_graph() -> Graph:
    return Graph(6, [(i, j) for i, j in itertools.combinations(range(6), 2) if j != i + 3 or i >= 3])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) if i < 4 else (0, 4) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [tuple(sorted((5 + i, 5 + (i + 2) % 5))) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def width0_quad_graph() -> Graph:
    """K_{3,4} with one edge subdivided: a width-zero quad with a longer path."""
    g = complete_bipartite_graph(3, 4)
    return subdivide(g, {0: 1})[0]


def width_positive_quad_graph() -> Graph:
    """a, b, c, d = 0..3; P_i = a p_i b, R_i = c r_i d, connectors p_i r_i."""
    edges = []
    for i in range(3):
        p, r = 4 + i, 7 + i
        edges += [(0, p), (p, 1), (2, r), (r, 3), (p, r)]
    return Graph(10, edges)


def two_k5_graph() -> Graph:
    """Two disjoint K5's joined by a matching of three edges."""
    edges = list(itertools.combinations(range(5), 2))
    edges += [(5 + i, 5 + j) for i, j in itertools.combinations(range(5), 2)]
    edges += [(0, 5), (1, 6), (2, 7)]
    return Graph(10, edges)


def random_subdivision(g: Graph, seed: int) -> Graph:
    """Subdivide one edge chosen by ``seed``."""
    rng = random.Random(seed)
    return subdivide(g, {rng.randrange(g.m): 1})[0]


def full_subdivision(g: Graph) -> Graph:
    return subdivide(g, {e: 1 for e in range(g.m)})[0]


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    graph: Graph
    planar: bool
    linkless: bool | None  # None: not recorded
    petersen_family: bool | None
    notes: str = ""
    extra: dict = field(default_factory=dict, compare=False)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "graph": self.graph.to_dict(),
            "planar": self.planar,
            "linkless": self.linkless,
            "in_petersen_family_minor": self.petersen_family,
            "notes": self.notes,
            **{k: [list(f) for f in v] if k == "faces" else v for k, v in self.extra.items()},
        }


# Petersen-family membership marks the graph itself as a Petersen-family
# member or containing one as a minor (so not linklessly embeddable).
_BASE = (
    ("K4", complete_graph(4), True, True, False, "planar"),
    ("K5", complete_graph(5), False, True, False, "Kuratowski graph"),
    ("K33", complete_bipartite_graph(3, 3), False, True, False, "Kuratowski graph"),
    ("K34", complete_bipartite_graph(3, 4), False, True, False, "span needs quads"),
    ("cube", cube_graph(), True, True, False, "six faces"),
    ("prism", prism_graph(), True, True, False, "planar"),
    ("octahedron", octahedron_graph(), True, True, False, "planar"),
    ("petersen", petersen_graph(), False, False, True, "Petersen family"),
    ("quad-width0", width0_quad_graph(), False, True, False, "width-zero quad"),
    ("quad-width3", width_positive_quad_graph(), False, True, False, "connectors of length one"),
    ("two-K5", two_k5_graph(), False, None, None, "3-separation, two Kuratowski sides"),
)

# Curated face lists of the planar entries (vertex sequences in cyclic order)
# and minor models of the Petersen-family entries.
_EXTRA = {
    "K4": {"faces": [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]},
    "cube": {"faces": cube_face_cycles()},
    "prism": {"faces": [(0, 1, 2), (3, 4, 5), (0, 1, 4, 3), (1, 2, 5, 4), (0, 2, 5, 3)]},
    "octahedron": {"faces": [(a, b, c) for a in (0, 3) for b in (1, 4) for c in (2, 5)]},
    "petersen": {"minor_model": "the graph itself (branch sets are single vertices)"},
}

CATALOG_SEED = 20261016


def catalog(include_variants: bool = True) -> list[CatalogEntry]:
    out = [CatalogEntry(*row, extra=dict(_EXTRA.get(row[0], {}))) for row in _BASE]
    if include_variants:
        rng = random.Random(CATALOG_SEED)
        for row in _BASE:
            name, g, planar, linkless, pf, _ = row
            seed = rng.randrange(2**31)
            out.append(CatalogEntry(f"{name}-sub", random_subdivision(g, seed), planar, linkless, pf,
                                    f"one edge subdivided (seed {seed})"))
    return out


def get(name: str) -> CatalogEntry:
    for entry in catalog():
        if entry.name == name:
            return entry
    raise GraphError(f"unknown catalog graph {name!r}")
