"""Oriented loopless multigraphs, incidence algebra and connectivity predicates.

Vertices are ``0..n-1``; edge ``i`` is the pair ``edges[i] = (tail, head)``.
The pair order is the orientation used by every signed quantity in the
package (circulations, forms, crossing signs).
"""

from __future__ import annotations

import itertools
import json
from collections.abc import Iterable, Mapping
from dataclasses import dataclass


class GraphError(ValueError):
    """Malformed graph data or an out-of-range index."""


class EdgeVector(dict):
    """Sparse element of the free integer module on the oriented edges.

    Zero coefficients are never stored.
    """

    def __init__(self, items: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        super().__init__()
        pairs = items.items() if isinstance(items, Mapping) else items
        for e, c in pairs:
            if c:
                c = self.get(e, 0) + c
                if c:
                    self[e] = c
                else:
                    del self[e]

    def pair(self, other: Mapping[int, int]) -> int:
        """Sum of coefficient products over shared edges."""
        if len(other) < len(self):
            self, other = other, self
        return sum(c * other.get(e, 0) for e, c in self.items())

    def __add__(self, other):
        return EdgeVector(itertools.chain(self.items(), other.items()))

    def __neg__(self):
        return EdgeVector({e: -c for e, c in self.items()})

    def __mul__(self, c: int):
        return EdgeVector((k, c * v) for k, v in self.items())

    __rmul__ = __mul__

    def __sub__(self, other):
        return self + (-EdgeVector(other))


class Graph:
    """Immutable loopless multigraph with globally oriented edges."""

    __slots__ = ("_incident", "edges", "labels", "n")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]], labels: Mapping[int, str] | None = None):
        if n < 0:
            raise GraphError("negative vertex count")
        edges = tuple((int(t), int(h)) for t, h in edges)
        for i, (t, h) in enumerate(edges):
            if not (0 <= t < n and 0 <= h < n):
                raise GraphError(f"edge {i} = {(t, h)} has an endpoint outside 0..{n - 1}")
            if t == h:
                raise GraphError(f"edge {i} is a loop at vertex {t}")
        self.n = n
        self.edges = edges
        self.labels = dict(labels or {})
        incident: list[list[int]] = [[] for _ in range(n)]
        for i, (t, h) in enumerate(edges):
            incident[t].append(i)
            incident[h].append(i)
        self._incident = tuple(tuple(x) for x in incident)

    # -- basic accessors -------------------------------------------------

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def m(self) -> int:
        return len(self.edges)

    def tail(self, e: int) -> int:
        return self.edges[e][0]

    def head(self, e: int) -> int:
        return self.edges[e][1]

    def ends(self, e: int) -> tuple[int, int]:
        return self.edges[e]

    def other_end(self, e: int, v: int) -> int:
        t, h = self.edges[e]
        if v == t:
            return h
        if v == h:
            return t
        raise GraphError(f"vertex {v} is not an end of edge {e}")

    def incident_edges(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self._incident[v]

    def degree(self, v: int) -> int:
        return len(self.incident_edges(v))

    def neighbors(self, v: int) -> list[int]:
        return sorted({self.other_end(e, v) for e in self.incident_edges(v)})

    def adjacent(self, e: int, f: int) -> bool:
        """True if the edges share a vertex (an edge is adjacent to itself)."""
        return bool(set(self.edges[e]) & set(self.edges[f]))

    def edges_between(self, u: int, v: int) -> list[int]:
        return [e for e in self._incident[u] if v in self.edges[e]]

    def is_simple(self) -> bool:
        seen = set()
        for t, h in self.edges:
            key = (min(t, h), max(t, h))
            if key in seen:
                return False
            seen.add(key)
        return True

    def nonadjacent_pairs(self) -> list[tuple[int, int]]:
        """Ordered pairs of edges with no common vertex, lexicographic order."""
        return [(e, f) for e in range(self.m) for f in range(self.m) if not self.adjacent(e, f)]

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range 0..{self.n - 1}")

    def _check_edge(self, e: int) -> None:
        if not 0 <= e < len(self.edges):
            raise GraphError(f"edge {e} out of range 0..{len(self.edges) - 1}")

    # -- derived graphs ----------------------------------------------------

    def simple_adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for t, h in self.edges:
            adj[t].add(h)
            adj[h].add(t)
        return adj

    def edge_subgraph(self, edge_ids: Iterable[int]) -> Graph:
        """Same vertex set, only the given edges (renumbered in sorted order)."""
        edge_ids = sorted(set(edge_ids))
        return Graph(self.n, [self.edges[e] for e in edge_ids], self.labels)

    # -- interchange -------------------------------------------------------

    def to_dict(self) -> dict:
        doc = {"vertices": self.n, "edges": [list(e) for e in self.edges]}
        if self.labels:
            doc["labels"] = {str(k): v for k, v in sorted(self.labels.items())}
        return doc

    @classmethod
    def from_dict(cls, doc: Mapping) -> Graph:
        try:
            n = doc["vertices"]
            if isinstance(n, list):
                n = len(n)
            edges = [tuple(e) for e in doc["edges"]]
            if any(len(e) != 2 for e in edges):
                raise GraphError("every edge must be a [tail, head] pair")
            labels = {int(k): str(v) for k, v in (doc.get("labels") or {}).items()}
        except (KeyError, TypeError) as exc:
            raise GraphError(f"malformed graph document: {exc!r}") from exc
        return cls(int(n), edges, labels)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> Graph:
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GraphError(f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
        return cls.from_dict(doc)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


# -- incidence algebra -------------------------------------------------------


def incidence(g: Graph, v: int, e: int) -> int:
    """+1 if ``e`` points at ``v``, -1 if it leaves ``v``, 0 otherwise."""
    g._check_vertex(v)
    g._check_edge(e)
    t, h = g.edges[e]
    if v == h:
        return 1
    if v == t:
        return -1
    return 0


def delta(g: Graph, v: int) -> EdgeVector:
    g._check_vertex(v)
    return EdgeVector((e, incidence(g, v, e)) for e in g.incident_edges(v))


def is_circulation(g: Graph, f: Mapping[int, int]) -> bool:
    return all(delta(g, v).pair(f) == 0 for v in g.vertices)


def contract(g: Graph, e: int) -> tuple[Graph, dict[int, int | None]]:
    """Contract edge ``e``; returns ``(G/e, edge_map)``.

    The ends of ``e`` merge into the smaller of the two vertex indices and
    larger indices shift down by one. Edges parallel to ``e`` would become
    loops and map to ``None``; every other edge keeps its orientation.
    """
    g._check_edge(e)
    keep, gone = sorted(g.edges[e])

    def vmap(x: int) -> int:
        if x == gone:
            x = keep
        return x - 1 if x > gone else x

    new_edges = []
    edge_map: dict[int, int | None] = {}
    for i, (t, h) in enumerate(g.edges):
        nt, nh = vmap(t), vmap(h)
        if i == e or nt == nh:
            edge_map[i] = None
            continue
        edge_map[i] = len(new_edges)
        new_edges.append((nt, nh))
    labels = {vmap(k): v for k, v in g.labels.items() if k != gone}
    return Graph(g.n - 1, new_edges, labels), edge_map


def contraction_vertex_map(g: Graph, e: int) -> dict[int, int]:
    keep, gone = sorted(g.edges[e])
    return {x: (keep if x == gone else x) - (1 if x > gone else 0) for x in g.vertices}


def subdivide(g: Graph, counts: Mapping[int, int]) -> tuple[Graph, dict[int, list[int]]]:
    """Replace edge ``e`` by a directed path of ``counts[e] + 1`` edges.

    Returns the new graph and a map old edge -> list of new edges, listed
    from the old tail to the old head; each new edge points the same way.
    Unlisted edges map to a single edge.
    """
    n = g.n
    new_edges: list[tuple[int, int]] = []
    mapping: dict[int, list[int]] = {}
    for i, (t, h) in enumerate(g.edges):
        k = counts.get(i, 0)
        if k < 0:
            raise GraphError("subdivision count must be nonnegative")
        chain = [t] + list(range(n, n + k)) + [h]
        n += k
        mapping[i] = []
        for x, y in zip(chain, chain[1:]):
            mapping[i].append(len(new_edges))
            new_edges.append((x, y))
    return Graph(n, new_edges, g.labels), mapping


# -- connectivity ---------------------------------------------------------------


def components(adj: list[set[int]], removed: Iterable[int] = ()) -> list[list[int]]:
    removed = set(removed)
    seen = set(removed)
    out = []
    for s in range(len(adj)):
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        stack = [s]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    comp.append(y)
                    stack.append(y)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g.simple_adjacency())) <= 1


def vertex_connectivity(g: Graph) -> int:
    """Smallest number of vertices whose removal disconnects the simplification.

    Complete graphs return ``n - 1``; brute force over vertex subsets.
    """
    adj = g.simple_adjacency()
    n = g.n
    if n <= 1:
        return 0
    if len(components(adj)) > 1:
        return 0
    for k in range(1, n - 1):
        for cut in itertools.combinations(range(n), k):
            if len(components(adj, cut)) > 1:
                return k
    return n - 1


@dataclass(frozen=True)
class Separation:
    """A separation ``(G1, G2)``: edge sets covering ``E`` meeting in ``shared``."""

    shared: frozenset
    side1_edges: frozenset
    side2_edges: frozenset
    side1_vertices: frozenset
    side2_vertices: frozenset

    @property
    def order(self) -> int:
        return len(self.shared)

    def side_of(self, e: int) -> int:
        return 1 if e in self.side1_edges else 2

    def to_dict(self) -> dict:
        return {
            "shared": sorted(self.shared),
            "side1_vertices": sorted(self.side1_vertices),
            "side2_vertices": sorted(self.side2_vertices),
            "side1_edges": sorted(self.side1_edges),
            "side2_edges": sorted(self.side2_edges),
        }


def separation_from_sides(g: Graph, shared: Iterable[int], side1_private: Iterable[int]) -> Separation:
    """Build the separation with the given separator and side-1 private vertices.

    Edges with both ends in the separator go to side 1.
    """
    shared = frozenset(shared)
    priv1 = frozenset(side1_private)
    v1 = shared | priv1
    v2 = frozenset(g.vertices) - priv1
    e1, e2 = set(), set()
    for i, (t, h) in enumerate(g.edges):
        if t in v1 and h in v1:
            e1.add(i)
        elif t in v2 and h in v2:
            e2.add(i)
        else:
            raise GraphError(f"edge {i} joins the two private sides")
    return Separation(shared, frozenset(e1), frozenset(e2), v1, v2)


def enumerate_separations(g: Graph, k: int) -> list[Separation]:
    """All proper separations of order exactly ``k``, each listed once.

    A proper separation has private vertices on both sides. The side holding
    the smallest non-separator vertex is side 1 and separator-internal edges
    go to side 1.
    """
    if k < 0:
        raise GraphError("separation order must be nonnegative")
    adj = g.simple_adjacency()
    out = []
    for cut in itertools.combinations(range(g.n), k):
        comps = components(adj, cut)
        if len(comps) < 2:
            continue
        first, rest = comps[0], comps[1:]
        # side 1 = first component plus any proper subset of the others
        for r in range(len(rest)):
            for extra in itertools.combinations(range(len(rest)), r):
                priv1 = set(first)
                for i in extra:
                    priv1.update(rest[i])
                out.append(separation_from_sides(g, cut, priv1))
    return out


def is_claw_side(g: Graph, sep: Separation, side: int) -> bool:
    """Side is K_{1,3}: one private vertex joined once to each of 3 shared vertices."""
    verts = sep.side1_vertices if side == 1 else sep.side2_vertices
    private = verts - sep.shared
    if len(private) != 1 or sep.order != 3:
        return False
    (x,) = private
    edges = g.incident_edges(x)
    return len(edges) == 3 and {g.other_end(e, x) for e in edges} == set(sep.shared)


def is_internally_4_connected(g: Graph) -> bool:
    if not g.is_simple() or g.n < 5 or vertex_connectivity(g) < 3:
        return False
    for sep in enumerate_separations(g, 3):
        if is_claw_side(g, sep, 1) == is_claw_side(g, sep, 2):
            return False
    return True


def _nx(g: Graph, edge_ids: Iterable[int], extra_star: Iterable[int] = ()):
    import networkx as nx

    h = nx.Graph()
    for e in edge_ids:
        h.add_edge(*g.edges[e])
    extra_star = list(extra_star)
    if extra_star:
        for v in extra_star:
            h.add_edge(("virtual",), v)
    return h


def has_kuratowski_subgraph(g: Graph, edge_ids: Iterable[int] | None = None, extra_star: Iterable[int] = ()) -> bool:
    """Nonplanarity of the edge subgraph, optionally with a virtual vertex joined to ``extra_star``."""
    import networkx as nx

    ids = range(g.m) if edge_ids is None else edge_ids
    planar, _ = nx.check_planarity(_nx(g, ids, extra_star))
    return not planar


def separation_divides(g: Graph, sep: Separation, augment: bool = True) -> bool:
    """Does ``sep`` divide two Kuratowski subgraphs, one on each side?

    With ``augment`` each side is completed by a virtual vertex joined to the
    separator before testing for a Kuratowski subgraph.
    """
    star = sorted(sep.shared) if augment and sep.order >= 2 else []
    return has_kuratowski_subgraph(g, sep.side1_edges, star) and has_kuratowski_subgraph(g, sep.side2_edges, star)


def is_kuratowski_connected(g: Graph, augment: bool = True) -> bool:
    if not has_kuratowski_subgraph(g):
        return True
    for k in range(4):
        for sep in enumerate_separations(g, k):
            if separation_divides(g, sep, augment):
                return False
    return True
