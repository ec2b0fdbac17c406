"""Exhaustive enumeration of the subgraph patterns the generator families range over.

All searches are plain backtracking at desk scale. A :class:`Budget` bounds
the work; when it runs out :class:`EnumerationCapReached` is raised instead
of returning a silently truncated list.
"""

from __future__ import annotations

import functools
import itertools
import time
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from typing import NamedTuple

from .graph import EdgeVector, Graph, GraphError


class EnumerationCapReached(RuntimeError):
    pass


class Budget:
    """Shared item/time cap for enumerations."""

    def __init__(self, max_items: int | None = None, seconds: float | None = None):
        self.max_items = max_items
        self.deadline = None if seconds is None else time.monotonic() + seconds
        self.items = 0

    def tick(self, n: int = 1) -> None:
        self.items += n
        if self.max_items is not None and self.items > self.max_items:
            raise EnumerationCapReached(f"item cap {self.max_items} reached")
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise EnumerationCapReached("time cap reached")


def _tick(budget: Budget | None, n: int = 1) -> None:
    if budget is not None:
        budget.tick(n)


class Path(NamedTuple):
    """Walk along ``vertices``; ``edges[i]`` joins ``vertices[i]`` and ``vertices[i+1]``."""

    vertices: tuple
    edges: tuple

    @property
    def length(self) -> int:
        return len(self.edges)

    @property
    def start(self) -> int:
        return self.vertices[0]

    @property
    def end(self) -> int:
        return self.vertices[-1]

    @property
    def interior(self) -> tuple:
        return self.vertices[1:-1]

    def reversed(self) -> Path:
        return Path(self.vertices[::-1], self.edges[::-1])

    def signed(self, g: Graph) -> list[tuple[int, int]]:
        """``(edge, +1/-1)`` along the traversal direction."""
        return [(e, 1 if g.tail(e) == x else -1) for e, x in zip(self.edges, self.vertices)]

    def chi(self, g: Graph) -> EdgeVector:
        return EdgeVector(self.signed(g))

    def split_at(self, x: int) -> tuple[Path, Path]:
        i = self.vertices.index(x)
        return Path(self.vertices[: i + 1], self.edges[:i]), Path(self.vertices[i:], self.edges[i:])

    def to_dict(self) -> dict:
        return {"vertices": list(self.vertices), "edges": list(self.edges)}


def is_path(g: Graph, p: Path) -> bool:
    if len(p.vertices) != len(p.edges) + 1 or len(set(p.vertices)) != len(p.vertices):
        return False
    return all(set(g.edges[e]) == {x, y} for e, x, y in zip(p.edges, p.vertices, p.vertices[1:]))


def all_paths(
    g: Graph,
    x: int,
    y: int,
    allowed: Iterable[int] | None = None,
    min_length: int = 1,
    budget: Budget | None = None,
) -> Iterator[Path]:
    """Simple ``x``-``y`` paths whose interior vertices lie in ``allowed``."""
    free = set(g.vertices if allowed is None else allowed) - {x, y}
    verts = [x]
    edges: list[int] = []
    on = {x}

    def rec(v):
        for e in g.incident_edges(v):
            w = g.other_end(e, v)
            if w == y:
                if len(edges) + 1 >= min_length:
                    _tick(budget)
                    yield Path(tuple(verts) + (y,), tuple(edges) + (e,))
            elif w in free and w not in on:
                on.add(w)
                verts.append(w)
                edges.append(e)
                yield from rec(w)
                on.discard(w)
                verts.pop()
                edges.pop()

    if x == y:
        return
    yield from rec(x)


# -- cycles ------------------------------------------------------------------


@dataclass(frozen=True)
class OrientedCycle:
    """Closed walk ``vertices[0] -> vertices[1] -> ... -> vertices[0]``.

    ``edges[i]`` joins ``vertices[i]`` to ``vertices[i+1]``; ``signs[i]`` is +1
    when the edge is oriented along the traversal.
    """

    vertices: tuple
    edges: tuple
    signs: tuple

    @property
    def vertex_set(self) -> frozenset:
        return frozenset(self.vertices)

    @property
    def length(self) -> int:
        return len(self.edges)

    def chi(self) -> EdgeVector:
        return EdgeVector(zip(self.edges, self.signs))

    def reversed(self) -> OrientedCycle:
        v = (self.vertices[0],) + self.vertices[:0:-1]
        return OrientedCycle(v, self.edges[::-1], tuple(-s for s in self.signs[::-1]))

    def to_dict(self) -> dict:
        return {"vertices": list(self.vertices), "edges": list(self.edges), "signs": list(self.signs)}

    @classmethod
    def from_vertices_edges(cls, g: Graph, vertices: Sequence[int], edges: Sequence[int]) -> OrientedCycle:
        signs = tuple(1 if g.tail(e) == v else -1 for e, v in zip(edges, vertices))
        return cls(tuple(vertices), tuple(edges), signs)


def certify_cycle(g: Graph, c: OrientedCycle) -> bool:
    k = len(c.edges)
    if k < 2 or len(c.vertices) != k or len(set(c.vertices)) != k or len(set(c.edges)) != k:
        return False
    for i, e in enumerate(c.edges):
        x, y = c.vertices[i], c.vertices[(i + 1) % k]
        if g.edges[e] == (x, y):
            s = 1
        elif g.edges[e] == (y, x):
            s = -1
        else:
            return False
        if c.signs[i] != s:
            return False
    return True


def enumerate_cycles(g: Graph, budget: Budget | None = None) -> list[OrientedCycle]:
    """Every simple cycle once, starting at its smallest vertex.

    Orientation is fixed by requiring the first edge index to be smaller than
    the closing edge index.
    """
    if budget is None:
        return list(_cycles_cached(g))
    return _enumerate_cycles(g, budget)


@functools.lru_cache(maxsize=64)
def _cycles_cached(g: Graph) -> tuple:
    return tuple(_enumerate_cycles(g, None))


def _enumerate_cycles(g: Graph, budget: Budget | None) -> list[OrientedCycle]:
    out = []
    for s in g.vertices:
        verts = [s]
        edges: list[int] = []
        on = {s}

        def rec(v):
            for e in g.incident_edges(v):
                w = g.other_end(e, v)
                if w == s and edges and e != edges[0] and edges[0] < e:
                    _tick(budget)
                    out.append(OrientedCycle.from_vertices_edges(g, verts, edges + [e]))
                elif w > s and w not in on:
                    on.add(w)
                    verts.append(w)
                    edges.append(e)
                    rec(w)
                    on.discard(w)
                    verts.pop()
                    edges.pop()

        rec(s)
    return out


def enumerate_disjoint_cycle_pairs(
    g: Graph, cycles: Sequence[OrientedCycle] | None = None, budget: Budget | None = None
) -> list[tuple[OrientedCycle, OrientedCycle]]:
    """Ordered pairs ``(C, D)`` of vertex-disjoint canonical cycles."""
    if cycles is None:
        cycles = enumerate_cycles(g, budget)
    masks = [sum(1 << v for v in c.vertices) for c in cycles]
    out = []
    for i, j in itertools.permutations(range(len(cycles)), 2):
        if not masks[i] & masks[j]:
            _tick(budget)
            out.append((cycles[i], cycles[j]))
    return out


# -- Kuratowski subdivisions ------------------------------------------------------

K5_MODEL = tuple(itertools.combinations(range(5), 2))
K33_MODEL = tuple((i, j) for i in range(3) for j in range(3, 6))


@dataclass(frozen=True)
class KuratowskiSubdivision:
    """Subdivision of K5 or K_{3,3}.

    ``branch`` lists the model vertices' images (for K33 the first three form
    one colour class). ``arcs`` maps a model edge ``(i, j)`` to the host path
    from ``branch[i]`` to ``branch[j]``.
    """

    kind: str
    branch: tuple
    arcs: tuple  # tuple of ((i, j), Path) in model-edge order

    @property
    def arc_map(self) -> dict:
        return dict(self.arcs)

    @property
    def edge_set(self) -> frozenset:
        return frozenset(e for _, p in self.arcs for e in p.edges)

    @property
    def vertex_set(self) -> frozenset:
        return frozenset(v for _, p in self.arcs for v in p.vertices)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "branch": list(self.branch),
            "arcs": [{"model_edge": list(k), **p.to_dict()} for k, p in self.arcs],
        }


def certify_kuratowski(g: Graph, h: KuratowskiSubdivision) -> bool:
    model = K5_MODEL if h.kind == "K5" else K33_MODEL if h.kind == "K33" else None
    if model is None or len(h.branch) != (5 if h.kind == "K5" else 6):
        return False
    if len(set(h.branch)) != len(h.branch):
        return False
    arcs = h.arc_map
    if set(arcs) != set(model):
        return False
    branch = set(h.branch)
    inner_seen: set[int] = set()
    for (i, j), p in h.arcs:
        if not is_path(g, p) or p.start != h.branch[i] or p.end != h.branch[j]:
            return False
        inner = set(p.interior)
        if inner & branch or inner & inner_seen:
            return False
        inner_seen |= inner
    return True


def _route(g, arcs, branch_set, budget, used=None, acc=None):
    """Route model arcs as internally disjoint paths avoiding branch vertices."""
    if used is None:
        used, acc = set(), []
    if len(acc) == len(arcs):
        yield list(acc)
        return
    x, y = arcs[len(acc)]
    allowed = set(g.vertices) - branch_set - used
    for p in all_paths(g, x, y, allowed, budget=budget):
        used.update(p.interior)
        acc.append(p)
        yield from _route(g, arcs, branch_set, budget, used, acc)
        acc.pop()
        used.difference_update(p.interior)


def enumerate_kuratowski_subdivisions(
    g: Graph, kind: str | None = None, budget: Budget | None = None
) -> list[KuratowskiSubdivision]:
    """All K5 / K33 subdivisions of ``g`` (both kinds when ``kind`` is None).

    Each subgraph appears once: branch sets are taken up to the model's
    symmetry (sorted 5-set; unordered pair of 3-sets) and distinct routings
    give distinct edge sets.
    """
    return list(iter_kuratowski_subdivisions(g, kind, budget))


def iter_kuratowski_subdivisions(g: Graph, kind: str | None = None, budget: Budget | None = None):
    kinds = ("K5", "K33") if kind is None else (kind,)
    for k in kinds:
        if k == "K5":
            cand = [v for v in g.vertices if len(g.neighbors(v)) >= 4]
            for br in itertools.combinations(cand, 5):
                arcs = [(br[i], br[j]) for i, j in K5_MODEL]
                for paths in _route(g, arcs, set(br), budget):
                    yield KuratowskiSubdivision("K5", br, tuple(zip(K5_MODEL, paths)))
        elif k == "K33":
            cand = [v for v in g.vertices if len(g.neighbors(v)) >= 3]
            for a in itertools.combinations(cand, 3):
                rest = [v for v in cand if v not in a and v > a[0]]
                for b in itertools.combinations(rest, 3):
                    br = a + b
                    arcs = [(br[i], br[j]) for i, j in K33_MODEL]
                    for paths in _route(g, arcs, set(br), budget):
                        yield KuratowskiSubdivision("K33", br, tuple(zip(K33_MODEL, paths)))
        else:
            raise GraphError(f"unknown Kuratowski kind {k!r}")


# -- quads -------------------------------------------------------------------------


@dataclass(frozen=True)
class Quad:
    """Three ``a-b`` paths ``P``, three ``c-d`` paths ``R`` and connectors ``Q``.

    ``Q[i]`` runs from ``u_i`` on ``P[i]`` to ``v_i`` on ``R[i]``; a trivial
    connector is the one-vertex path ``((u_i,), ())``.
    """

    a: int
    b: int
    c: int
    d: int
    P: tuple
    Q: tuple
    R: tuple

    @property
    def axles(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return (self.a, self.b), (self.c, self.d)

    @property
    def u(self) -> tuple:
        return tuple(q.vertices[0] for q in self.Q)

    @property
    def v(self) -> tuple:
        return tuple(q.vertices[-1] for q in self.Q)

    @property
    def width(self) -> int:
        return sum(q.length for q in self.Q)

    @property
    def edge_set(self) -> frozenset:
        return frozenset(e for p in self.P + self.Q + self.R for e in p.edges)

    @property
    def vertex_set(self) -> frozenset:
        return frozenset(x for p in self.P + self.Q + self.R for x in p.vertices)

    def left_sides(self) -> list[tuple[int, int]]:
        return [(s, t) for s in (self.a, self.b) for t in (self.c, self.d)]

    def key(self):
        return (
            self.axles,
            frozenset((p.edges, q.vertices, r.edges) for p, q, r in zip(self.P, self.Q, self.R)),
        )

    def to_dict(self) -> dict:
        return {
            "axles": [[self.a, self.b], [self.c, self.d]],
            "P": [p.to_dict() for p in self.P],
            "Q": [q.to_dict() for q in self.Q],
            "R": [r.to_dict() for r in self.R],
            "width": self.width,
        }


def certify_quad(g: Graph, k: Quad) -> bool:
    """Check the quad axioms (connectors meeting P and R only at their ends)."""
    a, b, c, d = k.a, k.b, k.c, k.d
    if len({a, b, c, d}) != 4 or not (len(k.P) == len(k.Q) == len(k.R) == 3):
        return False
    for p in k.P:
        if not is_path(g, p) or {p.start, p.end} != {a, b} or p.start != a or len(p.interior) < 1:
            return False
    for r in k.R:
        if not is_path(g, r) or r.start != c or r.end != d or len(r.interior) < 1:
            return False
    pint = [set(p.interior) for p in k.P]
    rint = [set(r.interior) for r in k.R]
    for i, j in itertools.combinations(range(3), 2):
        if pint[i] & pint[j] or rint[i] & rint[j]:
            return False
    pall = set().union(*pint) | {a, b}
    rall = set().union(*rint) | {c, d}
    qverts = []
    for i, q in enumerate(k.Q):
        if not is_path(g, q):
            return False
        ui, vi = q.start, q.end
        if ui not in pint[i] or vi not in rint[i]:
            return False
        inner = set(q.vertices) - {ui, vi}
        if inner & (pall | rall):
            return False
        qverts.append(set(q.vertices))
        # condition (5): P_i meets the R paths only inside Q_i
        if set(k.P[i].vertices) & rall - set(q.vertices):
            return False
    for i, j in itertools.combinations(range(3), 2):
        if qverts[i] & qverts[j]:
            return False
    if {a, b} & rall or {c, d} & pall:
        return False
    return True


def _theta_triples(g, x, y, avoid, budget, cache=None):
    if cache is not None and (x, y) in cache:
        paths = cache[(x, y)]
    else:
        found = sorted(all_paths(g, x, y, min_length=2, budget=budget), key=lambda p: p.edges)
        paths = [(p, frozenset(p.interior)) for p in found]
        if cache is not None:
            cache[(x, y)] = paths
    avoid = set(avoid)
    paths = [(p, s) for p, s in paths if not avoid & s]
    n = len(paths)
    for i in range(n):
        p, si = paths[i]
        for j in range(i + 1, n):
            q, sj = paths[j]
            if si & sj:
                continue
            sij = si | sj
            for k in range(j + 1, n):
                r, sk = paths[k]
                if not sij & sk:
                    yield (p, q, r)


def iter_quads(g: Graph, budget: Budget | None = None) -> Iterator[Quad]:
    if budget is None:
        return iter(_quads_cached(g))
    return _iter_quads(g, budget)


@functools.lru_cache(maxsize=64)
def _quads_cached(g: Graph) -> tuple:
    return tuple(_iter_quads(g, None))


def _iter_quads(g: Graph, budget: Budget | None) -> Iterator[Quad]:
    seen = set()
    cache: dict = {}
    cand = [v for v in g.vertices if len(g.neighbors(v)) >= 3]
    for four in itertools.combinations(cand, 4):
        w, x, y, z = four
        for (a, b), (c, d) in (((w, x), (y, z)), ((w, y), (x, z)), ((w, z), (x, y))):
            ptrip = list(_theta_triples(g, a, b, (c, d), budget, cache))
            if not ptrip:
                continue
            rtrip = list(_theta_triples(g, c, d, (a, b), budget, cache))
            for P in ptrip:
                pint = [set(p.interior) for p in P]
                pall = set().union(*pint) | {a, b}
                for R in rtrip:
                    rint = [set(r.interior) for r in R]
                    rall = set().union(*rint) | {c, d}
                    meet = {}
                    ok = True
                    for i in range(3):
                        for j in range(3):
                            common = pint[i] & rint[j]
                            if len(common) > 1:
                                ok = False
                            elif common:
                                if i in meet or j in meet.values():
                                    ok = False
                                meet[i] = j
                    if not ok:
                        continue
                    free_p = [i for i in range(3) if i not in meet]
                    free_r = [j for j in range(3) if j not in meet.values()]
                    for perm in itertools.permutations(free_r):
                        match = dict(meet)
                        match.update(zip(free_p, perm))
                        for Qs in _route_connectors(g, P, R, match, pint, rint, pall | rall, budget):
                            order = sorted(range(3), key=lambda i: P[i].edges)
                            quad = Quad(
                                a, b, c, d,
                                tuple(P[i] for i in order),
                                tuple(Qs[i] for i in order),
                                tuple(R[match[i]] for i in order),
                            )
                            key = quad.key()
                            if key not in seen:
                                seen.add(key)
                                _tick(budget)
                                yield quad


def _route_connectors(g, P, R, match, pint, rint, blocked, budget):
    """Connector paths Q_i from P[i] to R[match[i]], mutually disjoint."""
    out: list = [None] * 3
    used: set = set()

    def rec(i):
        if i == 3:
            yield list(out)
            return
        j = match[i]
        common = pint[i] & rint[j]
        if common:
            (w,) = common
            if w in used:
                return
            out[i] = Path((w,), ())
            used.add(w)
            yield from rec(i + 1)
            used.discard(w)
            return
        # P_i may not touch any R path when its connector is nontrivial
        for ui in P[i].interior:
            if ui in used or any(ui in r for r in rint):
                continue
            for vi in R[j].interior:
                if vi in used or any(vi in p for p in pint):
                    continue
                allowed = set(g.vertices) - blocked - used
                for q in all_paths(g, ui, vi, allowed, budget=budget):
                    out[i] = q
                    used.update(q.vertices)
                    yield from rec(i + 1)
                    used.difference_update(q.vertices)

    # condition (5) for strands whose P meets an R it is not matched to is
    # excluded by the meet construction above
    yield from rec(0)


def enumerate_quads(g: Graph, budget: Budget | None = None) -> list[Quad]:
    return list(iter_quads(g, budget))


# -- triads and tripods ---------------------------------------------------------


@dataclass(frozen=True)
class Triad:
    center: int
    legs: tuple  # paths from center to each foot, in foot order

    @property
    def feet(self) -> tuple:
        return tuple(p.end for p in self.legs)

    @property
    def edge_set(self) -> frozenset:
        return frozenset(e for p in self.legs for e in p.edges)


@dataclass(frozen=True)
class Tripod:
    a: int
    b: int
    paths: tuple  # three a-b paths (P_i u R_i)
    legs: tuple  # legs[i] from u_i on paths[i] to foot v_i

    @property
    def feet(self) -> tuple:
        return tuple(q.end for q in self.legs)

    @property
    def edge_set(self) -> frozenset:
        return frozenset(e for p in self.paths + self.legs for e in p.edges)


def _disjoint_legs(g, sources, targets, allowed, budget):
    """Paths sources[i] -> targets[i], vertex-disjoint (a shared source is allowed)."""
    out: list = []
    used: set = set()

    def rec(i):
        if i == len(targets):
            yield list(out)
            return
        s, t = sources[i], targets[i]
        if s == t:
            if s in used:
                return
            out.append(Path((s,), ()))
            used.add(s)
            yield from rec(i + 1)
            used.discard(s)
            out.pop()
            return
        for p in all_paths(g, s, t, allowed - used - set(targets), budget=budget):
            if t in used:
                continue
            out.append(p)
            new = set(p.vertices) - {s} if s in sources[:i] or s in sources[i + 1:] else set(p.vertices)
            used.update(new)
            yield from rec(i + 1)
            used.difference_update(new)
            out.pop()

    yield from rec(0)


def find_triad(g: Graph, feet: Sequence[int], budget: Budget | None = None) -> Triad | None:
    feet = tuple(feet)
    if len(set(feet)) != 3:
        raise GraphError("a triad needs three distinct feet")
    allowed = set(g.vertices) - set(feet)
    for w in sorted(allowed):
        for legs in _disjoint_legs(g, (w, w, w), feet, allowed - {w}, budget):
            return Triad(w, tuple(legs))
    return None


def certify_triad(g: Graph, t: Triad) -> bool:
    if len(t.legs) != 3:
        return False
    seen = {t.center}
    for p in t.legs:
        if not is_path(g, p) or p.start != t.center or p.length < 1:
            return False
        rest = set(p.vertices[1:])
        if rest & seen:
            return False
        seen |= rest
    return True


def find_tripod(g: Graph, feet: Sequence[int], budget: Budget | None = None) -> Tripod | None:
    feet = tuple(feet)
    if len(set(feet)) != 3:
        raise GraphError("a tripod needs three distinct feet")
    others = [v for v in g.vertices if v not in feet and len(g.neighbors(v)) >= 3]
    for a, b in itertools.combinations(others, 2):
        for theta in _theta_triples(g, a, b, (), budget):
            inner = [set(p.interior) for p in theta]
            on_theta = set().union(*inner) | {a, b}
            if a in feet or b in feet:
                continue
            for perm in itertools.permutations(feet):
                # foot perm[i] hangs off theta path i
                found = _tripod_legs(g, theta, inner, on_theta, perm, budget)
                if found is not None:
                    order = sorted(range(3), key=lambda i: feet.index(perm[i]))
                    return Tripod(a, b, tuple(theta[i] for i in order), tuple(found[i] for i in order))
    return None


def _tripod_legs(g, theta, inner, on_theta, perm, budget):
    out: list = [None] * 3
    used: set = set()

    def rec(i):
        if i == 3:
            return list(out)
        foot = perm[i]
        if foot in on_theta:
            if foot in inner[i] and foot not in used:
                out[i] = Path((foot,), ())
                used.add(foot)
                r = rec(i + 1)
                if r:
                    return r
                used.discard(foot)
            return None
        for ui in theta[i].interior:
            if ui in used:
                continue
            allowed = set(g.vertices) - on_theta - used - set(perm)
            for q in all_paths(g, ui, foot, allowed, budget=budget):
                out[i] = q
                used.update(q.vertices)
                r = rec(i + 1)
                if r:
                    return r
                used.difference_update(q.vertices)
        return None

    return rec(0)


def certify_tripod(g: Graph, t: Tripod) -> bool:
    if len(t.paths) != 3 or len(t.legs) != 3:
        return False
    if len({t.a, t.b, *t.feet}) != 5:
        return False
    inner = []
    for p in t.paths:
        if not is_path(g, p) or p.start != t.a or p.end != t.b or p.length < 2:
            return False
        inner.append(set(p.interior))
    if inner[0] & inner[1] or inner[0] & inner[2] or inner[1] & inner[2]:
        return False
    on_theta = set().union(*inner) | {t.a, t.b}
    seen: set = set()
    for i, q in enumerate(t.legs):
        if not is_path(g, q) or q.start not in inner[i]:
            return False
        if set(q.vertices[1:]) & on_theta or set(q.vertices) & seen:
            return False
        seen |= set(q.vertices)
    return True


# -- disjoint path pairs ------------------------------------------------------------


def enumerate_disjoint_path_pairs(
    g: Graph, R1: Iterable[int], R2: Iterable[int], budget: Budget | None = None
) -> list[tuple[Path, Path]]:
    """Vertex-disjoint ``(P1, P2)`` with P1's ends in R1 and P2's ends in R2.

    Each path is listed once, oriented from its smaller end to its larger end.
    """
    R1, R2 = sorted(set(R1)), sorted(set(R2))
    first = []
    for r1, r2 in itertools.combinations(R1, 2):
        first.extend(all_paths(g, r1, r2, budget=budget))
    out = []
    for p1 in first:
        block = set(p1.vertices)
        allowed = set(g.vertices) - block
        for s1, s2 in itertools.combinations(R2, 2):
            if s1 in block or s2 in block:
                continue
            for p2 in all_paths(g, s1, s2, allowed, budget=budget):
                out.append((p1, p2))
    return out


# -- deserialisation (certificate checking) ---------------------------------------


def path_from_dict(doc) -> Path:
    try:
        return Path(tuple(int(x) for x in doc["vertices"]), tuple(int(x) for x in doc["edges"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphError(f"bad path document: {exc}") from None


def cycle_from_dict(doc) -> OrientedCycle:
    try:
        return OrientedCycle(
            tuple(int(x) for x in doc["vertices"]),
            tuple(int(x) for x in doc["edges"]),
            tuple(int(x) for x in doc["signs"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphError(f"bad cycle document: {exc}") from None


def kuratowski_from_dict(doc) -> KuratowskiSubdivision:
    try:
        arcs = tuple((tuple(int(x) for x in a["model_edge"]), path_from_dict(a)) for a in doc["arcs"])
        return KuratowskiSubdivision(str(doc["kind"]), tuple(int(x) for x in doc["branch"]), arcs)
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphError(f"bad Kuratowski document: {exc}") from None


def quad_from_dict(doc) -> Quad:
    try:
        (a, b), (c, d) = doc["axles"]
        return Quad(
            int(a), int(b), int(c), int(d),
            tuple(path_from_dict(p) for p in doc["P"]),
            tuple(path_from_dict(p) for p in doc["Q"]),
            tuple(path_from_dict(p) for p in doc["R"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphError(f"bad quad document: {exc}") from None


def kuratowski_from_edges(g: Graph, edge_ids) -> KuratowskiSubdivision | None:
    """Recognise an edge set as a K5 or K33 subdivision, or return None."""
    edge_ids = set(edge_ids)
    inc: dict = {}
    for e in edge_ids:
        for x in g.ends(e):
            inc.setdefault(x, []).append(e)
    if any(len(es) not in (2, 3, 4) for es in inc.values()):
        return None
    branch = sorted(x for x, es in inc.items() if len(es) >= 3)
    degs = {len(inc[x]) for x in branch}
    if len(branch) == 5 and degs == {4}:
        kind = "K5"
    elif len(branch) == 6 and degs == {3}:
        kind = "K33"
    else:
        return None
    bset = set(branch)
    arcs = {}
    used = set()
    for x in branch:
        for e in sorted(inc[x]):
            if e in used:
                continue
            verts, edges, cur, ce = [x], [], x, e
            while True:
                used.add(ce)
                edges.append(ce)
                cur = g.other_end(ce, cur)
                verts.append(cur)
                if cur in bset or cur == x:
                    break
                (ce,) = [f for f in inc[cur] if f != ce]
            if cur == x or (x, cur) in arcs or (cur, x) in arcs:
                return None
            arcs[(x, cur)] = Path(tuple(verts), tuple(edges))
    if used != edge_ids:
        return None
    if kind == "K5":
        order = branch
    else:
        # colour the branch vertices: neighbours (through arcs) of branch[0] form the other class
        first = branch[0]
        other = sorted({y for (x, y) in arcs if x == first} | {x for (x, y) in arcs if y == first})
        if len(other) != 3:
            return None
        order = sorted(set(branch) - set(other)) + other
    model = K5_MODEL if kind == "K5" else K33_MODEL
    out = []
    for i, j in model:
        x, y = order[i], order[j]
        if (x, y) in arcs:
            out.append(((i, j), arcs[(x, y)]))
        elif (y, x) in arcs:
            out.append(((i, j), arcs[(y, x)].reversed()))
        else:
            return None
    h = KuratowskiSubdivision(kind, tuple(order), tuple(out))
    return h if certify_kuratowski(g, h) else None
