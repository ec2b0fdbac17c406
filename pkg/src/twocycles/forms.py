"""Bilinear forms on oriented edges, the 2-cycle lattice and the named generators."""

from __future__ import annotations

import enum
import functools
import itertools
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass

from .graph import EdgeVector, Graph, contract, incidence
from .intlattice import SubLattice, kernel_basis, span
from .patterns import (
    K5_MODEL,
    K33_MODEL,
    KuratowskiSubdivision,
    OrientedCycle,
    Path,
    Quad,
    certify_cycle,
)


class FormError(ValueError):
    pass


class SigmaMode(enum.Enum):
    PLAIN = "plain"
    SYM = "sym"
    SKEW = "skew"

    @classmethod
    def parse(cls, x) -> SigmaMode:
        if isinstance(x, cls):
            return x
        try:
            return cls(str(x).lower())
        except ValueError:
            raise FormError(f"unknown mode {x!r}; expected plain, sym or skew") from None


class Form2:
    """Integer bilinear form on edge ids, stored sparsely as ``{(e, f): value}``."""

    __slots__ = ("entries",)

    def __init__(self, entries: Mapping | Iterable = ()):
        acc: dict = {}
        items = entries.items() if isinstance(entries, Mapping) else entries
        for (e, f), val in items:
            acc[(e, f)] = acc.get((e, f), 0) + val
        self.entries = {k: v for k, v in acc.items() if v}

    def __getitem__(self, ef) -> int:
        return self.entries.get(ef, 0)

    def __bool__(self) -> bool:
        return bool(self.entries)

    def __eq__(self, other) -> bool:
        return isinstance(other, Form2) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(frozenset(self.entries.items()))

    def __add__(self, other: Form2) -> Form2:
        return Form2(itertools.chain(self.entries.items(), other.entries.items()))

    def __sub__(self, other: Form2) -> Form2:
        return self + (-other)

    def __neg__(self) -> Form2:
        return Form2({k: -v for k, v in self.entries.items()})

    def __mul__(self, c: int) -> Form2:
        return Form2({k: c * v for k, v in self.entries.items()})

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"Form2({dict(sorted(self.entries.items()))})"

    def items(self):
        return self.entries.items()

    def transpose(self) -> Form2:
        return Form2({(f, e): v for (e, f), v in self.entries.items()})

    def support_edges(self) -> set:
        return {x for ef in self.entries for x in ef}

    def row(self, e) -> EdgeVector:
        return EdgeVector((f, v) for (a, f), v in self.entries.items() if a == e)

    def to_vector(self, key: Sequence[tuple[int, int]]) -> tuple[int, ...]:
        pos = {k: i for i, k in enumerate(key)}
        vec = [0] * len(key)
        for k, v in self.entries.items():
            if k not in pos:
                raise FormError(f"form has entry {v} on pair {k} outside the coordinate set")
            vec[pos[k]] = v
        return tuple(vec)

    @classmethod
    def from_vector(cls, vec: Sequence[int], key: Sequence[tuple[int, int]]) -> Form2:
        return cls((k, v) for k, v in zip(key, vec) if v)

    @classmethod
    def outer(cls, x: Mapping, y: Mapping) -> Form2:
        return cls(((e, f), a * b) for e, a in x.items() for f, b in y.items())

    def to_list(self) -> list[list[int]]:
        return [[e, f, v] for (e, f), v in sorted(self.entries.items())]

    @classmethod
    def from_list(cls, triples) -> Form2:
        try:
            return cls(((int(e), int(f)), int(v)) for e, f, v in triples)
        except (TypeError, ValueError) as exc:
            raise FormError(f"form must be a list of [e, f, value] triples: {exc}") from None


def transpose(d: Form2) -> Form2:
    return d.transpose()


def sigma_apply(d: Form2, mode) -> Form2:
    mode = SigmaMode.parse(mode)
    if mode is SigmaMode.PLAIN:
        return d
    if mode is SigmaMode.SYM:
        return d + d.transpose()
    return d - d.transpose()


# -- 2-cycle test and lattice ------------------------------------------------------


@dataclass
class TwoCycleCheck:
    ok: bool
    violations: list

    def __bool__(self) -> bool:
        return self.ok

    @property
    def report(self) -> str:
        return "ok" if self.ok else "; ".join(self.violations)


def is_two_cycle(g: Graph, d: Form2, mode=SigmaMode.PLAIN, limit: int = 10) -> TwoCycleCheck:
    """Check that ``d`` lies in the 2-cycle lattice of ``g`` in the given mode."""
    mode = SigmaMode.parse(mode)
    bad = []
    for (e, f), v in sorted(d.items()):
        if not (0 <= e < g.m and 0 <= f < g.m):
            bad.append(f"entry on ({e},{f}) names a missing edge")
        elif g.adjacent(e, f):
            bad.append(f"d({e},{f})={v} but edges {e} and {f} share an end")
    for side in ("row", "column"):
        sums: dict = {}
        for (e, f), v in d.items():
            fixed, moving = (e, f) if side == "row" else (f, e)
            if not 0 <= moving < g.m:
                continue
            t, h = g.edges[moving]
            sums[(fixed, h)] = sums.get((fixed, h), 0) + v
            sums[(fixed, t)] = sums.get((fixed, t), 0) - v
        for (fixed, x), s in sorted(sums.items()):
            if s:
                bad.append(f"{side} of edge {fixed} is not a circulation at vertex {x} (net {s})")
    if mode is not SigmaMode.PLAIN:
        other = d.transpose() if mode is SigmaMode.SYM else -d.transpose()
        for k in sorted(set(d.entries) | set(other.entries)):
            if d[k] != other[k]:
                bad.append(f"d{k}={d[k]} breaks {mode.value} symmetry")
                break
    return TwoCycleCheck(not bad, bad[:limit])


@functools.lru_cache(maxsize=64)
def pair_key(g: Graph) -> tuple:
    """Lattice coordinates: ordered nonadjacent edge pairs, lexicographic."""
    return tuple(g.nonadjacent_pairs())


def constraint_rows(g: Graph, mode=SigmaMode.PLAIN, allowed: Iterable | None = None):
    """Sparse rows ``{coordinate: coefficient}`` cutting out the lattice."""
    mode = SigmaMode.parse(mode)
    if allowed is None:
        key = pair_key(g)
    else:
        allowed = set(allowed)
        key = tuple(k for k in pair_key(g) if k in allowed)
    pos = {k: i for i, k in enumerate(key)}
    rows = []
    for e in range(g.m):
        ends = set(g.ends(e))
        for v in g.vertices:
            if v in ends:
                continue
            r = {}
            c = {}
            for f in g.incident_edges(v):
                s = incidence(g, v, f)
                if (e, f) in pos:
                    r[pos[(e, f)]] = r.get(pos[(e, f)], 0) + s
                if (f, e) in pos:
                    c[pos[(f, e)]] = c.get(pos[(f, e)], 0) + s
            for x in (r, c):
                x = {k: val for k, val in x.items() if val}
                if x:
                    rows.append(x)
    if mode is not SigmaMode.PLAIN:
        sgn = -1 if mode is SigmaMode.SYM else 1
        for (e, f), i in pos.items():
            j = pos.get((f, e))
            if j is None:
                rows.append({i: 1})
            elif e < f:
                rows.append({i: 1, j: sgn})
    return key, rows


def two_cycle_lattice(g: Graph, mode=SigmaMode.PLAIN, allowed: Iterable | None = None) -> SubLattice:
    """L^sigma(G), optionally restricted to forms supported on ``allowed`` pairs.

    Coordinates are always the full :func:`pair_key` of ``g``.
    """
    full = pair_key(g)
    sub, rows = constraint_rows(g, mode, allowed)
    if allowed is None:
        return kernel_basis(rows, len(sub), index_key=full)
    kern = kernel_basis(rows, len(sub))
    pos = {k: i for i, k in enumerate(full)}
    lifted = []
    for vec in kern.basis:
        w = [0] * len(full)
        for k, x in zip(sub, vec):
            w[pos[k]] = x
        lifted.append(w)
    return span(lifted, len(full), index_key=full)


def form_vector(g: Graph, d: Form2) -> tuple[int, ...]:
    return d.to_vector(pair_key(g))


def vector_form(g: Graph, vec: Sequence[int]) -> Form2:
    return Form2.from_vector(vec, pair_key(g))


# -- named generators --------------------------------------------------------------


def circuit_pair_form(g: Graph, c: OrientedCycle, d: OrientedCycle) -> Form2:
    """chi_C (x) chi_D for vertex-disjoint oriented cycles."""
    for x in (c, d):
        if not certify_cycle(g, x):
            raise FormError(f"not an oriented cycle of the graph: {x.to_dict()}")
    shared = c.vertex_set & d.vertex_set
    if shared:
        raise FormError(f"cycles share vertex {min(shared)}")
    return Form2.outer(c.chi(), d.chi())


def _perm_sign(seq: Sequence[int]) -> int:
    s = 1
    seq = list(seq)
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                s = -s
    return s


def k5_model_value(x: tuple[int, int], y: tuple[int, int]) -> int:
    """Value on model edges i->j, k->l of K5 (labels 0..4)."""
    if len({*x, *y}) < 4:
        return 0
    (m,) = set(range(5)) - {*x, *y}
    return _perm_sign((*x, *y, m))


def k33_model_value(x: tuple[int, int], y: tuple[int, int]) -> int:
    """Value on model edges a_i->b_j (labels a: 0..2, b: 3..5)."""
    i1, j1 = x[0], x[1] - 3
    i2, j2 = y[0], y[1] - 3
    if i1 == i2 or j1 == j2:
        return 0
    (i3,) = {0, 1, 2} - {i1, i2}
    (j3,) = {0, 1, 2} - {j1, j2}
    return _perm_sign((i1, i2, i3)) * _perm_sign((j1, j2, j3))


def model_form(g: Graph, kind: str, arcs: Mapping[tuple[int, int], Path]) -> Form2:
    """Pull the elementary form of K5/K33 back along a subdivision.

    ``arcs[(i, j)]`` is the host path from model vertex ``i`` to ``j``; each host
    edge carries the sign of its orientation against that traversal.
    """
    value = k5_model_value if kind == "K5" else k33_model_value
    signed = {me: p.signed(g) for me, p in arcs.items()}
    out = {}
    for x, y in itertools.product(signed, repeat=2):
        val = value(x, y)
        if not val:
            continue
        for h, s in signed[x]:
            for h2, s2 in signed[y]:
                out[(h, h2)] = val * s * s2
    return Form2(out)


def elementary_k5_form(labeling: Sequence[int] = (0, 1, 2, 3, 4), g: Graph | None = None) -> Form2:
    """The elementary form of K5 for the vertex order ``labeling``.

    Without ``g`` the host is :func:`complete_graph` (5); the host must have an
    edge between every two labelled vertices.
    """
    return _elementary(labeling, g, 5, K5_MODEL, "K5")


def elementary_k33_form(labeling: Sequence[int] = (0, 1, 2, 3, 4, 5), g: Graph | None = None) -> Form2:
    """Elementary form of K33; ``labeling`` is (a1, a2, a3, b1, b2, b3)."""
    return _elementary(labeling, g, 6, K33_MODEL, "K33")


def _elementary(labeling, g, n, model, kind):
    labeling = tuple(labeling)
    if len(labeling) != n or len(set(labeling)) != n:
        raise FormError(f"{kind} labeling must list {n} distinct vertices")
    if g is None:
        from .catalog import complete_bipartite_graph, complete_graph

        g = complete_graph(5) if kind == "K5" else complete_bipartite_graph(3, 3)
    arcs = {}
    for i, j in model:
        x, y = labeling[i], labeling[j]
        es = g.edges_between(x, y)
        if not es:
            raise FormError(f"no edge between {x} and {y}")
        arcs[(i, j)] = Path((x, y), (es[0],))
    return model_form(g, kind, arcs)


def subdivide_form(d: Form2, mapping: Mapping[int, Sequence]) -> Form2:
    """Transport ``d`` along an edge map.

    ``mapping[e]`` lists the new edges replacing ``e`` either as bare ids
    (oriented along ``e``) or as ``(edge, sign)`` pairs.
    """
    def signed(e):
        out = []
        for x in mapping[e]:
            out.append(tuple(x) if isinstance(x, (tuple, list)) else (x, 1))
        return out

    acc = {}
    for (e, f), v in d.items():
        for h, s in signed(e):
            for h2, s2 in signed(f):
                acc[(h, h2)] = acc.get((h, h2), 0) + v * s * s2
    return Form2(acc)


def kuratowski_form(g: Graph, h: KuratowskiSubdivision, sign: int = 1) -> Form2:
    if sign not in (1, -1):
        raise FormError("sign must be +1 or -1")
    d = model_form(g, h.kind, h.arc_map)
    return d if sign == 1 else -d


def _subpath(p: Path, start: int, stop: int) -> Path:
    i, j = p.vertices.index(start), p.vertices.index(stop)
    if i <= j:
        return Path(p.vertices[i : j + 1], p.edges[i:j])
    return Path(p.vertices[j : i + 1], p.edges[j:i]).reversed()


def quad_sides(q: Quad, left_side: tuple[int, int], first: int = 0):
    """Strand order and the left/right routes of the two thetas.

    Returns ``(order, left_routes, right_routes)`` where ``left_routes[k]`` is
    the path s -> u -> v -> t through strand ``order[k]``.
    """
    s, t = left_side
    if s not in (q.a, q.b) or t not in (q.c, q.d):
        raise FormError(f"left side {left_side} must take one end of each axle ({q.a},{q.b}) / ({q.c},{q.d})")
    if first not in (0, 1, 2):
        raise FormError("first must be 0, 1 or 2")
    s2 = q.b if s == q.a else q.a
    t2 = q.d if t == q.c else q.c
    order = (first,) + tuple(i for i in range(3) if i != first)
    left, right = [], []
    for i in order:
        u, v = q.u[i], q.v[i]
        for side, (x, y) in ((left, (s, t)), (right, (s2, t2))):
            a = _subpath(q.P[i], x, u)
            b = _subpath(q.R[i], v, y)
            side.append(Path(a.vertices + q.Q[i].vertices[1:] + b.vertices[1:], a.edges + q.Q[i].edges + b.edges))
    return order, left, right


def quad_form(g: Graph, q: Quad, left_side: tuple[int, int], first: int = 0) -> Form2:
    """q_{s,t} = chi_{C2,D3} - chi_{C3,D2}."""
    _, left, right = quad_sides(q, left_side, first)
    lc = [p.chi(g) for p in left]
    rc = [p.chi(g) for p in right]
    c2, c3 = lc[0] - lc[2], lc[0] - lc[1]
    d2, d3 = rc[0] - rc[2], rc[0] - rc[1]
    return Form2.outer(c2, d3) - Form2.outer(c3, d2)


# -- P_{u,v} and (un)contraction ------------------------------------------------------


def puv(g: Graph, d: Form2, u: int, v: int) -> dict:
    """Restriction of ``d`` to (edges at u) x (edges at v); nonzero entries only."""
    eu, ev = g.incident_edges(u), g.incident_edges(v)
    return {(e, f): d[(e, f)] for e in eu for f in ev if d[(e, f)]}


def _parallel(g: Graph, e: int) -> list[int]:
    u, v = g.ends(e)
    return [h for h in g.edges_between(u, v) if h != e]


def contract_form(g: Graph, d: Form2, e: int) -> tuple[Graph, Form2]:
    """d/e on G/e.

    Requires P_{u,v}(d) = P_{v,u}(d) = 0 for the ends of ``e``, and ``d`` to
    vanish on edges parallel to ``e`` (they become loops and are dropped).
    """
    u, v = g.ends(e)
    if puv(g, d, u, v) or puv(g, d, v, u):
        raise FormError(f"P_uv(d) is nonzero at the ends of edge {e}")
    par = set(_parallel(g, e))
    for (x, y), val in d.items():
        if x in par or y in par:
            raise FormError(f"d is nonzero on edge {x if x in par else y}, parallel to the contracted edge")
    g2, emap = contract(g, e)
    out = {}
    for (x, y), val in d.items():
        if x == e or y == e:
            continue
        out[(emap[x], emap[y])] = val
    return g2, Form2(out)


def uncontract_map(g: Graph, e: int) -> tuple[Graph, dict]:
    """phi: edges of G -> edge vectors of G/e used to lift forms."""
    u, _ = g.ends(e)
    g2, emap = contract(g, e)
    par = set(_parallel(g, e))
    phi = {}
    for f in range(g.m):
        if f == e or f in par:
            continue
        phi[f] = EdgeVector({emap[f]: 1})
    acc = EdgeVector()
    for h in g.incident_edges(u):
        if h != e and h not in par:
            acc = acc + EdgeVector({emap[h]: incidence(g, u, h)})
    phi[e] = acc * (-incidence(g, u, e))
    for f in par:
        phi[f] = EdgeVector()
    return g2, phi


def uncontract_form(g: Graph, dprime: Form2, e: int, mode=SigmaMode.PLAIN) -> Form2:
    """The unique lift of a 2-cycle of G/e to G with P_{u,v} = 0."""
    g2, phi = uncontract_map(g, e)
    check = is_two_cycle(g2, dprime, mode)
    if not check:
        raise FormError(f"not a 2-cycle of the contraction: {check.report}")
    return lift_form(phi, dprime)


def lift_form(phi: dict, dprime: Form2) -> Form2:
    """Pull ``dprime`` back along an edge map from :func:`uncontract_map`."""
    # d(f, h) = d'(phi(f), phi(h)), expanded from the entries of d'
    inv: dict = {}
    for f, x in phi.items():
        for a, sa in x.items():
            inv.setdefault(a, []).append((f, sa))
    acc: dict = {}
    for (a, b), val in dprime.items():
        for f, sa in inv.get(a, ()):
            for h, sb in inv.get(b, ()):
                acc[(f, h)] = acc.get((f, h), 0) + sa * sb * val
    return Form2(acc)
