"""Brute-force reference implementations used to freeze expected values.

Each oracle works straight from a definition (edge subsets, vertex subsets,
dense rational linear algebra) and shares no code with the package beyond
the Graph container.
"""

import itertools

import networkx as nx
import sympy


def nx_graph(g, edge_ids=None):
    h = nx.MultiGraph()
    h.add_nodes_from(range(g.n))
    for e in range(g.m) if edge_ids is None else edge_ids:
        h.add_edge(*g.edges[e])
    return h


def connectivity(g):
    """Smallest vertex cut of the simplification (n - 1 for complete graphs)."""
    h = nx.Graph(nx_graph(g))
    n = g.n
    for k in range(n - 1):
        for cut in itertools.combinations(range(n), k):
            rest = h.subgraph(set(range(n)) - set(cut))
            if rest.number_of_nodes() and not nx.is_connected(rest):
                return k
    return n - 1


def separations(g, k):
    """Unordered (A, B) vertex covers with |A & B| = k, both private parts
    nonempty and no edge between them."""
    out = set()
    for assign in itertools.product((0, 1, 2), repeat=g.n):  # 0 both, 1 only A, 2 only B
        shared = [v for v in range(g.n) if assign[v] == 0]
        if len(shared) != k or 1 not in assign or 2 not in assign:
            continue
        if any({assign[t], assign[h]} == {1, 2} for t, h in g.edges):
            continue
        a = frozenset(v for v in range(g.n) if assign[v] != 2)
        b = frozenset(v for v in range(g.n) if assign[v] != 1)
        out.add(frozenset((a, b)))
    return out


def cycle_edge_sets(g):
    """Edge subsets forming a connected 2-regular subgraph (parallel pairs included)."""
    out = []
    for r in range(2, g.m + 1):
        for sub in itertools.combinations(range(g.m), r):
            deg = {}
            for e in sub:
                for x in g.edges[e]:
                    deg[x] = deg.get(x, 0) + 1
            if any(d != 2 for d in deg.values()):
                continue
            if nx.is_connected(nx_graph(g, sub).subgraph(deg)):
                out.append(frozenset(sub))
    return out


def cycle_vertices(g, edges):
    return frozenset(x for e in edges for x in g.edges[e])


def disjoint_cycle_pairs(g):
    cyc = cycle_edge_sets(g)
    return [(c, d) for c in cyc for d in cyc if c != d and not cycle_vertices(g, c) & cycle_vertices(g, d)]


def suppress(h):
    """Topological graph: splice out degree-2 vertices (keeps multi-edges)."""
    h = nx.MultiGraph(h)
    h.remove_nodes_from([v for v in list(h) if h.degree(v) == 0])
    changed = True
    while changed:
        changed = False
        for v in list(h):
            if h.degree(v) == 2 and h.number_of_edges(v, v) == 0:
                nbrs = [w for _, w in h.edges(v)]
                if nbrs[0] == v or nbrs[1] == v:
                    continue
                h.remove_node(v)
                h.add_edge(nbrs[0], nbrs[1])
                changed = True
                break
    return h


K5 = nx.complete_graph(5)
K33 = nx.complete_bipartite_graph(3, 3)


def kuratowski_edge_sets(g):
    """Edge subsets homeomorphic to K5 or K3,3, with their kind."""
    out = []
    for r in range(9, g.m + 1):
        for sub in itertools.combinations(range(g.m), r):
            deg = {}
            for e in sub:
                for x in g.edges[e]:
                    deg[x] = deg.get(x, 0) + 1
            big = [d for d in deg.values() if d > 2]
            if sorted(big) == [4] * 5:
                kind, model = "K5", K5
            elif sorted(big) == [3] * 6:
                kind, model = "K33", K33
            else:
                continue
            h = suppress(nx_graph(g, sub))
            if not isinstance(h, nx.Graph) or h.number_of_edges() != model.number_of_edges():
                continue
            if nx.is_isomorphic(nx.Graph(h), model) and nx.Graph(h).number_of_edges() == h.number_of_edges():
                out.append((kind, frozenset(sub)))
    return out


def quad_skeleton(trivial):
    """Topological model of a quad; Q_i for i in ``trivial`` has length zero."""
    s = nx.Graph()
    for i in range(3):
        u = ("u", i)
        v = u if i in trivial else ("v", i)
        s.add_edges_from([("a", u), (u, "b"), ("c", v), (v, "d")])
        if u != v:
            s.add_edge(u, v)
    return s


def quad_keys(g):
    """Set of (edge set, axle pair) over all quads, from edge subsets.

    Every u_i is interior to P_i and every v_i interior to R_i; connectors
    meet the P and R paths only at their ends.
    """
    skeletons = [quad_skeleton(set(t)) for r in range(4) for t in itertools.combinations(range(3), r)]
    out = set()
    for r in range(9, g.m + 1):
        for sub in itertools.combinations(range(g.m), r):
            deg = {}
            for e in sub:
                for x in g.edges[e]:
                    deg[x] = deg.get(x, 0) + 1
            if any(d > 4 for d in deg.values()):
                continue
            big = sum(1 for d in deg.values() if d > 2)
            if big < 7 or big > 10:
                continue
            h = suppress(nx_graph(g, sub))
            if h.number_of_edges() != nx.Graph(h).number_of_edges():
                continue
            h = nx.Graph(h)
            for sk in skeletons:
                if sk.number_of_nodes() != h.number_of_nodes() or sk.number_of_edges() != h.number_of_edges():
                    continue
                for iso in nx.algorithms.isomorphism.GraphMatcher(sk, h).isomorphisms_iter():
                    axles = frozenset((frozenset((iso["a"], iso["b"])), frozenset((iso["c"], iso["d"]))))
                    out.add((frozenset(sub), axles))
    return out


def triad_exists(g, feet):
    """Some edge subset is a subdivided claw whose leaves are exactly ``feet``."""
    feet = set(feet)
    for r in range(3, g.m + 1):
        for sub in itertools.combinations(range(g.m), r):
            h = nx.Graph(nx_graph(g, sub))
            h.remove_nodes_from([v for v in list(h) if h.degree(v) == 0])
            if not nx.is_tree(h):
                continue
            degs = dict(h.degree())
            leaves = {v for v, d in degs.items() if d == 1}
            if leaves == feet and sorted(degs.values()).count(3) == 1 and max(degs.values()) == 3:
                return True
    return False


def two_cycle_rank(g, mode="plain"):
    """Rank of L^sigma(G) from a dense rational system written from the definition.

    Unknowns are d(e, f) for all ordered pairs; adjacent pairs are forced to
    zero by equations, not removed.
    """
    m = g.m
    idx = {(e, f): i for i, (e, f) in enumerate(itertools.product(range(m), repeat=2))}
    rows = []

    def inc(v, e):
        t, h = g.edges[e]
        return (v == h) - (v == t)

    for e in range(m):
        for f in range(m):
            if set(g.edges[e]) & set(g.edges[f]):
                row = [0] * len(idx)
                row[idx[(e, f)]] = 1
                rows.append(row)
    for e in range(m):
        for v in range(g.n):
            r1, r2 = [0] * len(idx), [0] * len(idx)
            for f in range(m):
                r1[idx[(e, f)]] += inc(v, f)
                r2[idx[(f, e)]] += inc(v, f)
            rows += [r1, r2]
    if mode != "plain":
        s = -1 if mode == "sym" else 1
        for e, f in itertools.combinations(range(m), 2):
            row = [0] * len(idx)
            row[idx[(e, f)]] = 1
            row[idx[(f, e)]] = s
            rows.append(row)
    if not rows:
        return len(idx)
    return len(idx) - sympy.Matrix(rows).rank()


def internally_4_connected(g):
    """Simple, 3-connected, at least 5 vertices, and every 3-separation has
    exactly one side made of a single vertex joined once to the separator."""
    simple = len({frozenset(e) for e in g.edges}) == g.m
    if not simple or g.n < 5 or connectivity(g) < 3:
        return False
    for pair in separations(g, 3):
        a, b = tuple(pair)
        shared = a & b
        claws = 0
        for side in (a, b):
            private = side - shared
            if len(private) == 1:
                (x,) = private
                nbrs = [h if t == x else t for t, h in g.edges if x in (t, h)]
                claws += sorted(nbrs) == sorted(shared)
        if claws != 1:
            return False
    return True
