"""Straight-line drawings with exact rational coordinates and signed crossings."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .forms import Form2
from .graph import Graph, GraphError


class DrawingError(ValueError):
    pass


@dataclass(frozen=True)
class Drawing:
    positions: tuple  # vertex -> (Fraction x, Fraction y)

    def point(self, v: int) -> tuple[Fraction, Fraction]:
        return self.positions[v]

    def to_dict(self) -> dict:
        return {str(v): [str(x), str(y)] for v, (x, y) in enumerate(self.positions)}

    @classmethod
    def from_points(cls, pts) -> Drawing:
        return cls(tuple((Fraction(x), Fraction(y)) for x, y in pts))

    @classmethod
    def from_dict(cls, doc: dict) -> Drawing:
        try:
            n = len(doc)
            return cls.from_points(doc[str(v)] for v in range(n))
        except (KeyError, ValueError, TypeError, ZeroDivisionError) as exc:
            raise DrawingError(f"bad drawing document: {exc}") from None


def _orient(p, q, r) -> int:
    x = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (x > 0) - (x < 0)


def _on_segment(p, q, r) -> bool:
    """r lies on the closed segment pq (assuming collinear)."""
    return min(p[0], q[0]) <= r[0] <= max(p[0], q[0]) and min(p[1], q[1]) <= r[1] <= max(p[1], q[1])


def _intersection_point(p1, p2, p3, p4):
    d = (p2[0] - p1[0]) * (p4[1] - p3[1]) - (p2[1] - p1[1]) * (p4[0] - p3[0])
    t = ((p3[0] - p1[0]) * (p4[1] - p3[1]) - (p3[1] - p1[1]) * (p4[0] - p3[0])) / d
    return (p1[0] + t * (p2[0] - p1[0]), p1[1] + t * (p2[1] - p1[1]))


@dataclass
class GenericCheck:
    ok: bool
    witness: str

    def __bool__(self) -> bool:
        return self.ok


def is_generic(g: Graph, dr: Drawing) -> GenericCheck:
    if len(dr.positions) != g.n:
        return GenericCheck(False, f"drawing has {len(dr.positions)} points for {g.n} vertices")
    seen = {}
    for v, p in enumerate(dr.positions):
        if p in seen:
            return GenericCheck(False, f"vertices {seen[p]} and {v} coincide")
        seen[p] = v
    segs = [(dr.point(t), dr.point(h)) for t, h in g.edges]
    for e, (p, q) in enumerate(segs):
        for v in g.vertices:
            if v in g.ends(e):
                continue
            r = dr.point(v)
            if _orient(p, q, r) == 0 and _on_segment(p, q, r):
                return GenericCheck(False, f"vertex {v} lies on edge {e}")
    crossings: dict = {}
    for e in range(g.m):
        for f in range(e + 1, g.m):
            p1, p2 = segs[e]
            p3, p4 = segs[f]
            if _orient(p1, p2, p3) == 0 and _orient(p1, p2, p4) == 0:
                if g.adjacent(e, f):
                    # collinear edges with a common end overlap unless they leave it in opposite directions
                    shared = (set(g.ends(e)) & set(g.ends(f))).pop()
                    a, b = g.other_end(e, shared), g.other_end(f, shared)
                    c = dr.point(shared)
                    pa, pb = dr.point(a), dr.point(b)
                    if (pa[0] - c[0]) * (pb[0] - c[0]) + (pa[1] - c[1]) * (pb[1] - c[1]) > 0:
                        return GenericCheck(False, f"edges {e} and {f} overlap")
                elif _on_segment(p1, p2, p3) or _on_segment(p1, p2, p4) or _on_segment(p3, p4, p1):
                    return GenericCheck(False, f"edges {e} and {f} overlap")
                continue
            if g.adjacent(e, f):
                continue
            if _proper_cross(p1, p2, p3, p4):
                x = _intersection_point(p1, p2, p3, p4)
                crossings.setdefault(x, set()).update((e, f))
    for x, es in crossings.items():
        if len(es) > 2:
            return GenericCheck(False, f"edges {sorted(es)} pass through one crossing point")
    return GenericCheck(True, "")


def _proper_cross(p1, p2, p3, p4) -> bool:
    return (
        _orient(p1, p2, p3) * _orient(p1, p2, p4) < 0
        and _orient(p3, p4, p1) * _orient(p3, p4, p2) < 0
    )


def signed_crossing(g: Graph, dr: Drawing, f: int, h: int) -> int:
    """+1 when (direction of f, direction of h) is a positively oriented frame at a crossing."""
    if g.adjacent(f, h):
        raise GraphError(f"edges {f} and {h} share an end")
    p1, p2 = dr.point(g.tail(f)), dr.point(g.head(f))
    p3, p4 = dr.point(g.tail(h)), dr.point(g.head(h))
    if not _proper_cross(p1, p2, p3, p4):
        return 0
    x = (p2[0] - p1[0]) * (p4[1] - p3[1]) - (p2[1] - p1[1]) * (p4[0] - p3[0])
    return 1 if x > 0 else -1


def kr_functional(g: Graph, dr: Drawing, d: Form2) -> int:
    return sum(v * signed_crossing(g, dr, e, f) for (e, f), v in d.items())


def random_generic_drawing(g: Graph, seed: int, grid: int = 10**6, max_tries: int = 1000) -> Drawing:
    """Integer grid points chosen by ``seed``, resampled until generic."""
    rng = random.Random(seed)
    for _ in range(max_tries):
        dr = Drawing.from_points((rng.randrange(grid), rng.randrange(grid)) for _ in g.vertices)
        if is_generic(g, dr):
            return dr
    raise DrawingError(f"no generic drawing found in {max_tries} tries")
