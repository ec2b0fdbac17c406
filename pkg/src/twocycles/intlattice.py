"""Exact integer linear algebra: Hermite/Smith normal forms, kernels and lattices.

Matrices are lists of rows of Python ints. Everything is exact; there is no
floating point anywhere in this module.
"""

from __future__ import annotations

import functools
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from math import prod

IntMatrix = list  # list[list[int]]


class LatticeError(ValueError):
    pass


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(x, y, g)`` with ``x*a + y*b == g == gcd(a, b) >= 0``."""
    x, nx = 1, 0
    y, ny = 0, 1
    g, ng = a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


def identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    if not a:
        return []
    bt = list(zip(*b)) if b else []
    if not bt:
        return [[] for _ in a]
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def transpose(a: IntMatrix, ncols: int | None = None) -> IntMatrix:
    if not a:
        return [[] for _ in range(ncols or 0)]
    return [list(c) for c in zip(*a)]


def determinant(a: IntMatrix) -> int:
    """Bareiss fraction-free determinant."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(r) for r in a]
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def rank(a: IntMatrix) -> int:
    rows = [list(r) for r in a if any(r)]
    if not rows:
        return 0
    return _hnf_inplace(rows, len(rows[0]))


def _hnf_inplace(a: IntMatrix, pcols: int) -> int:
    """Row-reduce ``a`` to Hermite form on its first ``pcols`` columns.

    Columns past ``pcols`` ride along (used to record the transform).
    Returns the number of pivot rows.
    """
    r = 0
    nrows = len(a)
    for j in range(pcols):
        if r == nrows:
            break
        found = False
        while True:
            nz = [i for i in range(r, nrows) if a[i][j]]
            if not nz:
                break
            found = True
            p = min(nz, key=lambda i: abs(a[i][j]))
            a[r], a[p] = a[p], a[r]
            if len(nz) == 1:
                break
            prow = a[r]
            piv = prow[j]
            tail = prow[j:]
            for i in range(r + 1, nrows):
                row = a[i]
                if row[j]:
                    q = row[j] // piv
                    row[j:] = [x - q * y for x, y in zip(row[j:], tail)]
        if not found:
            continue
        if a[r][j] < 0:
            a[r] = [-x for x in a[r]]
        piv = a[r][j]
        tail = a[r][j:]
        for i in range(r):
            q = a[i][j] // piv
            if q:
                a[i][j:] = [x - q * y for x, y in zip(a[i][j:], tail)]
        r += 1
    return r


def hermite_normal_form(m: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Row Hermite normal form ``h`` and unimodular ``u`` with ``u @ m == h``.

    Pivots are positive, pivot columns strictly increase and entries above a
    pivot lie in ``[0, pivot)``. Zero rows sit at the bottom.
    """
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    aug = [list(row) + [int(i == k) for k in range(nrows)] for i, row in enumerate(m)]
    _hnf_inplace(aug, ncols)
    return [row[:ncols] for row in aug], [row[ncols:] for row in aug]


def smith_normal_form(m: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return ``(s, u, v)`` with ``u @ m @ v == s`` diagonal, ``s[i][i] | s[i+1][i+1]``."""
    r = len(m)
    c = len(m[0]) if r else 0
    s = [list(row) for row in m]
    u = identity(r)
    v = identity(c)

    def swap_rows(i, k):
        s[i], s[k] = s[k], s[i]
        u[i], u[k] = u[k], u[i]

    def swap_cols(j, k):
        for row in s:
            row[j], row[k] = row[k], row[j]
        for row in v:
            row[j], row[k] = row[k], row[j]

    def add_row(dst, src, q):  # row_dst -= q * row_src
        s[dst] = [x - q * y for x, y in zip(s[dst], s[src])]
        u[dst] = [x - q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):  # col_dst -= q * col_src
        for row in s:
            row[dst] -= q * row[src]
        for row in v:
            row[dst] -= q * row[src]

    for t in range(min(r, c)):
        best = None
        for i in range(t, r):
            for j in range(t, c):
                x = s[i][j]
                if x and (best is None or abs(x) < abs(s[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            piv = s[t][t]
            dirty = False
            for i in range(t + 1, r):
                if s[i][t]:
                    add_row(i, t, s[i][t] // piv)
                    dirty = dirty or s[i][t] != 0
            for j in range(t + 1, c):
                if s[t][j]:
                    add_col(j, t, s[t][j] // piv)
                    dirty = dirty or s[t][j] != 0
            if dirty:
                cand = [(abs(s[i][t]), i, t) for i in range(t + 1, r) if s[i][t]]
                cand += [(abs(s[t][j]), t, j) for j in range(t + 1, c) if s[t][j]]
                _, i, j = min(cand)
                if j == t:
                    swap_rows(t, i)
                else:
                    swap_cols(t, j)
                continue
            bad = next(
                (i for i in range(t + 1, r) for j in range(t + 1, c) if s[i][j] % piv),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, -1)
        if s[t][t] < 0:
            s[t] = [-x for x in s[t]]
            u[t] = [-x for x in u[t]]
    return s, u, v


def invariant_factors(m: IntMatrix) -> list[int]:
    if not m or not m[0]:
        return []
    s, _, _ = smith_normal_form(m)
    return [s[i][i] for i in range(min(len(s), len(s[0]))) if s[i][i]]


# -- lattices --------------------------------------------------------------------


@dataclass(frozen=True)
class SubLattice:
    """Integer lattice in ``Z^ambient_dim`` held in canonical row HNF."""

    ambient_dim: int
    basis: tuple = ()
    index_key: tuple | None = field(default=None, compare=False)

    @property
    def rank(self) -> int:
        return len(self.basis)

    @functools.cached_property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(j for j, x in enumerate(row) if x) for row in self.basis)

    def coefficients(self, v: Sequence[int]) -> list[int] | None:
        return membership(v, self)

    def __contains__(self, v) -> bool:
        return membership(v, self) is not None

    def covolume_key(self) -> int:
        """Product of pivots; compares indices of same-rank nested lattices."""
        return prod(row[j] for row, j in zip(self.basis, self.pivots))

    def to_dict(self) -> dict:
        doc = {"ambient_dim": self.ambient_dim, "basis": [list(r) for r in self.basis]}
        if self.index_key is not None:
            doc["index_key"] = [list(k) if isinstance(k, tuple) else k for k in self.index_key]
        return doc


def _canonical(rows: Iterable[Sequence[int]], dim: int, index_key=None) -> SubLattice:
    a = [list(r) for r in rows if any(r)]
    for r in a:
        if len(r) != dim:
            raise LatticeError(f"vector of length {len(r)} in ambient dimension {dim}")
    k = _hnf_inplace(a, dim) if a else 0
    return SubLattice(dim, tuple(tuple(r) for r in a[:k]), index_key)


def span(vectors: Iterable[Sequence[int]], dim: int, index_key=None) -> SubLattice:
    return _canonical(vectors, dim, index_key)


def zero_lattice(dim: int, index_key=None) -> SubLattice:
    return SubLattice(dim, (), index_key)


def full_lattice(dim: int, index_key=None) -> SubLattice:
    return SubLattice(dim, tuple(tuple(r) for r in identity(dim)), index_key)


def membership(v: Sequence[int], lat: SubLattice) -> list[int] | None:
    """Integer coefficients of ``v`` over the basis rows, or ``None``."""
    if len(v) != lat.ambient_dim:
        raise LatticeError(f"vector of length {len(v)} in ambient dimension {lat.ambient_dim}")
    w = list(v)
    coeffs = []
    for row, j in zip(lat.basis, lat.pivots):
        if any(w[:j]):
            return None
        q, rem = divmod(w[j], row[j])
        if rem:
            return None
        coeffs.append(q)
        if q:
            w[j:] = [x - q * y for x, y in zip(w[j:], row[j:])]
    if any(w):
        return None
    return coeffs


def lattice_sum(a: SubLattice, b: SubLattice) -> SubLattice:
    if a.ambient_dim != b.ambient_dim:
        raise LatticeError("ambient dimensions differ")
    return _canonical(list(a.basis) + list(b.basis), a.ambient_dim, a.index_key)


def lattice_equal(a: SubLattice, b: SubLattice) -> bool:
    return a.ambient_dim == b.ambient_dim and a.basis == b.basis


def is_sublattice(a: SubLattice, b: SubLattice) -> bool:
    return all(membership(row, b) is not None for row in a.basis)


@dataclass(frozen=True)
class QuotientInvariants:
    free_rank: int
    torsion: tuple[int, ...]

    @property
    def trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def to_dict(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}


def quotient_invariants(a: SubLattice, b: SubLattice) -> QuotientInvariants:
    """Structure of ``b / a`` for ``a`` contained in ``b``."""
    coords = []
    for row in a.basis:
        c = membership(row, b)
        if c is None:
            raise LatticeError(f"not a sublattice: basis vector {list(row)} is outside the larger lattice")
        coords.append(c)
    factors = invariant_factors(coords) if coords and b.rank else []
    return QuotientInvariants(b.rank - len(factors), tuple(d for d in factors if d > 1))


def kernel_basis(m: IntMatrix | Iterable[Mapping[int, int]], ncols: int | None = None, index_key=None) -> SubLattice:
    """Lattice of integer ``x`` with ``m @ x == 0``.

    ``m`` may be dense rows or sparse ``{column: value}`` rows (then ``ncols``
    is required). Constraints are swept one at a time against a running
    lattice basis, starting from the unit vectors; each constraint removes at
    most one basis vector after a gcd elimination, so the result is exactly
    the (saturated) kernel.
    """
    rows = list(m)
    if ncols is None:
        if not rows or isinstance(rows[0], Mapping):
            raise LatticeError("ncols is required for sparse or empty input")
        ncols = len(rows[0])
    sparse_rows = []
    for r in rows:
        if isinstance(r, Mapping):
            sparse_rows.append({j: c for j, c in r.items() if c})
        else:
            if len(r) != ncols:
                raise LatticeError("ragged matrix")
            sparse_rows.append({j: c for j, c in enumerate(r) if c})
    basis: list[dict[int, int]] = [{j: 1} for j in range(ncols)]
    # column -> set of basis ids touching it, to skip irrelevant vectors quickly
    touching: dict[int, set[int]] = {j: {j} for j in range(ncols)}
    alive = set(range(ncols))

    def add_into(dst: int, src: int, q: int) -> None:  # basis[dst] -= q * basis[src]
        bd = basis[dst]
        for j, c in basis[src].items():
            x = bd.get(j, 0) - q * c
            if x:
                if j not in bd:
                    touching[j].add(dst)
                bd[j] = x
            else:
                bd.pop(j, None)
                touching[j].discard(dst)

    for row in sparse_rows:
        if not row:
            continue
        cand = set()
        for j in row:
            cand |= touching[j]
        vals = {}
        for i in cand:
            b = basis[i]
            s = sum(c * b.get(j, 0) for j, c in row.items())
            if s:
                vals[i] = s
        while len(vals) > 1:
            p = min(vals, key=lambda i: (abs(vals[i]), len(basis[i]), i))
            pv = vals[p]
            for i in list(vals):
                if i == p:
                    continue
                q = vals[i] // pv
                add_into(i, p, q)
                vals[i] -= q * pv
                if not vals[i]:
                    del vals[i]
        for i in vals:
            for j in basis[i]:
                touching[j].discard(i)
            basis[i] = {}
            alive.discard(i)
    dense = []
    for i in sorted(alive):
        row = [0] * ncols
        for j, c in basis[i].items():
            row[j] = c
        dense.append(row)
    return _canonical(dense, ncols, index_key)


class LatticeBuilder:
    """Incrementally grown lattice in echelon form.

    Cheap insertion for long generator streams; ``lattice()`` returns the
    canonical HNF.
    """

    def __init__(self, dim: int, index_key=None):
        self.dim = dim
        self.index_key = index_key
        self.rows: list[list[int]] = []
        self.piv: list[int] = []  # pivot column of each row, increasing

    @property
    def rank(self) -> int:
        return len(self.rows)

    def add(self, vec: Sequence[int]) -> bool:
        """Insert ``vec``; returns True if the lattice changed."""
        v = list(vec)
        if len(v) != self.dim:
            raise LatticeError("dimension mismatch")
        changed = False
        k = 0
        j = 0
        while True:
            while j < self.dim and not v[j]:
                j += 1
            if j == self.dim:
                return changed
            while k < len(self.piv) and self.piv[k] < j:
                k += 1
            if k == len(self.piv) or self.piv[k] != j:
                if v[j] < 0:
                    v = [-x for x in v]
                self.rows.insert(k, v)
                self.piv.insert(k, j)
                return True
            row = self.rows[k]
            a, b = row[j], v[j]
            if b % a == 0:
                q = b // a
                v[j:] = [x - q * y for x, y in zip(v[j:], row[j:])]
            else:
                x, y, g = xgcd(a, b)
                ag, bg = a // g, b // g
                rt, vt = row[j:], v[j:]
                row[j:] = [x * p + y * s for p, s in zip(rt, vt)]
                v[j:] = [ag * s - bg * p for p, s in zip(rt, vt)]
                changed = changed or g != abs(a)

    def covolume_key(self) -> int:
        return prod(abs(r[j]) for r, j in zip(self.rows, self.piv))

    def lattice(self) -> SubLattice:
        return _canonical(self.rows, self.dim, self.index_key)
