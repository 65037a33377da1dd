"""Projective geometry PG(m-1, GF(4)).

Points are 1-dimensional subspaces of GF(4)^m, represented canonically
by the unique basis vector whose first nonzero coordinate is 1; that
makes point identity an exact tuple comparison.  Lines (2-dimensional
subspaces) carry exactly 5 points each over GF(4).

Subspaces of any dimension are represented by their reduced row-echelon
basis matrices, which are canonical, so subspace enumeration is a walk
over pivot-column patterns and free entries.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Iterator

import numpy as np

from . import gf4
from .mat4 import Mat4


@dataclass(frozen=True, order=True)
class PgPoint:
    """Canonical projective point: first nonzero coordinate scaled to 1."""

    coords: tuple[int, ...]

    def __post_init__(self):
        if not any(self.coords):
            raise ValueError("the zero vector is not a projective point")
        lead = next(x for x in self.coords if x)
        if lead != 1:
            raise ValueError(f"not normalized: leading coordinate {gf4.to_symbol(lead)}")

    @property
    def m(self) -> int:
        return len(self.coords)

    def __str__(self) -> str:
        return "(" + " ".join(gf4.to_symbol(x) for x in self.coords) + ")"


def normalize(vec: Iterable[int]) -> PgPoint:
    """Scale a nonzero vector so its first nonzero coordinate is 1."""
    v = tuple(int(x) for x in vec)
    lead = next((x for x in v if x), 0)
    if lead == 0:
        raise ValueError("cannot normalize the zero vector")
    s = gf4.inv(lead)
    return PgPoint(tuple(gf4.mul(s, x) for x in v))


def enumerate_points(m: int) -> list[PgPoint]:
    """All (4^m - 1)/3 canonical points of PG(m-1, GF(4)), lexicographic."""
    if m < 1:
        raise ValueError("need m >= 1")
    pts = []
    for v in product(gf4.ELEMENTS, repeat=m):
        lead = next((x for x in v if x), 0)
        if lead == 1:
            pts.append(PgPoint(v))
    return pts


def _add_scaled(p: tuple[int, ...], q: tuple[int, ...], lam: int) -> tuple[int, ...]:
    return tuple(a ^ gf4.mul(lam, b) for a, b in zip(p, q))


def line_points(p: PgPoint, q: PgPoint) -> list[PgPoint]:
    """The 5 points {p, q, p+q, p+wq, p+w2q} of the line through p and q."""
    if p.m != q.m:
        raise ValueError("points live in different spaces")
    if p == q:
        raise ValueError(f"degenerate line: {p} = {q}")
    pts = {p, q}
    for lam in gf4.NONZERO:
        pts.add(normalize(_add_scaled(p.coords, q.coords, lam)))
    assert len(pts) == 5
    return sorted(pts)


def all_lines(m: int) -> list[frozenset[PgPoint]]:
    """Every line of PG(m-1, GF(4)) as a 5-point set."""
    pts = enumerate_points(m)
    seen: set[frozenset[PgPoint]] = set()
    for p, q in combinations(pts, 2):
        line = frozenset(line_points(p, q))
        seen.add(line)
    return sorted(seen, key=sorted)


def span_dim(points: Iterable[PgPoint]) -> int:
    """Vector-space dimension of the span of the points' coordinate vectors."""
    rows = [p.coords for p in points]
    if not rows:
        raise ValueError("span of no points")
    ms = {len(r) for r in rows}
    if len(ms) != 1:
        raise ValueError("points live in different spaces")
    return Mat4(rows).rank()


def count_subspaces(m: int, i: int) -> int:
    """Gaussian binomial [m choose i]_4: i-dimensional subspaces of GF(4)^m."""
    if not 0 <= i <= m:
        raise ValueError(f"need 0 <= i <= m, got i={i}, m={m}")
    num = den = 1
    for j in range(i):
        num *= 4 ** (m - j) - 1
        den *= 4 ** (i - j) - 1
    assert num % den == 0
    return num // den


def count_subspaces_containing(m: int, i: int, j: int) -> int:
    """i-dimensional subspaces of GF(4)^m containing a fixed j-dimensional one.

    Equals the number of (i-j)-dimensional subspaces of GF(4)^(m-j).
    """
    if not 0 <= j <= i <= m:
        raise ValueError(f"need 0 <= j <= i <= m, got m={m}, i={i}, j={j}")
    return count_subspaces(m - j, i - j)


def enumerate_subspaces(m: int, i: int) -> Iterator[Mat4]:
    """All i-dimensional subspaces of GF(4)^m as canonical rref basis matrices.

    One matrix per subspace: for each set of pivot columns, entries right
    of each pivot and off the pivot columns run over GF(4) freely.
    """
    if not 0 <= i <= m:
        raise ValueError(f"need 0 <= i <= m, got i={i}, m={m}")
    if i == 0:
        yield Mat4.zeros(0, m)
        return
    for pivots in combinations(range(m), i):
        free_cells = [
            (r, c)
            for r in range(i)
            for c in range(pivots[r] + 1, m)
            if c not in pivots
        ]
        base = np.zeros((i, m), dtype=np.uint8)
        for r, p in enumerate(pivots):
            base[r, p] = 1
        for values in product(gf4.ELEMENTS, repeat=len(free_cells)):
            a = base.copy()
            for (r, c), v in zip(free_cells, values):
                a[r, c] = v
            yield Mat4(a)


def subspace_points(basis: Mat4) -> set[PgPoint]:
    """The projective points contained in the row space of ``basis``."""
    pts: set[PgPoint] = set()
    k = basis.rows
    for scalars in product(gf4.ELEMENTS, repeat=k):
        if not any(scalars):
            continue
        vec = np.zeros(basis.cols, dtype=np.uint8)
        for lam, row in zip(scalars, basis.array):
            vec ^= gf4.MUL_NP[lam, row]
        pts.add(normalize(vec))
    return pts


def point_in_subspace(p: PgPoint, basis: Mat4) -> bool:
    """Membership test: does p lie in the row space of ``basis``?"""
    stacked = Mat4(np.vstack([basis.array, np.array(p.coords, dtype=np.uint8)]))
    return stacked.rank() == basis.rank()


def intersect_subspaces(a: Mat4, b: Mat4) -> Mat4:
    """Basis of the intersection of two row spaces over GF(4).

    Computed from the kernel of the stacked bases: a combination of rows
    of ``a`` equal to a combination of rows of ``b``.
    """
    if a.cols != b.cols:
        raise ValueError("subspaces of different ambient spaces")
    if a.rows == 0 or b.rows == 0:
        return Mat4.zeros(0, a.cols)
    stacked = Mat4(np.vstack([a.array, b.array]))
    ker = stacked.transpose().right_kernel()  # rows: (x | y) with x a + y b = 0
    if ker.rows == 0:
        return Mat4.zeros(0, a.cols)
    xs = ker.take_columns(range(a.rows))
    return (xs @ a).row_basis()
