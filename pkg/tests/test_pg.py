from itertools import combinations

import pytest

from lrc4 import gf4
from lrc4.constructions import c17g_triples
from lrc4.mat4 import Mat4
from lrc4.pg import (
    PgPoint,
    all_lines,
    count_subspaces,
    count_subspaces_containing,
    enumerate_points,
    enumerate_subspaces,
    intersect_subspaces,
    line_points,
    normalize,
    point_in_subspace,
    span_dim,
    subspace_points,
)


def test_point_counts():
    assert len(enumerate_points(3)) == 21
    assert len(enumerate_points(1)) == 1
    assert len(enumerate_points(5)) == 341
    for m in range(1, 7):
        assert len(enumerate_points(m)) == count_subspaces(m, 1) == (4 ** m - 1) // 3


def test_points_are_canonical_and_sorted():
    pts = enumerate_points(3)
    assert pts == sorted(pts)
    for p in pts:
        lead = next(x for x in p.coords if x)
        assert lead == 1


def test_normalize():
    p = normalize((gf4.W, gf4.W, 0))
    assert p.coords == (1, 1, 0)
    assert normalize(p.coords) == p  # involution-free
    with pytest.raises(ValueError):
        normalize((0, 0, 0))
    with pytest.raises(ValueError):
        PgPoint((gf4.W, 0, 0))  # not normalized


def test_line_points_coordinate_line():
    p = PgPoint((1, 0, 0))
    q = PgPoint((0, 1, 0))
    pts = line_points(p, q)
    assert len(pts) == 5
    assert set(pts) == {
        PgPoint((1, 0, 0)), PgPoint((0, 1, 0)), PgPoint((1, 1, 0)),
        PgPoint((1, gf4.W, 0)), PgPoint((1, gf4.W2, 0)),
    }
    with pytest.raises(ValueError):
        line_points(p, p)


def test_every_line_pair_meets_once():
    lines = all_lines(3)
    assert len(lines) == 21
    assert all(len(line) == 5 for line in lines)
    for a, b in combinations(lines, 2):
        assert len(a & b) == 1


def test_pencil_through_a_point_covers_the_plane():
    pts = enumerate_points(3)
    a = pts[0]
    through = [line for line in all_lines(3) if a in line]
    assert len(through) == 5
    covered = set()
    for line in through:
        covered |= line
    assert covered == set(pts)


def test_span_dim():
    assert span_dim([PgPoint((1, 0, 0))]) == 1
    u, v, z = c17g_triples(17)[0]
    assert span_dim([normalize(u), normalize(v), normalize(z)]) == 3
    p, q = PgPoint((1, 0, 0)), PgPoint((0, 1, 0))
    s = normalize(tuple(a ^ b for a, b in zip(p.coords, q.coords)))
    assert span_dim([p, q, s]) == 2


def test_count_subspaces():
    assert count_subspaces(3, 1) == 21
    assert count_subspaces(4, 0) == 1
    assert count_subspaces(5, 2) == 5797
    assert count_subspaces(3, 2) == 21  # lines of PG(2,F4) by duality
    with pytest.raises(ValueError):
        count_subspaces(2, 3)


def test_count_subspaces_matches_enumeration():
    for m, i in [(3, 1), (3, 2), (4, 2), (5, 2)]:
        assert sum(1 for _ in enumerate_subspaces(m, i)) == count_subspaces(m, i)


def test_enumerated_subspaces_are_canonical_and_distinct():
    seen = set()
    for basis in enumerate_subspaces(4, 2):
        assert basis.rank() == 2
        r, _ = basis.rref()
        assert r == basis
        seen.add(basis)
    assert len(seen) == count_subspaces(4, 2)


def test_count_subspaces_containing():
    assert count_subspaces_containing(3, 2, 1) == 5  # five lines through a point
    assert count_subspaces_containing(4, 3, 2) == 5  # five planes through a line
    assert count_subspaces_containing(4, 3, 3) == 1
    assert count_subspaces_containing(5, 2, 1) == count_subspaces(4, 1)


def test_subspace_points_and_membership():
    basis = Mat4.from_string("1 0 0 / 0 1 0")
    pts = subspace_points(basis)
    assert len(pts) == 5
    assert all(point_in_subspace(p, basis) for p in pts)
    assert not point_in_subspace(PgPoint((0, 0, 1)), basis)


def test_intersect_subspaces():
    a = Mat4.from_string("1 0 0 / 0 1 0")
    b = Mat4.from_string("0 1 0 / 0 0 1")
    meet = intersect_subspaces(a, b)
    assert meet.rows == 1
    assert meet.row(0) == (0, 1, 0)
    disjoint = intersect_subspaces(Mat4.from_string("1 0 0 0"), Mat4.from_string("0 1 0 0"))
    assert disjoint.rows == 0
