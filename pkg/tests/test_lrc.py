import random
from itertools import product

import pytest

import numpy as np

from lrc4 import gf4
from lrc4.code import LinearCode, hexacode
from lrc4.constructions import build
from lrc4.errors import ResourceError, StructureError
from lrc4.lrc import (
    LocalityFailure,
    check_structure,
    extract_profile,
    group_count_range,
    is_r_optimal,
    qualifying_supports,
    singleton_like_bound,
    structured_parity_check,
    verify_locality,
)
from lrc4.mat4 import Mat4


def repetition(n):
    return LinearCode(gen=Mat4([[1] * n]))


def test_singleton_like_bound():
    assert singleton_like_bound(16, 3, 2, 3) == 12
    assert singleton_like_bound(9, 5, 3, 3) == 3
    # r = k, delta = 2 degenerates to the classical Singleton bound
    for n, k in [(8, 3), (12, 7)]:
        assert singleton_like_bound(n, k, k, 2) == n - k + 1
    with pytest.raises(ValueError):
        singleton_like_bound(5, 6, 3, 3)
    with pytest.raises(ValueError):
        singleton_like_bound(9, 5, 3, 1)


def test_group_count_range():
    assert group_count_range(9, 5, 3, 3) == (2, 2)
    assert group_count_range(10, 3, 2, 4) == (2, 2)
    n, k = 12, 4
    assert group_count_range(n, k, k, 2) == (1, n - k)
    lo, hi = group_count_range(6, 4, 2, 4)  # infeasible combination is flagged, not hidden
    assert lo > hi


def test_verify_locality_hexacode():
    res = verify_locality(hexacode(), 3, 4)
    assert res.ok
    assert [sorted(g.support) for g in res.groups] == [[1, 2, 3, 4, 5, 6]]


def test_verify_locality_repetition():
    res = verify_locality(repetition(4), 1, 4)
    assert res.ok


def test_verify_locality_c4():
    bc = build("C4", l=2, r=3)
    res = verify_locality(bc.code, 3, 3)
    assert res.ok
    supports = sorted(sorted(g.support) for g in res.groups)
    assert supports == [[1, 2, 3, 4, 5], [6, 7, 8, 9, 10]]


def test_verify_locality_failure_lists_coordinates():
    res = verify_locality(hexacode(), 2, 4)
    assert isinstance(res, LocalityFailure)
    assert res.bad_coordinates == tuple(range(1, 7))


def test_verify_locality_guard():
    bc = build("C17G", l=6)  # n = 36 exceeds the default search guard
    with pytest.raises(ResourceError):
        verify_locality(bc.code, 3, 4)


def test_is_r_optimal():
    assert is_r_optimal(build("C1", l=2).code, 3, 3)
    assert is_r_optimal(repetition(4), 1, 4)
    assert is_r_optimal(hexacode(), 3, 4)
    # the [5,3,3] single-group code has (3,3)-locality, so calling it a
    # (4,3)-LRC is not r-optimal
    local = LinearCode(pchk=Mat4.from_string("1 0 1 1 1 / 0 1 1 w W"))
    assert verify_locality(local, 3, 3).ok
    assert not is_r_optimal(local, 4, 3)


def test_extract_profile_c6():
    bc = build("C6", l=2)
    profile = extract_profile(bc.code.parity_check(), [(1, 2), (3, 4)], r=3, delta=3)
    assert profile.l == 2
    assert sorted(profile.groups[0].support) == [1, 2, 3, 4, 5]
    assert sorted(profile.groups[1].support) == [6, 7, 8, 9, 10]
    assert profile.global_rows == (5,)


def test_extract_profile_overlap_variant():
    bc = build("C1", l=2, variant="b")
    profile = bc.profile
    assert sorted(profile.groups[0].support) == [1, 2, 3, 4, 5]
    assert sorted(profile.groups[1].support) == [5, 6, 7, 8, 9]
    inter = profile.groups[0].support & profile.groups[1].support
    assert inter == {5}


def test_extract_profile_single_group():
    hx = hexacode().complete()
    profile = extract_profile(hx.pchk, [(1, 3)], r=3, delta=4)
    assert profile.l == 1 and profile.global_rows == ()


def test_extract_profile_uncovered_raises():
    bc = build("C6", l=2)
    with pytest.raises(StructureError):
        extract_profile(bc.code.parity_check(), [(1, 2)], r=3, delta=3)


def test_extract_profile_rejects_redundant_group():
    h = Mat4.from_string(
        "1 0 1 1 1 / 0 1 1 w W / 1 0 1 1 1 / 0 1 1 w W"
    )  # second "group" covers nothing new
    with pytest.raises(StructureError):
        extract_profile(h, [(1, 2), (3, 4)], r=3, delta=3)


def test_check_structure_c4_all_pass():
    bc = build("C4", l=2, r=3)
    report = bc.verify()
    assert report.d == 3 and report.bound_d == 3
    assert report.d_optimal and report.r_optimal
    assert all(c.passed for c in report.checks.values())
    assert "not applicable" not in (report.checks["disjointness"].witness or "")


def test_check_structure_c16_distance_cap_via_k_minus_1():
    bc = build("C16", d=12)
    report = bc.verify()
    assert report.d == 12
    assert (bc.code.k - 1) % bc.r == 0  # r | (k-1) branch: cap is 4*delta = 12
    assert report.checks["distance_cap"].passed
    assert report.all_passed


def test_check_structure_corruption_is_detected():
    bc = build("C6", l=2)
    h = bc.code.parity_check().array.copy()
    h[4, 2] = 0  # zero one global entry
    broken = LinearCode(pchk=Mat4(h))
    profile = extract_profile(broken.pchk, [(1, 2), (3, 4)], r=3, delta=3)
    report = check_structure(broken, profile)
    assert not report.all_passed
    assert report.d_optimal is False or any(
        c.passed is False for c in report.checks.values()
    )
    failed = [c for c in report.checks.values() if c.passed is False]
    if failed:
        assert all(c.witness for c in failed)


def test_delta2_agrees_with_dual_word_locality():
    rng = random.Random(11)
    checked = 0
    while checked < 20:
        n = rng.randrange(4, 9)
        rows = [[rng.randrange(4) for _ in range(n)] for _ in range(rng.randrange(1, 4))]
        basis = Mat4(rows).row_basis()
        if basis.rows == 0 or basis.rows >= n:
            continue
        code = LinearCode(pchk=basis)
        if code.k == 0:
            continue
        r = rng.randrange(1, min(code.k, n - 1) + 1)
        res = verify_locality(code, r, 2)
        # direct oracle: coordinate i is r-local iff some dual word of
        # weight <= r + 1 covers it
        dual_words = []
        for scalars in product(gf4.ELEMENTS, repeat=basis.rows):
            if not any(scalars):
                continue
            vec = np.zeros(n, dtype=np.uint8)
            for lam, row in zip(scalars, basis.array):
                vec ^= gf4.MUL_NP[lam, row]
            dual_words.append(vec)
        per_coord = []
        for i in range(n):
            per_coord.append(
                any(w[i] and int(np.count_nonzero(w)) <= r + 1 for w in dual_words)
            )
        assert res.ok == all(per_coord)
        if not res.ok:
            bad = {i + 1 for i, okc in enumerate(per_coord) if not okc}
            assert set(res.bad_coordinates) == bad
        checked += 1


def test_qualifying_supports_hexacode():
    sup = qualifying_supports(hexacode(), 3, 4)
    assert sup == [frozenset(range(1, 7))]


def test_structured_parity_check_rebuilds_layout():
    base = build("C16", d=12).code
    h, layout, partitioned = structured_parity_check(base, 2, 3)
    assert partitioned
    assert h.rank() == h.rows == base.n - base.k
    assert all(b - a + 1 == 2 for a, b in layout)  # delta - 1 rows per group
    profile = extract_profile(h, layout, r=2, delta=3)
    assert profile.l >= 4


def brute_force_locality(code, r, delta):
    """Definition-direct oracle: try every support of size <= r+delta-1."""
    from itertools import combinations

    n = code.n
    bad = []
    for i in range(1, n + 1):
        found = False
        for size in range(1, r + delta):
            for rest in combinations([c for c in range(1, n + 1) if c != i], size - 1):
                support = set(rest) | {i}
                sub = code.puncture(set(range(1, n + 1)) - support)
                if sub.k >= 1 and sub.min_distance() >= delta:
                    found = True
                    break
            if found:
                break
        if not found:
            bad.append(i)
    return bad


def test_locality_search_matches_brute_force_oracle():
    rng = random.Random(13)
    checked = 0
    while checked < 10:
        n = rng.randrange(5, 9)
        kk = rng.randrange(1, min(5, n))
        rows = [[rng.randrange(4) for _ in range(n)] for _ in range(kk)]
        basis = Mat4(rows).row_basis()
        if basis.rows == 0 or basis.rows >= n:
            continue
        code = LinearCode(gen=basis)
        r = rng.randrange(1, min(code.k, 3) + 1)
        delta = 3
        expected_bad = brute_force_locality(code, r, delta)
        res = verify_locality(code, r, delta)
        if expected_bad:
            assert not res.ok and list(res.bad_coordinates) == expected_bad
        else:
            assert res.ok
            covered = set()
            for g in res.groups:
                covered |= g.support
            assert covered == set(range(1, code.n + 1))
        checked += 1


@pytest.mark.parametrize(
    "cid,d", [("C19", 9), ("C19", 11), ("C17", 9), ("C17", 11), ("C17", 14), ("C17", 15)]
)
def test_unpartitionable_lrc_gets_augmented_profile(cid, d):
    # these chain members verify as optimal LRCs, yet every qualifying
    # cover needs more group rows than n - k, so no full-rank parity
    # check splits into local/global groups
    bc = build(cid, d=d)
    assert not bc.profile.partitioned
    assert bc.profile.matrix.rows > bc.code.n - bc.code.k
    assert bc.profile.matrix.rank() == bc.code.n - bc.code.k
    assert bc.code.min_distance() == d
    assert verify_locality(bc.code, bc.r, bc.delta).ok
    report = bc.verify()
    assert report.d_optimal and report.r_optimal
    assert report.checks["h_prime_mds"].passed is None
    assert report.checks["rows_per_group"].passed is True
    assert report.checks["punctured_mds"].passed is True
    assert report.all_passed  # indeterminate checks carry a note, not a failure
    assert any("partition" in note for note in report.notes)


def test_partitioned_profiles_everywhere_else():
    for cid, d in [("C17", 10), ("C17", 12), ("C17", 13), ("C17", 16),
                   ("C19", 8), ("C19", 10), ("C19", 12)]:
        assert build(cid, d=d).profile.partitioned, (cid, d)
