from lrc4.classify import (
    enumerate_optimal_params,
    no_weight5_in_d4_planes,
    verify_claim1,
    verify_claim2,
    verify_counting_bounds,
    verify_geometric_nonexistence,
)
from lrc4.constructions import catalog
from lrc4.lrc import singleton_like_bound


def tuples(records):
    return {rec.as_tuple() for rec in records}


def test_enumeration_examples_up_to_10():
    recs = enumerate_optimal_params(10)
    ts = tuples(recs)
    assert (9, 5, 3, 3, 3) in ts  # n = 5l-1 family at l = 2
    assert (10, 5, 4, 3, 3) in ts  # n = 5l family at l = 2
    assert (10, 2, 5, 1, 5) in ts  # n = k*delta family
    assert (10, 3, 5, 2, 4) not in ts  # ruled out by the weight argument
    assert (11, 3, 6, 2, 4) not in tuples(enumerate_optimal_params(11))


def test_enumeration_families_attributed():
    recs = enumerate_optimal_params(10)
    by_tuple = {rec.as_tuple(): rec for rec in recs}
    assert by_tuple[(9, 5, 3, 3, 3)].family == "1"
    assert by_tuple[(10, 5, 4, 3, 3)].family == "6"
    assert by_tuple[(10, 2, 5, 1, 5)].family == "12"


def test_every_tuple_meets_the_bound_exactly():
    for rec in enumerate_optimal_params(30):
        assert rec.d == singleton_like_bound(rec.n, rec.k, rec.r, rec.delta)


def test_open_families_reported_open():
    recs = enumerate_optimal_params(30)
    open_recs = [rec for rec in recs if rec.status == "open"]
    assert (20, 7, 10, 3, 3) in {rec.as_tuple() for rec in open_recs}
    big = enumerate_optimal_params(128)
    open_34 = [rec for rec in big if rec.family == "34l=4" and rec.status == "open"]
    assert {rec.n // 6 for rec in open_34} == {18, 19, 20}


def test_no_nonexistent_family_parameters_in_output():
    nonexistent = {f.id for f in catalog() if f.status == "nonexistent"}
    recs = enumerate_optimal_params(128)
    assert all(rec.family not in nonexistent for rec in recs)
    banned = {(10, 3, 5, 2, 4), (11, 3, 6, 2, 4), (11, 4, 5, 3, 4)}
    assert not banned & tuples(recs)


def test_output_sorted_and_deduplicated():
    recs = enumerate_optimal_params(30)
    ts = [rec.as_tuple() for rec in recs]
    assert ts == sorted(ts)
    assert len(ts) == len(set(ts))


def test_every_constructed_instance_fully_verifies_up_to_30():
    # stronger than the acceptance sweep: every family instance with
    # n <= 30 (both variants) passes the entire pipeline
    from lrc4.constructions import build
    from lrc4.lrc import verify_locality

    seen = set()
    audited = 0
    for fam in catalog():
        if fam.status == "nonexistent" or fam.construction is None:
            continue
        for inst in fam.instances(30):
            if inst["status"] != "constructed":
                continue
            for v in fam.variants or (None,):
                key = (fam.construction, tuple(sorted(inst["params"].items())), v)
                if key in seen:
                    continue
                seen.add(key)
                kw = dict(inst["params"])
                if v:
                    kw["variant"] = v
                bc = build(fam.construction, **kw)
                audited += 1
                assert bc.code.min_distance() == inst["d"], key
                assert verify_locality(bc.code, bc.r, bc.delta).ok, key
                report = bc.verify()
                assert report.d_optimal and report.r_optimal, key
                assert all(c.passed is not False for c in report.checks.values()), key
    assert audited > 200


def test_enumeration_cap():
    import pytest

    with pytest.raises(ValueError):
        enumerate_optimal_params(129)


def test_weight5_scan():
    d4, weight5 = no_weight5_in_d4_planes()
    assert weight5 == 0
    assert d4 > 0


def test_claim1():
    rep = verify_claim1()
    assert rep.passed
    assert rep.facts["planes_scanned"] == 5797
    assert rep.facts["weight5_words_in_d4_planes"] == 0
    assert rep.facts["l_range_[10,3,5]"] == (2, 2)
    assert rep.facts["l_range_[11,3,6]"] == (2, 2)


def test_claim2():
    rep = verify_claim2()
    assert rep.passed
    assert rep.facts["l_range_[11,4,5]"] == (2, 2)
    assert rep.facts["support_overlap"] == 1


def test_geometric_nonexistence():
    rep = verify_geometric_nonexistence()
    assert rep.passed
    assert rep.facts["lines_in_pg2"] == 21
    assert rep.facts["points_per_line"] == [5]
    assert rep.facts["line_pairs_checked"] == 210
    assert rep.facts["pairwise_intersection_sizes"] == [1]
    assert rep.facts["pg4_pairs_sampled"] == 500
    assert rep.facts["pg4_all_intersect"] and rep.facts["pg4_rank_argument"]


def test_counting_bounds():
    rep = verify_counting_bounds()
    assert rep.passed
    assert rep.facts["points_pg4"] == 341
    assert rep.facts["common_point_bound"] == 17
    assert rep.facts["union_bound_l"] == 21
    assert rep.facts["max_degree_lambda"] == 5
    assert rep.facts["open_range_line_bound"] == 9
