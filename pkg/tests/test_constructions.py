"""Construction builders versus closed-form sizes and cover/matching facts.

Every closed form is re-derived here as an explicit binomial expression and
checked against the literal size of the generated edge list, so the formula
and the generator act as oracles for each other.
"""

from __future__ import annotations

from itertools import combinations
from math import comb

import pytest

from ifam.constructions import (
    ConstructionError,
    ConstructionId,
    ConstructionParams,
    build_construction,
    em_size,
    hm0_size,
    hm_dp_size,
    hm_t_size,
    layout_table,
    size_formula,
    special_vertices,
)
from ifam.hypergraph import (
    cover_number,
    is_intersecting,
    mask_of,
    matching_number,
)


def build(cid, n, r, **kw):
    return build_construction(cid, ConstructionParams(n=n, r=r, **kw))


# -- sizes against explicit binomial expressions ----------------------------


def test_em_size_formula():
    for n, r, s in [(9, 3, 1), (10, 3, 2), (12, 3, 3), (11, 4, 2), (14, 5, 2)]:
        h = build(ConstructionId.EM, n, r, s=s)
        assert len(h) == comb(n, r) - comb(n - s, r) == em_size(n, r, s)


def test_em_spot_value():
    assert em_size(10, 3, 2) == 64
    assert len(build(ConstructionId.EM, 10, 3, s=2)) == 64


def test_hm0_size_formula():
    for n, r in [(6, 3), (9, 3), (9, 4), (12, 5)]:
        h = build(ConstructionId.HM0, n, r)
        assert len(h) == 3 * comb(n - 3, r - 2) + comb(n - 3, r - 3) == hm0_size(n, r)


def test_hm0_spot_value():
    # ten triples on six points
    assert hm0_size(6, 3) == 10
    assert len(build(ConstructionId.HM0, 6, 3)) == 10


def test_hm_t_size_formula():
    for n, r, t in [(9, 4, 1), (10, 4, 2), (10, 4, 3), (12, 5, 2), (9, 3, 1), (10, 3, 7)]:
        h = build(ConstructionId.HM_T, n, r, t=t)
        expected = comb(n - 1, r - 1) - comb(n - r, r - 1) + t
        if t <= r - 1:
            expected += comb(n - r - t, r - 1 - t)
        assert len(h) == expected == hm_t_size(n, r, t)


def test_hm_t_one_matches_classic_form():
    # t = 1 collapses to C(n-1, r-1) - C(n-r-1, r-1) + 1
    for n, r in [(9, 4), (12, 4), (11, 5)]:
        assert hm_t_size(n, r, 1) == comb(n - 1, r - 1) - comb(n - r - 1, r - 1) + 1
    assert hm_t_size(9, 4, 1) == 53


def test_hm_t_two_spot_value():
    assert hm_t_size(10, 4, 2) == 70


def test_hm_t_zero_aliases_triangle_base():
    assert build(ConstructionId.HM_T, 9, 4, t=0) == build(ConstructionId.HM0, 9, 4)


def test_hm_t_strictly_decreasing_in_t():
    for n, r in [(16, 4), (20, 5)]:
        sizes = [hm_t_size(n, r, t) for t in range(1, r)]
        assert all(a > b for a, b in zip(sizes, sizes[1:]))


def test_hm_dp_size_formula():
    for n, r in [(12, 5), (13, 5), (14, 6)]:
        h = build(ConstructionId.HM_DP, n, r)
        expected = (
            comb(n - 1, r - 1)
            - comb(n - r + 1, r - 1)
            + 4 * comb(n - r - 3, r - 3)
            + 4 * comb(n - r - 3, r - 4)
            + comb(n - r - 3, r - 5)
            + 2
        )
        assert len(h) == expected == hm_dp_size(n, r)


def test_hm_dp_spot_value():
    assert hm_dp_size(12, 5) == 303


def test_hm_dp_r4_counts_by_enumeration():
    for n in [8, 9, 12]:
        h = build(ConstructionId.HM_DP, n, 4)
        assert hm_dp_size(n, 4) == len(h)
        assert size_formula(ConstructionId.HM_DP, ConstructionParams(n=n, r=4)) == len(h)


def test_fp_edge_count_r3():
    # with r = 3 every generator already has three vertices
    h = build(ConstructionId.FP, 12, 3)
    assert len(h) == 10
    h6 = build(ConstructionId.FP, 6, 3)
    assert len(h6) == 10


def test_h3fam_sizes():
    for i in (3, 4, 5):
        for n in (6, 8, 11):
            h = build(ConstructionId.H3FAM, n, 3, i=i)
            assert len(h) == n + 4
            assert size_formula(ConstructionId.H3FAM, ConstructionParams(n=n, r=3, i=i)) == n + 4
    assert len(build(ConstructionId.H3FAM, 8, 3, i=1)) == 3 * 8 - 8
    assert len(build(ConstructionId.H3FAM, 6, 3, i=2)) == 10


def test_h3fam_spot_value():
    assert len(build(ConstructionId.H3FAM, 8, 3, i=3)) == 12


def test_size_formula_matches_builders_everywhere():
    cases = []
    for n in range(6, 13):
        cases.append((ConstructionId.EM, ConstructionParams(n=n, r=3, s=2)))
        cases.append((ConstructionId.HM0, ConstructionParams(n=n, r=4)))
        if n >= 8:
            cases.append((ConstructionId.HM_T, ConstructionParams(n=n, r=4, t=2)))
            cases.append((ConstructionId.HM_DP, ConstructionParams(n=n, r=4)))
            cases.append((ConstructionId.FP, ConstructionParams(n=n, r=4)))
        for i in range(6):
            cases.append((ConstructionId.H3FAM, ConstructionParams(n=n, r=3, i=i)))
        if n >= 7:
            for i in range(6):
                cases.append((ConstructionId.H3LIFT, ConstructionParams(n=n, r=4, i=i)))
    for cid, p in cases:
        assert size_formula(cid, p) == len(build_construction(cid, p)), (cid, p)


# -- intersecting / cover / matching structure ------------------------------


def test_all_star_free_constructions_are_intersecting():
    families = [
        build(ConstructionId.EM, 10, 3, s=1),
        build(ConstructionId.HM0, 8, 3),
        build(ConstructionId.HM_T, 9, 4, t=2),
        build(ConstructionId.HM_T, 10, 4, t=6),
        build(ConstructionId.HM_DP, 9, 4),
        build(ConstructionId.HM_DP, 12, 5),
        build(ConstructionId.FP, 8, 3),
        build(ConstructionId.FP, 10, 4),
    ]
    families += [build(ConstructionId.H3FAM, 8, 3, i=i) for i in range(6)]
    families += [build(ConstructionId.H3LIFT, 9, 4, i=i) for i in range(6)]
    for h in families:
        assert is_intersecting(h), h
        assert matching_number(h) == 1


def test_em_matching_and_cover_equal_s():
    for n, r, s in [(9, 3, 2), (12, 3, 3), (12, 4, 2), (15, 3, 4)]:
        h = build(ConstructionId.EM, n, r, s=s)
        assert matching_number(h) == s
        assert cover_number(h) == s
        assert not is_intersecting(h)


def test_cover_number_two_families():
    assert cover_number(build(ConstructionId.HM0, 8, 3)) == 2
    assert cover_number(build(ConstructionId.HM_T, 9, 4, t=1)) == 2
    assert cover_number(build(ConstructionId.HM_T, 9, 4, t=3)) == 2
    assert cover_number(build(ConstructionId.HM_DP, 9, 4)) == 2
    for i in range(6):
        assert cover_number(build(ConstructionId.H3FAM, 7, 3, i=i)) == 2
        assert cover_number(build(ConstructionId.H3LIFT, 8, 4, i=i)) == 2


def test_fp_cover_number_three():
    for n, r in [(6, 3), (8, 3), (8, 4), (10, 5)]:
        assert cover_number(build(ConstructionId.FP, n, r)) == 3


def test_fp_r3_is_exactly_its_generators():
    h = build(ConstructionId.FP, 9, 3)
    sv = special_vertices(ConstructionId.FP, ConstructionParams(n=9, r=3))
    x = sv["x"]
    ys = [v for k, v in sv.items() if k.startswith("y")]
    zs = [v for k, v in sv.items() if k.startswith("z")]
    assert mask_of(ys) in h
    assert all(mask_of([x, y, z]) in h for y in ys for z in zs)


# -- special vertex layouts -------------------------------------------------


def test_special_vertices_hm_t():
    sv = special_vertices(ConstructionId.HM_T, ConstructionParams(n=10, r=4, t=2))
    assert sv["x"] == 1
    assert [sv[f"x{i}"] for i in range(1, 4)] == [2, 3, 4]
    assert [sv[f"y{j}"] for j in range(1, 3)] == [5, 6]


def test_special_vertices_hm_dp():
    sv = special_vertices(ConstructionId.HM_DP, ConstructionParams(n=12, r=5))
    assert sv["x"] == 1
    assert sv["y1"] == 5 and sv["y1p"] == 6
    assert sv["y2"] == 7 and sv["y2p"] == 8


def test_special_vertices_consistent_with_edges():
    # every special vertex really appears in the built family's support
    cases = [
        (ConstructionId.EM, ConstructionParams(n=9, r=3, s=2)),
        (ConstructionId.HM0, ConstructionParams(n=8, r=3)),
        (ConstructionId.HM_T, ConstructionParams(n=9, r=4, t=1)),
        (ConstructionId.HM_DP, ConstructionParams(n=9, r=4)),
        (ConstructionId.FP, ConstructionParams(n=8, r=3)),
        (ConstructionId.H3FAM, ConstructionParams(n=7, r=3, i=4)),
    ]
    for cid, p in cases:
        h = build_construction(cid, p)
        support = set(h.support())
        for role, v in special_vertices(cid, p).items():
            assert v in support, (cid, role)


# -- parameter validation ---------------------------------------------------


def test_parameter_validation():
    with pytest.raises(ConstructionError):
        build(ConstructionId.EM, 5, 3, s=0)
    with pytest.raises(ConstructionError):
        build(ConstructionId.EM, 5, 3, s=3)  # n < r + s
    with pytest.raises(ConstructionError):
        build(ConstructionId.HM_T, 7, 4, t=2)  # n < 2r
    with pytest.raises(ConstructionError):
        build(ConstructionId.HM_T, 12, 4, t=5)  # t outside 0..r-1 and n-r
    with pytest.raises(ConstructionError):
        build(ConstructionId.HM0, 4, 4)  # n < r + 1
    with pytest.raises(ConstructionError):
        build(ConstructionId.HM_DP, 7, 4)  # n < r + 4
    with pytest.raises(ConstructionError):
        build(ConstructionId.HM_DP, 10, 3)  # r < 4
    with pytest.raises(ConstructionError):
        build(ConstructionId.FP, 5, 3)  # n < 2r
    with pytest.raises(ConstructionError):
        build(ConstructionId.H3FAM, 5, 3, i=3)  # n < 6
    with pytest.raises(ConstructionError):
        build(ConstructionId.H3FAM, 8, 4, i=3)  # r must be 3
    with pytest.raises(ConstructionError):
        build(ConstructionId.H3LIFT, 8, 3, i=0)  # r must exceed 3
    with pytest.raises(ConstructionError):
        build(ConstructionId.EM, 9, 3)  # missing s
    with pytest.raises(ConstructionError):
        build(ConstructionId.H3FAM, 8, 3)  # missing i


def test_layout_table_mentions_every_construction():
    table = layout_table()
    for cid in ConstructionId:
        assert cid.value in table


# -- lift structure ---------------------------------------------------------


def test_h3lift_edges_contain_a_base_edge():
    for i in range(6):
        base = build(ConstructionId.H3FAM, 8, 3, i=i)
        lifted = build(ConstructionId.H3LIFT, 8, 4, i=i)
        for e in lifted.edges:
            assert any(b & e == b for b in base.edges)
        # and every r-superset of a base edge is present
        for b in base.edges:
            rest = [v for v in range(1, 9) if not (b >> (v - 1)) & 1]
            for extra in combinations(rest, 1):
                assert (b | mask_of(extra)) in lifted
