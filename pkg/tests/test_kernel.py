"""Kernel decomposition structure, bounds, invariants, and the 3-graph reduction."""

from __future__ import annotations

import random
from itertools import combinations
from math import comb

import pytest

from ifam.constructions import ConstructionId, ConstructionParams, build_construction
from ifam.hypergraph import Hypergraph, cover_number, is_intersecting, mask_of
from ifam.kernel import (
    ThresholdScheme,
    b_kernel,
    b_star,
    kernel_bound,
    kernel_invariant_violations,
    paper_r,
    paper_rs,
    reduce_to_3graph,
)


def full_star(n, r, x=1):
    others = [v for v in range(1, n + 1) if v != x]
    return Hypergraph.from_vertex_sets(
        n, r, [(x, *c) for c in combinations(others, r - 1)]
    )


def hm_classic(n, r):
    return build_construction(ConstructionId.HM_T, ConstructionParams(n=n, r=r, t=1))


def random_intersecting(rng, n, r, target):
    universe = [mask_of(c) for c in combinations(range(1, n + 1), r)]
    rng.shuffle(universe)
    picked = []
    for e in universe:
        if all(e & f for f in picked):
            picked.append(e)
            if len(picked) == target:
                break
    return Hypergraph.from_masks(n, r, picked)


def test_scheme_tables():
    assert paper_r().table(4) == {1: 5, 2: 25, 3: 125}
    assert paper_r().table(3) == {1: 4, 2: 16}
    assert paper_rs(2).table(4) == {1: 64, 2: 512, 3: 4096}
    assert paper_rs(1).table(3) == {1: 9, 2: 27}


def test_scheme_claim_thresholds():
    s = paper_r()
    assert s.claim_threshold(4, 2) == 5
    assert s.claim_threshold(4, 3) == 25
    assert not s.claim_applies(4, 1)  # threshold 1 is vacuous
    t = paper_rs(2)
    assert t.claim_threshold(4, 1) == 8
    assert t.claim_applies(4, 1)


def test_scheme_validation():
    with pytest.raises(ValueError):
        ThresholdScheme("bogus")
    with pytest.raises(ValueError):
        ThresholdScheme("rs")  # missing s
    with pytest.raises(ValueError):
        ThresholdScheme("r", s=2)
    with pytest.raises(ValueError):
        paper_r().required(4, 0)
    with pytest.raises(ValueError):
        paper_r().required(4, 4)


def test_full_star_kernel_is_the_center():
    h = full_star(15, 3)
    d = b_kernel(h, paper_r())
    assert d.b_prime.vertex_sets() == [(1,)]
    assert len(d.b_dprime) == 0
    assert set(d.by_size) == {1}
    assert kernel_bound(h, d) == comb(14, 2) == len(h)
    assert kernel_invariant_violations(h, d) == []


def test_full_star_larger_cores_appear_with_room():
    # pairs through the center become cores once 16 disjoint singleton
    # petals fit, i.e. from n = 18 for triple systems
    bs17 = b_star(full_star(17, 3), paper_r())
    assert bs17.vertex_sets() == [(1,)]
    bs18 = b_star(full_star(18, 3), paper_r())
    assert (1,) in bs18.vertex_sets()
    assert all(1 in s for s in bs18.vertex_sets())
    assert {s for s in bs18.vertex_sets() if len(s) == 2} == {
        (1, a) for a in range(2, 19)
    }


def test_single_edge_kernel():
    h = Hypergraph.from_vertex_sets(9, 3, [(1, 2, 3)])
    d = b_kernel(h, paper_r())
    assert len(d.b_star) == 0
    assert d.b_dprime.members == h.edges
    assert kernel_bound(h, d) == 1
    assert kernel_invariant_violations(h, d) == []


def test_empty_family_kernel():
    h = Hypergraph(8, 3, ())
    d = b_kernel(h, paper_r())
    assert len(d.b()) == 0
    assert kernel_bound(h, d) == 0
    assert d.by_size == {}


def test_hm_kernel_below_threshold_scale():
    # at n = 51 no core reaches its multiplicity, so the kernel is the
    # family itself via the no-member edges
    h = hm_classic(51, 4)
    d = b_kernel(h, paper_r())
    assert len(d.b_star) == 0
    assert len(d.b_dprime) == len(h)
    assert kernel_bound(h, d) == len(h)
    assert kernel_invariant_violations(h, d) == []


def test_hm_kernel_structure_at_scale():
    # at n = 52 the four pairs through the apex qualify and the lone
    # apex-free edge survives as the only no-member edge
    h = hm_classic(52, 4)
    d = b_kernel(h, paper_r())
    expected_pairs = {(1, w) for w in (2, 3, 4, 5)}
    assert set(d.b_prime.vertex_sets()) == expected_pairs
    assert set(d.b_star.vertex_sets()) == expected_pairs
    assert d.b_dprime.vertex_sets() == [(2, 3, 4, 5)]
    assert set(d.by_size) == {2, 4}
    assert kernel_bound(h, d) == 4 * comb(50, 2) + 1 == 4901
    assert len(h) == 4611 <= 4901
    assert kernel_invariant_violations(h, d) == []


def test_kernel_invariants_random_families():
    rng = random.Random(20260822)
    for _ in range(60):
        r = rng.choice([3, 4])
        n = rng.randint(r + 2, 14)
        h = random_intersecting(rng, n, r, rng.randint(1, 25))
        d = b_kernel(h, paper_r())
        assert kernel_invariant_violations(h, d) == []
        assert kernel_bound(h, d) >= len(h)


def test_kernel_rs_scheme_runs_same_pipeline():
    h = full_star(19, 3)
    d = b_kernel(h, paper_rs(1))
    # multiplicity 9 for singletons: satisfied at n = 19
    assert d.b_prime.vertex_sets() == [(1,)]
    assert kernel_invariant_violations(h, d) == []
    d2 = b_kernel(h, paper_rs(2))
    # multiplicity 36 is out of reach, kernel falls back to the edges
    assert len(d2.b_star) == 0
    assert len(d2.b_dprime) == len(h)


def test_b_dprime_uses_subset_not_equality():
    # an edge equal to nothing in B* but containing a core is excluded
    h = full_star(15, 3)
    d = b_kernel(h, paper_r())
    assert all(1 in e for e in h.vertex_sets())
    assert len(d.b_dprime) == 0


def test_reduce_full_star_is_empty():
    h = full_star(15, 3)
    d = b_kernel(h, paper_r())
    hp, h3 = reduce_to_3graph(h, d)
    assert len(hp) == 0 and len(h3) == 0


def test_reduce_precondition():
    fp = build_construction(ConstructionId.FP, ConstructionParams(n=8, r=3))
    d = b_kernel(fp, paper_r())
    with pytest.raises(ValueError):
        reduce_to_3graph(fp, d)


def test_reduce_triangle_base_at_scale():
    # the 4-uniform two-of-three family reduces exactly onto its
    # 3-uniform counterpart
    h4 = build_construction(ConstructionId.HM0, ConstructionParams(n=52, r=4))
    d = b_kernel(h4, paper_r())
    assert set(d.b_prime.vertex_sets()) == {(1, 2), (1, 3), (2, 3)}
    assert len(d.b_dprime) == 0
    hp, h3 = reduce_to_3graph(h4, d)
    assert len(hp) == len(h4)
    base = build_construction(ConstructionId.HM0, ConstructionParams(n=52, r=3))
    assert h3.edges == base.edges
    assert is_intersecting(h3)
    assert cover_number(h3) == 2


def test_reduce_contract_on_random_pair_covered_families():
    rng = random.Random(31)
    count = 0
    for _ in range(60):
        r = rng.choice([3, 4])
        n = rng.randint(r + 4, 13)
        h = random_intersecting(rng, n, r, rng.randint(3, 20))
        if cover_number(h) > 2:
            continue
        count += 1
        d = b_kernel(h, paper_r())
        hp, h3 = reduce_to_3graph(h, d)
        assert set(hp.edges) <= set(h.edges)
        assert h3.r == 3
        if h3.edges:
            assert is_intersecting(h3)
            assert cover_number(h3) <= 2
    assert count > 5
