"""Exact sunflower detection and the classical size guarantee.

A sunflower with k petals is a collection of k distinct sets whose
pairwise intersections all equal one common core; the residues (petals)
are then pairwise disjoint.  Families of pairwise disjoint sets are
sunflowers with an empty core, and any k sets through a common element
whose residues are disjoint form a sunflower with that element as core.

Detection is exact and runs in two phases.  A complete feasibility test
first decides existence: the core of any sunflower with at least two
members is the intersection of two of them, so candidate cores are the
empty set plus either all proper nonempty subsets of members (scored by
codegree, for families of small sets) or all distinct pairwise
intersections; each candidate that enough members contain is settled by
exact set packing on the residues.  Only when a sunflower exists does
the witness search run: members are scanned in lexicographic order of
their sorted vertex tuples, each ordered pair fixes a core, and the
packing engine completes the collection with the least remaining
indices.  The first completion is the lexicographically least witness,
which makes the output deterministic.

``er_bound(k, i)`` returns k^i * i!, a family size at which i-uniform
families are guaranteed to contain a k-sunflower.  It is used by the
kernelization thresholds; no attempt is made at sharper constants.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from math import factorial

from .hypergraph import SetFamily, mask_of, pack_exists, vertices_of

__all__ = [
    "Sunflower",
    "er_bound",
    "find_sunflower",
    "find_sunflower_with_core",
]

# members at most this large get subset-enumerated candidate cores;
# larger ones fall back to pairwise intersections
_SUBSET_CAP = 12


@dataclass(frozen=True)
class Sunflower:
    """A core mask plus k >= 2 member masks pairwise intersecting in it."""

    n: int
    core: int
    members: tuple[int, ...]

    def __post_init__(self) -> None:
        self.validate()

    @property
    def k(self) -> int:
        return len(self.members)

    def core_vertices(self) -> tuple[int, ...]:
        return vertices_of(self.core)

    def member_sets(self) -> list[tuple[int, ...]]:
        return [vertices_of(m) for m in self.members]

    def petals(self) -> list[int]:
        return [m & ~self.core for m in self.members]

    def validate(self) -> None:
        if len(self.members) < 2:
            raise ValueError("a sunflower needs at least two members")
        if len(set(self.members)) != len(self.members):
            raise ValueError("sunflower members must be distinct")
        for i, a in enumerate(self.members):
            for b in self.members[i + 1 :]:
                if a & b != self.core:
                    raise ValueError(
                        f"members {vertices_of(a)} and {vertices_of(b)} "
                        f"do not intersect exactly in the core {vertices_of(self.core)}"
                    )


def er_bound(k: int, i: int) -> int:
    """k^i * i!; i-uniform families at least this large contain a k-sunflower."""
    if k < 1 or i < 1:
        raise ValueError("er_bound requires k >= 1 and i >= 1")
    return k**i * factorial(i)


def _tuple_sorted(masks) -> list[int]:
    return sorted(masks, key=vertices_of)


def _core_packs(masks, core: int, k: int) -> bool:
    petals = [m & ~core for m in masks if m & core == core]
    return len(petals) >= k and pack_exists(petals, k) is not None


def _sunflower_exists(masks: list[int], k: int) -> bool:
    """Complete existence test over all candidate cores."""
    if len(masks) < k:
        return False
    if pack_exists(masks, k) is not None:
        return True  # empty core
    if max(m.bit_count() for m in masks) <= _SUBSET_CAP:
        # include each member itself: in mixed-size families the core can
        # coincide with a member contained in all the others
        codegree: Counter[int] = Counter()
        for m in masks:
            vs = vertices_of(m)
            for size in range(1, len(vs) + 1):
                for sub in combinations(vs, size):
                    codegree[mask_of(sub)] += 1
        candidates = (t for t, deg in codegree.items() if deg >= k)
    else:
        candidates = iter({a & b for a, b in combinations(masks, 2) if a & b})
    return any(_core_packs(masks, t, k) for t in candidates)


def find_sunflower(family: SetFamily, k: int) -> Sunflower | None:
    """Lexicographically least k-sunflower inside the family, if any.

    Absence is decided by the complete feasibility test; when a sunflower
    exists, every ordered member pair in tuple order fixes a candidate
    core and the least packing of compatible residues completes it.
    """
    if k < 2:
        raise ValueError("find_sunflower requires k >= 2")
    members = _tuple_sorted(family.members)
    m = len(members)
    if not _sunflower_exists(members, k):
        return None
    for i0 in range(m - k + 1):
        e0 = members[i0]
        for i1 in range(i0 + 1, m - k + 2):
            e1 = members[i1]
            core = e0 & e1
            outside = (e0 | e1) & ~core
            cands = [
                j
                for j in range(i1 + 1, m)
                if members[j] & core == core and not members[j] & outside
            ]
            if len(cands) < k - 2:
                continue
            got = pack_exists([members[j] & ~core for j in cands], k - 2)
            if got is not None:
                chosen = [e0, e1] + [members[cands[j]] for j in got]
                return Sunflower(family.n, core, tuple(chosen))
    raise AssertionError("feasibility and witness search disagree")


def find_sunflower_with_core(family: SetFamily, core: int, k: int) -> Sunflower | None:
    """Least k-sunflower whose pairwise intersections equal `core` exactly.

    Members not containing the core cannot participate; among the rest a
    sunflower with this exact core is precisely a set of k members whose
    residues are pairwise disjoint, an exact packing question.
    """
    if k < 2:
        raise ValueError("find_sunflower_with_core requires k >= 2")
    carriers = _tuple_sorted(mb for mb in family.members if mb & core == core)
    if len(carriers) < k:
        return None
    petals = [mb & ~core for mb in carriers]
    picked = pack_exists(petals, k)
    if picked is None:
        return None
    return Sunflower(family.n, core, tuple(carriers[i] for i in picked))
