"""Extremal intersecting-family constructions with canonical vertex layouts.

Every builder places its special vertices on the lowest labels, in the
order given by the layout table below; all remaining labels are
interchangeable filler.  ``special_vertices`` returns the role -> label
map that ``gen --layout`` prints.

======== ====================================================================
id       layout and edge rules
======== ====================================================================
EM       centers x1..xs = 1..s; edges: every r-set meeting {1..s}.
         (s = 1 is the full star.)
HM_T     apex x = 1; base X = x1..x_{r-1} = 2..r; tails y1..yt = r+1..r+t.
         Edges: (1) x and some xi both in e; (2) e = X + yj;
         (3) if 1 <= t <= r-1, every e containing {x, y1..yt}.
         t is restricted to {0} u {1..r-1} u {n-r}; t = 0 is an alias
         for HM0 (a genuinely different special-vertex pattern).
HM0      triple T = {1, 2, 3}; edges: every r-set containing at least
         two vertices of T.
HM_DP    apex x = 1; base X = x1..x_{r-2} = 2..r-1; tail pairs
         {y1, y1'} = {r, r+1} and {y2, y2'} = {r+2, r+3}.
         Edges: (1) x and some xi both in e; (2) x in e and e meets both
         tail pairs; (3) e = X + {y1, y1'} or e = X + {y2, y2'}.
FP       x = 1; Y = 2..r+1 with marked pair y1, y2 = 2, 3; Z = r+2..2r.
         Generators: all {x, y, z} with y in Y, z in Z; Y itself;
         {x, y1, y2}; Z + y1; Z + y2.  Edges: every r-set containing a
         generator.
H3FAM    3-uniform families, n >= 6, index i in 0..5:
         i = 0, 1, 2: HM0(n, 3) / HM_T(n, 3, t = i).
         i = 3: v1, v2 = 1, 2; Y = {3, 4, 5}; edges {v1, v2, w} for all
         w, plus the six triples with one of v1, v2 and two of Y.
         i = 4, 5: v1, v2 = 1, 2; z11, z11', z21, z21' = 3, 4, 5, 6;
         edges {v1, v2, w} for all w, plus six listed triples (two
         sharpness variants of the same pattern).
H3LIFT   every r-set containing an edge of H3FAM(n, i).
======== ====================================================================

``size_formula`` returns the closed-form count where one exists and is
enumeration-backed (the size of the built edge set) for FP, for HM_DP at
r = 4, and for H3LIFT.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from math import comb

from .hypergraph import Hypergraph, mask_of

__all__ = [
    "ConstructionId",
    "ConstructionParams",
    "ConstructionError",
    "build_construction",
    "validate_construction_params",
    "size_formula",
    "special_vertices",
    "layout_table",
    "choose",
]


def choose(a: int, b: int) -> int:
    """Binomial coefficient with C(a, b) = 0 whenever b < 0 or a < b."""
    if b < 0 or a < b:
        return 0
    return comb(a, b)


class ConstructionId(str, Enum):
    EM = "EM"
    HM_T = "HM_T"
    HM0 = "HM0"
    HM_DP = "HM_DP"
    FP = "FP"
    H3FAM = "H3FAM"
    H3LIFT = "H3LIFT"


@dataclass(frozen=True)
class ConstructionParams:
    n: int
    r: int
    s: int | None = None
    t: int | None = None
    i: int | None = None


class ConstructionError(ValueError):
    pass


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ConstructionError(message)


# -- individual builders ----------------------------------------------------


def _build_em(n: int, r: int, s: int) -> Hypergraph:
    _require(s >= 1, f"EM needs s >= 1, got s={s}")
    _require(r >= 1, f"EM needs r >= 1, got r={r}")
    _require(n >= r + s, f"EM needs n >= r + s, got n={n}, r={r}, s={s}")
    smask = mask_of(range(1, s + 1))
    if s == 1:
        edges = [1 | mask_of(c) for c in combinations(range(2, n + 1), r - 1)]
    else:
        edges = [
            m
            for c in combinations(range(1, n + 1), r)
            if (m := mask_of(c)) & smask
        ]
    return Hypergraph.from_masks(n, r, edges)


def _build_hm_t(n: int, r: int, t: int) -> Hypergraph:
    if t == 0:
        return _build_hm0(n, r)
    _require(r >= 3, f"HM_T needs r >= 3, got r={r}")
    _require(n >= 2 * r, f"HM_T needs n >= 2r, got n={n}, r={r}")
    _require(
        1 <= t <= r - 1 or t == n - r,
        f"HM_T needs t in {{0}} u {{1..{r - 1}}} u {{{n - r}}}, got t={t}",
    )
    x = 1
    xmask = mask_of(range(2, r + 1))
    ymask = mask_of(range(r + 1, r + t + 1))
    edges = set()
    for c in combinations(range(2, n + 1), r - 1):
        m = mask_of(c)
        if m & xmask:
            edges.add(m | 1)
    for yj in range(r + 1, r + t + 1):
        edges.add(xmask | (1 << (yj - 1)))
    if t <= r - 1:
        free = [v for v in range(2, n + 1) if not (xmask | ymask) & (1 << (v - 1))]
        for c in combinations(free, r - 1 - t):
            edges.add(1 | ymask | mask_of(c))
    return Hypergraph.from_masks(n, r, edges)


def _build_hm0(n: int, r: int) -> Hypergraph:
    _require(r >= 3, f"HM0 needs r >= 3, got r={r}")
    _require(n >= r + 1, f"HM0 needs n >= r + 1, got n={n}, r={r}")
    rest = range(4, n + 1)
    edges = set()
    for pair in combinations((1, 2, 3), 2):
        for c in combinations(rest, r - 2):
            edges.add(mask_of(pair) | mask_of(c))
    for c in combinations(rest, r - 3):
        edges.add(mask_of((1, 2, 3)) | mask_of(c))
    return Hypergraph.from_masks(n, r, edges)


def _build_hm_dp(n: int, r: int) -> Hypergraph:
    _require(r >= 4, f"HM_DP needs r >= 4, got r={r}")
    _require(n >= r + 4, f"HM_DP needs n >= r + 4, got n={n}, r={r}")
    xmask = mask_of(range(2, r))
    pair1 = mask_of((r, r + 1))
    pair2 = mask_of((r + 2, r + 3))
    edges = set()
    for c in combinations(range(2, n + 1), r - 1):
        m = mask_of(c)
        if m & xmask or (m & pair1 and m & pair2):
            edges.add(m | 1)
    edges.add(xmask | pair1)
    edges.add(xmask | pair2)
    return Hypergraph.from_masks(n, r, edges)


def _fp_generators(n: int, r: int) -> list[int]:
    x = 1
    ys = list(range(2, r + 2))
    zs = list(range(r + 2, 2 * r + 1))
    gens = [mask_of((x, y, z)) for y in ys for z in zs]
    gens.append(mask_of(ys))
    gens.append(mask_of((x, 2, 3)))
    gens.append(mask_of(zs + [2]))
    gens.append(mask_of(zs + [3]))
    return sorted(set(gens))


def _build_fp(n: int, r: int) -> Hypergraph:
    _require(r >= 3, f"FP needs r >= 3, got r={r}")
    _require(n >= 2 * r, f"FP needs n >= 2r, got n={n}, r={r}")
    edges = set()
    for g in _fp_generators(n, r):
        gsize = g.bit_count()
        rest = [v for v in range(1, n + 1) if not g & (1 << (v - 1))]
        for c in combinations(rest, r - gsize):
            edges.add(g | mask_of(c))
    return Hypergraph.from_masks(n, r, edges)


_H3_EXTRAS = {
    3: ((1, 3, 4), (1, 3, 5), (1, 4, 5), (2, 3, 4), (2, 3, 5), (2, 4, 5)),
    4: ((1, 3, 4), (1, 5, 6), (2, 3, 5), (2, 3, 6), (2, 4, 5), (2, 4, 6)),
    5: ((1, 3, 4), (1, 5, 6), (1, 3, 6), (2, 3, 6), (2, 3, 5), (2, 4, 6)),
}


def _build_h3fam(n: int, i: int) -> Hypergraph:
    _require(0 <= i <= 5, f"H3FAM needs i in 0..5, got i={i}")
    _require(n >= 6, f"H3FAM needs n >= 6, got n={n}")
    if i == 0:
        return _build_hm0(n, 3)
    if i in (1, 2):
        return _build_hm_t(n, 3, i)
    edges = {mask_of((1, 2, w)) for w in range(3, n + 1)}
    edges.update(mask_of(tr) for tr in _H3_EXTRAS[i])
    return Hypergraph.from_masks(n, 3, edges)


def _build_h3_lift(n: int, r: int, i: int) -> Hypergraph:
    _require(r >= 4, f"H3LIFT needs r >= 4, got r={r}")
    _require(n >= r + 1, f"H3LIFT needs n >= r + 1, got n={n}, r={r}")
    base = _build_h3fam(n, i)
    edges = set()
    for b in base.edges:
        rest = [v for v in range(1, n + 1) if not b & (1 << (v - 1))]
        for c in combinations(rest, r - 3):
            edges.add(b | mask_of(c))
    return Hypergraph.from_masks(n, r, edges)


# -- public dispatchers -----------------------------------------------------


def _need(p: ConstructionParams, name: str, cid: ConstructionId) -> int:
    val = getattr(p, name)
    _require(val is not None, f"{cid.value} needs parameter {name}")
    return val


def validate_construction_params(cid: ConstructionId, p: ConstructionParams) -> None:
    """Raise ConstructionError unless (cid, p) names a buildable instance.

    Same checks as the builders, but without materializing any edges, so
    callers can vet parameters for large n cheaply.
    """
    cid = ConstructionId(cid)
    n, r = p.n, p.r
    if cid is ConstructionId.EM:
        s = _need(p, "s", cid)
        _require(s >= 1, f"EM needs s >= 1, got s={s}")
        _require(r >= 1, f"EM needs r >= 1, got r={r}")
        _require(n >= r + s, f"EM needs n >= r + s, got n={n}, r={r}, s={s}")
    elif cid is ConstructionId.HM_T:
        t = _need(p, "t", cid)
        if t == 0:
            validate_construction_params(ConstructionId.HM0, p)
            return
        _require(r >= 3, f"HM_T needs r >= 3, got r={r}")
        _require(n >= 2 * r, f"HM_T needs n >= 2r, got n={n}, r={r}")
        _require(
            1 <= t <= r - 1 or t == n - r,
            f"HM_T needs t in {{0}} u {{1..{r - 1}}} u {{{n - r}}}, got t={t}",
        )
    elif cid is ConstructionId.HM0:
        _require(r >= 3, f"HM0 needs r >= 3, got r={r}")
        _require(n >= r + 1, f"HM0 needs n >= r + 1, got n={n}, r={r}")
    elif cid is ConstructionId.HM_DP:
        _require(r >= 4, f"HM_DP needs r >= 4, got r={r}")
        _require(n >= r + 4, f"HM_DP needs n >= r + 4, got n={n}, r={r}")
    elif cid is ConstructionId.FP:
        _require(r >= 3, f"FP needs r >= 3, got r={r}")
        _require(n >= 2 * r, f"FP needs n >= 2r, got n={n}, r={r}")
    elif cid is ConstructionId.H3FAM:
        i = _need(p, "i", cid)
        _require(r == 3, f"H3FAM is 3-uniform, got r={r}")
        _require(0 <= i <= 5, f"H3FAM needs i in 0..5, got i={i}")
        _require(n >= 6, f"H3FAM needs n >= 6, got n={n}")
    elif cid is ConstructionId.H3LIFT:
        i = _need(p, "i", cid)
        _require(r >= 4, f"H3LIFT needs r >= 4, got r={r}")
        _require(0 <= i <= 5, f"H3LIFT needs i in 0..5, got i={i}")
        _require(n >= r + 1, f"H3LIFT needs n >= r + 1, got n={n}, r={r}")
        _require(n >= 6, f"H3LIFT needs n >= 6, got n={n}")
    else:
        raise ConstructionError(f"unknown construction {cid!r}")


def build_construction(cid: ConstructionId, p: ConstructionParams) -> Hypergraph:
    cid = ConstructionId(cid)
    if cid is ConstructionId.EM:
        return _build_em(p.n, p.r, _need(p, "s", cid))
    if cid is ConstructionId.HM_T:
        return _build_hm_t(p.n, p.r, _need(p, "t", cid))
    if cid is ConstructionId.HM0:
        return _build_hm0(p.n, p.r)
    if cid is ConstructionId.HM_DP:
        return _build_hm_dp(p.n, p.r)
    if cid is ConstructionId.FP:
        return _build_fp(p.n, p.r)
    if cid is ConstructionId.H3FAM:
        _require(p.r == 3, f"H3FAM is 3-uniform, got r={p.r}")
        return _build_h3fam(p.n, _need(p, "i", cid))
    if cid is ConstructionId.H3LIFT:
        return _build_h3_lift(p.n, p.r, _need(p, "i", cid))
    raise ConstructionError(f"unknown construction {cid!r}")


def em_size(n: int, r: int, s: int) -> int:
    return choose(n, r) - choose(n - s, r)


def hm0_size(n: int, r: int) -> int:
    return 3 * choose(n - 3, r - 2) + choose(n - 3, r - 3)


def hm_t_size(n: int, r: int, t: int) -> int:
    if t == 0:
        return hm0_size(n, r)
    base = choose(n - 1, r - 1) - choose(n - r, r - 1)
    extra = t
    if t <= r - 1:
        extra += choose(n - r - t, r - 1 - t)
    return base + extra


def hm_dp_size(n: int, r: int) -> int:
    if r == 4:
        return len(_build_hm_dp(n, r))
    return (
        choose(n - 1, r - 1)
        - choose(n - r + 1, r - 1)
        + 4 * choose(n - r - 3, r - 3)
        + 4 * choose(n - r - 3, r - 4)
        + choose(n - r - 3, r - 5)
        + 2
    )


def size_formula(cid: ConstructionId, p: ConstructionParams) -> int:
    cid = ConstructionId(cid)
    if cid is ConstructionId.EM:
        return em_size(p.n, p.r, _need(p, "s", cid))
    if cid is ConstructionId.HM_T:
        return hm_t_size(p.n, p.r, _need(p, "t", cid))
    if cid is ConstructionId.HM0:
        return hm0_size(p.n, p.r)
    if cid is ConstructionId.HM_DP:
        return hm_dp_size(p.n, p.r)
    if cid is ConstructionId.FP:
        return len(_build_fp(p.n, p.r))
    if cid is ConstructionId.H3FAM:
        i = _need(p, "i", cid)
        if i == 0:
            return hm0_size(p.n, 3)
        if i in (1, 2):
            return hm_t_size(p.n, 3, i)
        return p.n + 4
    if cid is ConstructionId.H3LIFT:
        return len(_build_h3_lift(p.n, p.r, _need(p, "i", cid)))
    raise ConstructionError(f"unknown construction {cid!r}")


def special_vertices(cid: ConstructionId, p: ConstructionParams) -> dict[str, int]:
    """Role -> vertex label map for the canonical layout."""
    cid = ConstructionId(cid)
    if cid is ConstructionId.EM:
        s = _need(p, "s", cid)
        return {f"x{j}": j for j in range(1, s + 1)}
    if cid is ConstructionId.HM_T:
        t = _need(p, "t", cid)
        if t == 0:
            return special_vertices(ConstructionId.HM0, p)
        out = {"x": 1}
        out.update({f"x{j}": j + 1 for j in range(1, p.r)})
        out.update({f"y{j}": p.r + j for j in range(1, t + 1)})
        return out
    if cid is ConstructionId.HM0:
        return {"x": 1, "x1": 2, "x2": 3}
    if cid is ConstructionId.HM_DP:
        out = {"x": 1}
        out.update({f"x{j}": j + 1 for j in range(1, p.r - 1)})
        out.update({"y1": p.r, "y1p": p.r + 1, "y2": p.r + 2, "y2p": p.r + 3})
        return out
    if cid is ConstructionId.FP:
        out = {"x": 1}
        out.update({f"y{j}": 1 + j for j in range(1, p.r + 1)})
        out.update({f"z{j}": p.r + 1 + j for j in range(1, p.r)})
        return out
    if cid in (ConstructionId.H3FAM, ConstructionId.H3LIFT):
        i = _need(p, "i", cid)
        if i == 0:
            return {"x": 1, "x1": 2, "x2": 3}
        if i in (1, 2):
            out = {"x": 1, "x1": 2, "x2": 3}
            out.update({f"y{j}": 3 + j for j in range(1, i + 1)})
            return out
        if i == 3:
            return {"v1": 1, "v2": 2, "y1": 3, "y2": 4, "y3": 5}
        return {"v1": 1, "v2": 2, "z11": 3, "z11p": 4, "z21": 5, "z21p": 6}
    raise ConstructionError(f"unknown construction {cid!r}")


def layout_table() -> str:
    """The layout documentation block printed by the CLI."""
    doc = __doc__ or ""
    start = doc.index("========")
    end = doc.rindex("========") + len("========")
    return doc[start:end]
