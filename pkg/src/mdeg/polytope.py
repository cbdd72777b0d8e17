"""Lattice polytopes over Z^n with exact arithmetic.

The convex hull engine is an incremental beneath-beyond method over the
integers (no rounding anywhere): simplicial boundary facets are maintained
during insertion and merged into true facets with primitive integer normals
at the end. It is exact in any dimension and used here up to dimension 5
(Cayley sums of triples of 3-polytopes).
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import gcd

from . import intlin
from .errors import (
    DimensionMismatch,
    EmptyTuple,
    LowerDimensional,
    ZeroVector,
)

Point = tuple[int, ...]


def _sub(a: Point, b: Point) -> Point:
    return tuple(x - y for x, y in zip(a, b))


def _add(a: Point, b: Point) -> Point:
    return tuple(x + y for x, y in zip(a, b))


def _dot(a, b) -> int:
    return sum(x * y for x, y in zip(a, b))


def _affine_basis_indices(points: list[Point]) -> list[int]:
    """Indices i (after 0) so that points[i] - points[0] are linearly independent."""
    chosen: list[int] = []
    rows: list[list[int]] = []
    p0 = points[0]
    for i in range(1, len(points)):
        cand = list(_sub(points[i], p0))
        red = cand[:]
        for row in rows:
            piv = next(j for j, x in enumerate(row) if x != 0)
            if red[piv] != 0:
                a, b = row[piv], red[piv]
                red = [a * x - b * y for x, y in zip(red, row)]
        if any(x != 0 for x in red):
            rows.append(red)
            chosen.append(i)
    return chosen


def _simplex_normal(corners: list[Point]) -> Point | None:
    """Integer normal of the hyperplane through D points in R^D, or None if degenerate."""
    d = len(corners[0])
    diffs = [_sub(c, corners[0]) for c in corners[1:]]
    normal = []
    cols = list(range(d))
    for j in range(d):
        minor = tuple(tuple(row[c] for c in cols if c != j) for row in diffs)
        m = intlin.det(minor)
        normal.append(m if j % 2 == 0 else -m)
    if all(x == 0 for x in normal):
        return None
    return tuple(normal)


def _hull_1d(points: list[Point]) -> tuple[list[Point], list[tuple[Point, int]], list]:
    lo = min(points)
    hi = max(points)
    verts = [lo] if lo == hi else [lo, hi]
    facets = [((1,), hi[0]), ((-1,), -lo[0])]
    tri = [((hi,), (1,)), ((lo,), (-1,))]
    return verts, facets, tri


def _hull_2d(points: list[Point]) -> tuple[list[Point], list[tuple[Point, int]], list]:
    """Monotone chain; returns (vertices ccw, facets, boundary triangulation)."""
    pts = sorted(set(points))

    def half(seq):
        out: list[Point] = []
        for p in seq:
            while len(out) >= 2:
                o, a = out[-2], out[-1]
                cross = (a[0] - o[0]) * (p[1] - o[1]) - (a[1] - o[1]) * (p[0] - o[0])
                if cross <= 0:
                    out.pop()
                else:
                    break
            out.append(p)
        return out

    lower = half(pts)
    upper = half(reversed(pts))
    ring = lower[:-1] + upper[:-1]
    facets = []
    tri = []
    for a, b in zip(ring, ring[1:] + ring[:1]):
        n = (b[1] - a[1], a[0] - b[0])
        g = gcd(n[0], n[1])
        n = (n[0] // g, n[1] // g)
        facets.append((n, _dot(n, a)))
        tri.append(((a, b), n))
    return ring, facets, tri


def _hull_full_dim(points: list[Point], d: int):
    """Beneath-beyond hull of full-dimensional points in R^d, d >= 2.

    Returns (vertices, facets, simplicial boundary) where facets carry
    primitive integer normals a with a.x <= b and simplicial boundary is a
    list of (corner tuple, raw outward normal) pairs triangulating it.
    """
    if d == 2:
        return _hull_2d(points)

    pts = sorted(set(points))
    basis = _affine_basis_indices(pts)
    assert len(basis) == d, "points are not full-dimensional"
    init = [0] + basis
    ref = tuple(sum(pts[i][j] for i in init) for j in range(d))  # (d+1) * centroid

    # Simplicial facet store: fid -> (corners tuple, normal, offset)
    facets: dict[int, tuple[tuple[Point, ...], Point, int]] = {}
    ridge_map: dict[frozenset[Point], list[int]] = {}
    next_id = 0

    def add_facet(corners: tuple[Point, ...]):
        nonlocal next_id
        n = _simplex_normal(list(corners))
        b = _dot(n, corners[0])
        # Orient outward: interior reference strictly below.
        side = (d + 1) * b - _dot(n, ref)
        if side < 0:
            n = tuple(-x for x in n)
            b = -b
        facets[next_id] = (corners, n, b)
        for i in range(d):
            ridge = frozenset(corners[:i] + corners[i + 1 :])
            ridge_map.setdefault(ridge, []).append(next_id)
        next_id += 1

    init_pts = [pts[i] for i in init]
    for skip in range(d + 1):
        add_facet(tuple(init_pts[:skip] + init_pts[skip + 1 :]))

    rest = [p for i, p in enumerate(pts) if i not in set(init)]
    for p in rest:
        visible = [fid for fid, (_, n, b) in facets.items() if _dot(n, p) > b]
        if not visible:
            continue
        visible_set = set(visible)
        horizon: list[frozenset[Point]] = []
        dead_ridges: list[frozenset[Point]] = []
        for fid in visible:
            corners = facets[fid][0]
            for i in range(d):
                ridge = frozenset(corners[:i] + corners[i + 1 :])
                owners = ridge_map[ridge]
                others = [o for o in owners if o not in visible_set]
                if others:
                    horizon.append(ridge)
                elif all(o in visible_set for o in owners):
                    dead_ridges.append(ridge)
        for fid in visible:
            del facets[fid]
        for ridge in set(dead_ridges):
            ridge_map.pop(ridge, None)
        seen = set()
        for ridge in horizon:
            if ridge in seen:
                continue
            seen.add(ridge)
            ridge_map[ridge] = [o for o in ridge_map[ridge] if o not in visible_set]
            add_facet(tuple(sorted(ridge)) + (p,))

    # Merge simplicial facets into true facets keyed by primitive (normal, offset).
    merged: dict[tuple[Point, int], None] = {}
    tri = []
    for corners, n, b in facets.values():
        g = intlin.gcd_vector(n)
        key = (tuple(x // g for x in n), b // g)
        merged[key] = None
        tri.append((corners, n))
    facet_list = sorted(merged)

    # Vertices: corners of the triangulation whose active normals span R^d.
    candidates = sorted({c for corners, _ in tri for c in corners})
    verts = []
    for p in candidates:
        active = [n for n, b in facet_list if _dot(n, p) == b]
        if len(active) >= d and _rank(active) == d:
            verts.append(p)
    return verts, facet_list, tri


def _rank(rows) -> int:
    work = [list(r) for r in rows]
    n_cols = len(work[0])
    rank = 0
    for col in range(n_cols):
        piv = None
        for i in range(rank, len(work)):
            if work[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        prow = work[rank]
        for i in range(rank + 1, len(work)):
            if work[i][col] != 0:
                a, b = prow[col], work[i][col]
                work[i] = [a * x - b * y for x, y in zip(work[i], prow)]
        rank += 1
        if rank == len(work):
            break
    return rank


class LatticePolytope:
    """Immutable lattice polytope given by its irredundant vertex set.

    Use :func:`hull` to construct one; the facet description (for
    full-dimensional polytopes) is computed eagerly, everything else lazily.
    """

    __slots__ = (
        "ambient_dim",
        "vertices",
        "facets",
        "_dim",
        "_tri",
        "_lattice_points",
        "_interior_points",
        "_volume",
        "_edges",
        "_width",
        "_hash",
    )

    def __init__(self, ambient_dim, vertices, facets, dim, tri):
        self.ambient_dim = ambient_dim
        self.vertices = vertices
        self.facets = facets
        self._dim = dim
        self._tri = tri
        self._lattice_points = None
        self._interior_points = None
        self._volume = None
        self._edges = None
        self._width = None
        self._hash = hash((ambient_dim, vertices))

    def __eq__(self, other):
        return (
            isinstance(other, LatticePolytope)
            and self.ambient_dim == other.ambient_dim
            and self.vertices == other.vertices
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"LatticePolytope(dim={self._dim}, ambient={self.ambient_dim}, nverts={len(self.vertices)})"

    @property
    def dim(self) -> int:
        return self._dim

    def is_full_dimensional(self) -> bool:
        return self._dim == self.ambient_dim

    def require_full_dimensional(self):
        if not self.is_full_dimensional():
            raise LowerDimensional(
                f"operation needs a full-dimensional polytope; dim {self._dim} < ambient {self.ambient_dim}"
            )

    def translate(self, t) -> "LatticePolytope":
        t = tuple(t)
        verts = tuple(sorted(_add(v, t) for v in self.vertices))
        facets = tuple(sorted((n, b + _dot(n, t)) for n, b in self.facets)) if self.facets else ()
        tri = None
        if self._tri is not None:
            tri = [(tuple(_add(c, t) for c in corners), n) for corners, n in self._tri]
        return LatticePolytope(self.ambient_dim, verts, facets, self._dim, tri)

    def apply(self, linear, translation=None) -> "LatticePolytope":
        """Image under x -> linear @ x + translation (must stay a polytope; re-hulled)."""
        t = tuple(translation) if translation is not None else (0,) * len(linear)
        pts = [_add(intlin.mat_vec(linear, v), t) for v in self.vertices]
        return hull(pts)

    def bounding_box(self):
        lo = tuple(min(v[i] for v in self.vertices) for i in range(self.ambient_dim))
        hi = tuple(max(v[i] for v in self.vertices) for i in range(self.ambient_dim))
        return lo, hi

    def contains_point(self, x) -> bool:
        """Membership in the polytope (not just its lattice)."""
        if self.is_full_dimensional():
            return all(_dot(n, x) <= b for n, b in self.facets)
        emb = _embedding(self)
        y = emb.project(x)
        if emb.lift(y) != tuple(x):
            return False
        return emb.image.contains_point(y)

    def contains(self, other: "LatticePolytope") -> bool:
        return all(self.contains_point(v) for v in other.vertices)


class _Embedding:
    """Unimodular chart for the affine hull of a lower-dimensional polytope."""

    def __init__(self, p: LatticePolytope):
        d = p.dim
        n = p.ambient_dim
        p0 = p.vertices[0]
        diffs = tuple(_sub(v, p0) for v in p.vertices[1:])
        if diffs:
            cols = tuple(zip(*diffs))  # n x (v-1): differences as columns
            _, u = intlin.row_hnf_with_transform(cols)
        else:
            u = intlin.identity_matrix(n)
        self.base = p0
        self.u = u
        self.uinv = intlin.unimodular_inverse(u)
        self.k = d
        self.image = hull([self.project(v) for v in p.vertices])

    def project(self, x) -> Point:
        y = intlin.mat_vec(self.u, _sub(tuple(x), self.base))
        return y[: self.k]

    def lift(self, y) -> Point:
        full = tuple(y) + (0,) * (len(self.base) - self.k)
        return _add(intlin.mat_vec(self.uinv, full), self.base)


@lru_cache(maxsize=65536)
def _embedding(p: LatticePolytope) -> _Embedding:
    return _Embedding(p)


def hull(points) -> LatticePolytope:
    """Convex hull of integer points; canonicalizes redundant input."""
    pts = [tuple(int(x) for x in p) for p in points]
    if not pts:
        raise ValueError("need at least one point")
    n = len(pts[0])
    if any(len(p) != n for p in pts):
        raise DimensionMismatch("points of inconsistent dimension")
    uniq = sorted(set(pts))
    if len(uniq) == 1:
        return LatticePolytope(n, (uniq[0],), (), 0, None)
    basis = _affine_basis_indices(uniq)
    d = len(basis)
    if d == n:
        if n == 1:
            verts, facets, tri = _hull_1d(uniq)
        else:
            verts, facets, tri = _hull_full_dim(uniq, n)
        return LatticePolytope(n, tuple(sorted(verts)), tuple(sorted(facets)), d, tri)
    # Lower-dimensional: find extreme points through an affine chart.
    p0 = uniq[0]
    diffs = tuple(_sub(v, p0) for v in uniq[1:])
    cols = tuple(zip(*diffs))
    _, u = intlin.row_hnf_with_transform(cols)
    uinv = intlin.unimodular_inverse(u)
    proj = [tuple(intlin.mat_vec(u, _sub(v, p0))[:d]) for v in uniq]
    inner = hull(proj)
    verts = []
    for y in inner.vertices:
        full = tuple(y) + (0,) * (n - d)
        verts.append(_add(intlin.mat_vec(uinv, full), p0))
    return LatticePolytope(n, tuple(sorted(verts)), (), d, None)


def dim(p: LatticePolytope) -> int:
    return p.dim


def lattice_points(p: LatticePolytope) -> list[Point]:
    """All lattice points of p (box scan filtered by facets; chart recursion otherwise)."""
    if p._lattice_points is not None:
        return p._lattice_points
    if p.dim == 0:
        pts = [p.vertices[0]]
    elif p.is_full_dimensional():
        lo, hi = p.bounding_box()
        facets = p.facets
        pts = []
        for cand in itertools.product(*(range(a, b + 1) for a, b in zip(lo, hi))):
            if all(_dot(n, cand) <= b for n, b in facets):
                pts.append(cand)
    else:
        emb = _embedding(p)
        pts = sorted(emb.lift(y) for y in lattice_points(emb.image))
    p._lattice_points = pts
    return pts


def interior_lattice_points(p: LatticePolytope) -> list[Point]:
    """Lattice points strictly inside every facet; empty for lower-dimensional p."""
    if p._interior_points is not None:
        return p._interior_points
    if not p.is_full_dimensional():
        p._interior_points = []
        return p._interior_points
    lo, hi = p.bounding_box()
    facets = p.facets
    pts = []
    for cand in itertools.product(*(range(a + 1, b) for a, b in zip(lo, hi))):
        if all(_dot(n, cand) < b for n, b in facets):
            pts.append(cand)
    p._interior_points = pts
    return pts


def has_interior_lattice_point(p: LatticePolytope) -> bool:
    if p._interior_points is not None:
        return bool(p._interior_points)
    if not p.is_full_dimensional():
        return False
    lo, hi = p.bounding_box()
    facets = p.facets
    for cand in itertools.product(*(range(a + 1, b) for a, b in zip(lo, hi))):
        if all(_dot(n, cand) < b for n, b in facets):
            return True
    return False


def is_hollow(p: LatticePolytope) -> bool:
    return not has_interior_lattice_point(p)


def normalized_volume(p: LatticePolytope) -> int:
    """n! times the Euclidean volume; 0 for lower-dimensional p."""
    if p._volume is not None:
        return p._volume
    if not p.is_full_dimensional() or p.dim == 0:
        p._volume = 0 if p.ambient_dim > 0 else 1
        return p._volume
    d = p.ambient_dim
    if d == 1:
        vol = p.vertices[-1][0] - p.vertices[0][0]
    else:
        v0 = p.vertices[0]
        vol = 0
        for corners, _normal in p._tri:
            mat = tuple(_sub(c, v0) for c in corners)
            vol += abs(intlin.det(mat))
    p._volume = vol
    return vol


@lru_cache(maxsize=65536)
def minkowski_sum(p: LatticePolytope, q: LatticePolytope) -> LatticePolytope:
    if p.ambient_dim != q.ambient_dim:
        raise DimensionMismatch(
            f"ambient dimensions differ: {p.ambient_dim} vs {q.ambient_dim}"
        )
    return hull([_add(a, b) for a in p.vertices for b in q.vertices])


def minkowski_sum_many(polys) -> LatticePolytope:
    polys = list(polys)
    acc = polys[0]
    for q in polys[1:]:
        acc = minkowski_sum(acc, q)
    return acc


def dilate(p: LatticePolytope, k: int) -> LatticePolytope:
    if k < 0:
        raise ValueError("dilation factor must be nonnegative")
    if k == 0:
        return hull([(0,) * p.ambient_dim])
    return hull([tuple(k * x for x in v) for v in p.vertices])


def edges(p: LatticePolytope) -> list[tuple[Point, Point]]:
    """Vertex pairs spanning 1-faces (full-dimensional polytopes only)."""
    if p._edges is not None:
        return p._edges
    p.require_full_dimensional()
    if p.dim == 1:
        p._edges = [(p.vertices[0], p.vertices[1])]
        return p._edges
    active = {
        v: [n for n, b in p.facets if _dot(n, v) == b] for v in p.vertices
    }
    facet_of = {n: b for n, b in p.facets}
    out = []
    d = p.ambient_dim
    for u, v in itertools.combinations(p.vertices, 2):
        common = [n for n in active[u] if _dot(n, v) == facet_of[n]]
        if len(common) >= d - 1 and _rank(common) == d - 1:
            out.append((u, v))
    p._edges = out
    return out


def edge_directions(p: LatticePolytope) -> list[Point]:
    """Primitive edge directions up to sign (canonical: first nonzero coordinate > 0)."""
    dirs = set()
    for u, v in edges(p):
        d = intlin.primitive_part(_sub(v, u))
        dirs.add(canonical_sign(d))
    return sorted(dirs)


def canonical_sign(v) -> Point:
    """Flips v so that its first nonzero coordinate is positive."""
    for x in v:
        if x != 0:
            return tuple(v) if x > 0 else tuple(-y for y in v)
    raise ZeroVector("zero vector has no canonical sign")


def lattice_width(p: LatticePolytope) -> tuple[int, Point]:
    """Exact lattice width with a witnessing primitive functional.

    Any functional w of range r satisfies |w . (q - q')| <= r for all points
    q, q' of p, so solving w . d_i = eps_i on a fixed independent triple of
    vertex differences with eps in [-k, k]^dim enumerates every candidate of
    range <= k. The smallest k admitting a verified witness is the width.
    """
    p.require_full_dimensional()
    if p._width is not None:
        return p._width
    d = p.ambient_dim
    verts = p.vertices
    basis_idx = _affine_basis_indices(list(verts))
    mat = tuple(_sub(verts[i], verts[0]) for i in basis_idx)  # rows d_i
    det_m = intlin.det(mat)
    adj = _adjugate(mat)
    lo, hi = p.bounding_box()
    upper = min(h - l for l, h in zip(lo, hi))  # width of a coordinate functional

    for k in range(1, upper + 1):
        best = None
        for eps in itertools.product(range(-k, k + 1), repeat=d):
            if all(e == 0 for e in eps):
                continue
            # Solve mat @ w = eps, i.e. w = mat^{-1} eps = adj.eps / det.
            num = intlin.mat_vec(adj, eps)
            if any(x % det_m for x in num):
                continue
            w = tuple(x // det_m for x in num)
            vals = [_dot(w, v) for v in verts]
            r = max(vals) - min(vals)
            if r <= k and (best is None or (r, w) < best):
                best = (r, canonical_sign(intlin.primitive_part(w)))
        if best is not None:
            p._width = best
            return best
    p._width = (upper, canonical_sign((1,) + (0,) * (d - 1)))
    return p._width


def _adjugate(m) -> tuple:
    n = len(m)
    if n == 1:
        return ((1,),)
    adj = []
    for i in range(n):
        row = []
        for j in range(n):
            minor = tuple(
                tuple(m[r][c] for c in range(n) if c != i)
                for r in range(n)
                if r != j
            )
            cof = intlin.det(minor)
            row.append(cof if (i + j) % 2 == 0 else -cof)
        adj.append(tuple(row))
    return tuple(adj)


def lattice_pyramid(q: LatticePolytope) -> LatticePolytope:
    """conv(q x {0} union {e_{n+1}}) in one higher ambient dimension."""
    pts = [v + (0,) for v in q.vertices]
    pts.append((0,) * q.ambient_dim + (1,))
    return hull(pts)


def iterated_pyramid(q: LatticePolytope, times: int) -> LatticePolytope:
    for _ in range(times):
        q = lattice_pyramid(q)
    return q


class PolytopeTuple:
    """Ordered tuple of lattice polytopes in a common ambient lattice."""

    __slots__ = ("polytopes",)

    def __init__(self, polytopes):
        polys = tuple(polytopes)
        if not polys:
            raise EmptyTuple("tuple of polytopes must be nonempty")
        n = polys[0].ambient_dim
        if any(q.ambient_dim != n for q in polys):
            raise DimensionMismatch("tuple members have differing ambient dimensions")
        self.polytopes = polys

    def __iter__(self):
        return iter(self.polytopes)

    def __len__(self):
        return len(self.polytopes)

    def __getitem__(self, i):
        return self.polytopes[i]

    def __eq__(self, other):
        return isinstance(other, PolytopeTuple) and self.polytopes == other.polytopes

    def __hash__(self):
        return hash(self.polytopes)

    def __repr__(self):
        return f"PolytopeTuple(k={len(self.polytopes)}, ambient={self.ambient_dim})"

    @property
    def ambient_dim(self):
        return self.polytopes[0].ambient_dim


def cayley_sum(tup: PolytopeTuple) -> LatticePolytope:
    """conv((P1 x {0}) u (P2 x {e1}) u ... u (Pk x {e_{k-1}})) in R^{n+k-1}."""
    polys = tup.polytopes if isinstance(tup, PolytopeTuple) else tuple(tup)
    if not polys:
        raise EmptyTuple("Cayley sum of an empty tuple")
    k = len(polys)
    pts = []
    for i, p in enumerate(polys):
        tail = tuple(1 if j == i - 1 else 0 for j in range(k - 1))
        for v in p.vertices:
            pts.append(v + tail)
    return hull(pts)


def degree(p: LatticePolytope) -> int:
    """n when p has an interior point, else the smallest d with (n-d)P hollow."""
    p.require_full_dimensional()
    n = p.ambient_dim
    if has_interior_lattice_point(p):
        return n
    for d in range(n):
        if is_hollow(dilate(p, n - d)):
            return d
    return n  # unreachable: (n - (n-1))P = P is hollow here


def is_lawrence_prism(p: LatticePolytope):
    """Heights witness if p is a Cayley sum of n segments over Delta_{n-1}, else None."""
    p.require_full_dimensional()
    from . import proj  # local import: proj depends on this module

    projections = proj.projections_onto_unimodular_simplex(p)
    if not projections:
        return None
    ph = projections[0]
    image_pts = {}
    for v in p.vertices:
        image_pts.setdefault(ph.project_point(v), []).append(v)
    heights = []
    d = ph.kernel_direction
    # Fiber parameter: any functional with value 1 on the kernel direction.
    basis, u = intlin.basis_with_transform(d)
    w = u[0]
    for img, fiber in image_pts.items():
        vals = [_dot(w, x) for x in fiber]
        heights.append(max(vals) - min(vals))
    return tuple(sorted(heights, reverse=True))


def standard_simplex(n: int) -> LatticePolytope:
    pts = [(0,) * n] + [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    return hull(pts)


def unit_cube(n: int) -> LatticePolytope:
    return hull(list(itertools.product((0, 1), repeat=n)))


def exceptional_simplex(n: int) -> LatticePolytope:
    """(n-2)-fold lattice pyramid over 2*Delta_2."""
    if n < 2:
        raise ValueError("defined for dimension >= 2")
    base = dilate(standard_simplex(2), 2)
    return iterated_pyramid(base, n - 2)


def is_exceptional_simplex(p: LatticePolytope) -> bool:
    p.require_full_dimensional()
    n = p.ambient_dim
    if n < 2 or len(p.vertices) != n + 1:
        return False
    from . import equiv  # local import: equiv depends on this module

    return equiv.normal_form(p) == equiv.normal_form(exceptional_simplex(n))
