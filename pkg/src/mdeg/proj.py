"""Lattice projections onto unimodular simplices and infinite prisms.

A projection along a primitive direction d is the coordinate map given by
the last n-1 rows of the inverse of the canonical basis completion of d;
two projections are the same object exactly when their kernel lines agree
(kernel directions are normalized so the first nonzero coordinate is
positive). Candidate directions for simplex projections are edge
directions: a projection of a full-dimensional polytope onto a unimodular
simplex is always along an edge joining two distinct unimodular facets.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from . import equiv, intlin, polytope
from .errors import (
    DimensionMismatch,
    NonPrimitiveVector,
    ParallelDirections,
    ZeroVector,
)
from .polytope import LatticePolytope, PolytopeTuple, canonical_sign


class Projection:
    """Lattice projection R^n -> R^{n-1} with kernel R * kernel_direction."""

    __slots__ = ("kernel_direction", "coordinate_map")

    def __init__(self, kernel_direction):
        d = tuple(kernel_direction)
        if not intlin.is_primitive(d):
            raise NonPrimitiveVector(f"direction {d} is not primitive")
        d = canonical_sign(d)
        self.kernel_direction = d
        _, u = intlin.basis_with_transform(d)
        self.coordinate_map = u[1:]

    def project_point(self, x):
        return intlin.mat_vec(self.coordinate_map, x)

    def project(self, p: LatticePolytope) -> LatticePolytope:
        return polytope.hull([self.project_point(v) for v in p.vertices])

    def __eq__(self, other):
        return (
            isinstance(other, Projection)
            and self.kernel_direction == other.kernel_direction
        )

    def __hash__(self):
        return hash(self.kernel_direction)

    def __lt__(self, other):
        return self.kernel_direction < other.kernel_direction

    def __repr__(self):
        return f"Projection(kernel={self.kernel_direction})"


@lru_cache(maxsize=65536)
def _projection(d) -> Projection:
    return Projection(d)


def projection_along(d) -> Projection:
    return _projection(canonical_sign(intlin.primitive_part(d)))


def project_along(p: LatticePolytope, d) -> LatticePolytope:
    """Image of p under the canonical coordinate map with kernel R*d."""
    d = tuple(d)
    if all(x == 0 for x in d):
        raise ZeroVector("projection direction must be nonzero")
    if not intlin.is_primitive(d):
        raise NonPrimitiveVector(f"direction {d} is not primitive")
    return _projection(canonical_sign(d)).project(p)


def _is_unimodular_simplex(p: LatticePolytope) -> bool:
    return (
        p.is_full_dimensional()
        and len(p.vertices) == p.ambient_dim + 1
        and polytope.normalized_volume(p) == 1
    )


@lru_cache(maxsize=65536)
def projections_onto_unimodular_simplex(p: LatticePolytope) -> list[Projection]:
    """All projections with image a unimodular (n-1)-simplex, up to sign."""
    p.require_full_dimensional()
    out = []
    for d in polytope.edge_directions(p):
        ph = _projection(d)
        if _is_unimodular_simplex(ph.project(p)):
            out.append(ph)
    return sorted(out)


def common_projection(tup, up_to_translates: bool):
    """A projection carrying every member onto one unimodular simplex, or None.

    With up_to_translates the images may differ by individual translations;
    otherwise they must coincide exactly (equal image polytopes, so that a
    single unimodular change of target coordinates sends them all to the
    standard simplex).
    """
    tup = tup if isinstance(tup, PolytopeTuple) else PolytopeTuple(tup)
    n = tup.ambient_dim
    for p in tup:
        if p.ambient_dim != n:
            raise DimensionMismatch("tuple members in different ambient dimensions")
        p.require_full_dimensional()
    candidate_sets = [
        {ph.kernel_direction for ph in projections_onto_unimodular_simplex(p)}
        for p in tup
    ]
    common = set.intersection(*candidate_sets)
    for d in sorted(common):
        ph = _projection(d)
        images = [ph.project(p) for p in tup]
        if up_to_translates:
            classes = {equiv.translation_class(img) for img in images}
            if len(classes) == 1:
                return ph
        else:
            if len(set(images)) == 1:
                return ph
    return None


class InfinitePrism:
    """S + R*direction for an (n-1)-dimensional section S of R^n.

    Membership is tested through the projection along the axis: a point is
    in the prism iff its image lies in the projected base.
    """

    __slots__ = ("base", "direction", "projection", "image")

    def __init__(self, base: LatticePolytope, direction):
        self.base = base
        self.direction = canonical_sign(intlin.primitive_part(direction))
        self.projection = _projection(self.direction)
        self.image = self.projection.project(base)
        if not self.image.is_full_dimensional():
            raise ValueError("prism base projects to a lower-dimensional image")

    def shifted(self, t) -> "InfinitePrism":
        return InfinitePrism(self.base.translate(t), self.direction)

    def contains_point(self, x) -> bool:
        return self.image.contains_point(self.projection.project_point(x))

    def __repr__(self):
        return f"InfinitePrism(direction={self.direction}, base_nverts={len(self.base.vertices)})"


def prism_intersection(c1: InfinitePrism, c2: InfinitePrism, shift) -> LatticePolytope | None:
    """conv of the lattice points of c1 n (c2 + shift); None when empty."""
    n = len(c1.direction)
    if _parallel(c1.direction, c2.direction):
        raise ParallelDirections(
            f"directions {c1.direction} and {c2.direction} are parallel"
        )
    shift = tuple(shift)
    c2s = c2.shifted(shift)
    box = _intersection_box(c1, c2s)
    if box is None:
        return None
    pts = []
    for cand in itertools.product(*(range(lo, hi + 1) for lo, hi in box)):
        if c1.contains_point(cand) and c2s.contains_point(cand):
            pts.append(cand)
    if not pts:
        return None
    return polytope.hull(pts)


def _parallel(d1, d2) -> bool:
    return all(
        d1[i] * d2[j] - d1[j] * d2[i] == 0
        for i, j in itertools.combinations(range(len(d1)), 2)
    )


def _intersection_box(c1: InfinitePrism, c2: InfinitePrism):
    """Integer bounding box of the (bounded) intersection of two prisms."""
    n = len(c1.direction)
    rows = list(c1.projection.coordinate_map) + list(c2.projection.coordinate_map)
    ranges = []
    for prism in (c1, c2):
        img = prism.image
        lo, hi = img.bounding_box()
        ranges.extend(zip(lo, hi))

    # rows has rank n because the two kernel lines are independent.
    idx = _independent_rows(rows, n)
    sq = tuple(rows[i] for i in idx)
    box = []
    for coord in range(n):
        e = tuple(1 if j == coord else 0 for j in range(n))
        lam = intlin.solve_rational(tuple(zip(*sq)), e)
        if lam is None:
            return None
        lo = Fraction(0)
        hi = Fraction(0)
        for l, i in zip(lam, idx):
            a, b = ranges[i]
            if l >= 0:
                lo += l * a
                hi += l * b
            else:
                lo += l * b
                hi += l * a
        import math

        box.append((math.ceil(lo), math.floor(hi)))
        if box[-1][0] > box[-1][1]:
            return None
    return box


def _independent_rows(rows, target_rank):
    chosen = []
    acc = []
    for i, r in enumerate(rows):
        cand = acc + [r]
        if polytope._rank(cand) == len(cand):
            acc = cand
            chosen.append(i)
            if len(chosen) == target_rank:
                return chosen
    return chosen


def full_dim_intersection_translate(c1: InfinitePrism, c2: InfinitePrism, vertex_anchors):
    """First anchor shift making c1 n (c2 + shift) full-dimensional, if any."""
    n = len(c1.direction)
    for shift in vertex_anchors:
        p = prism_intersection(c1, c2, shift)
        if p is not None and p.dim == n:
            return tuple(shift), p
    return None
