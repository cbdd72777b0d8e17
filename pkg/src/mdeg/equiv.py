"""Canonical forms and equivalence under affine lattice-preserving maps.

The normal form is a vertex-facet pairing-matrix canonicalization: vertex
orderings compatible with the canonical coloring of the pairing matrix are
enumerated by individualization-refinement, each ordering yields the row
HNF of the matrix of vertex differences, and the lexicographic minimum is
a complete invariant. Equal normal forms always come with an explicit
witnessing map, and the achieving orderings give the full affine
automorphism group as a byproduct.
"""

from __future__ import annotations

import hashlib
from functools import lru_cache

from . import intlin, polytope
from .errors import DimensionMismatch, LengthMismatch
from .polytope import LatticePolytope, PolytopeTuple


class AffineUnimodularMap:
    """x -> linear @ x + translation with |det linear| = 1 (checked)."""

    __slots__ = ("linear", "translation")

    def __init__(self, linear, translation):
        self.linear = tuple(tuple(row) for row in linear)
        self.translation = tuple(translation)
        if intlin.det(self.linear) not in (1, -1):
            raise ValueError("linear part is not unimodular")

    def __call__(self, x):
        return tuple(
            sum(a * b for a, b in zip(row, x)) + t
            for row, t in zip(self.linear, self.translation)
        )

    def apply(self, p: LatticePolytope) -> LatticePolytope:
        return polytope.hull([self(v) for v in p.vertices])

    def compose(self, other: "AffineUnimodularMap") -> "AffineUnimodularMap":
        """self after other: x -> self(other(x))."""
        lin = intlin.mat_mul(self.linear, other.linear)
        tr = self(other.translation)
        return AffineUnimodularMap(lin, tr)

    def inverse(self) -> "AffineUnimodularMap":
        inv = intlin.unimodular_inverse(self.linear)
        tr = tuple(-x for x in intlin.mat_vec(inv, self.translation))
        return AffineUnimodularMap(inv, tr)

    def key(self):
        return (self.linear, self.translation)

    def __eq__(self, other):
        return isinstance(other, AffineUnimodularMap) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"AffineUnimodularMap(linear={self.linear}, translation={self.translation})"

    @staticmethod
    def identity(n: int) -> "AffineUnimodularMap":
        return AffineUnimodularMap(intlin.identity_matrix(n), (0,) * n)

    @staticmethod
    def translation_by(t) -> "AffineUnimodularMap":
        return AffineUnimodularMap(intlin.identity_matrix(len(t)), t)


class NormalForm:
    """Canonical vertex-difference matrix plus its digest."""

    __slots__ = ("canonical_vertex_matrix", "digest")

    def __init__(self, matrix):
        self.canonical_vertex_matrix = matrix
        h = hashlib.sha256()
        rows = len(matrix)
        cols = len(matrix[0]) if rows else 0
        h.update(f"{rows}x{cols}:".encode())
        h.update(";".join(",".join(str(x) for x in row) for row in matrix).encode())
        self.digest = h.hexdigest()

    def __eq__(self, other):
        return (
            isinstance(other, NormalForm)
            and self.canonical_vertex_matrix == other.canonical_vertex_matrix
        )

    def __hash__(self):
        return hash(self.canonical_vertex_matrix)

    def __repr__(self):
        return f"NormalForm({self.digest[:12]})"


def _pairing_matrix(p: LatticePolytope):
    verts = p.vertices
    return [
        tuple(b - sum(a * x for a, x in zip(n, v)) for v in verts)
        for n, b in p.facets
    ]


def _refine(pm, col_colors, nrows, ncols):
    """Iterate color refinement on rows and columns until stable."""
    row_colors = [0] * nrows
    while True:
        row_sigs = [
            (row_colors[i], tuple(sorted(zip(col_colors, pm[i]))))
            for i in range(nrows)
        ]
        order = {s: k for k, s in enumerate(sorted(set(row_sigs)))}
        new_rows = [order[s] for s in row_sigs]
        col_sigs = [
            (col_colors[j], tuple(sorted((new_rows[i], pm[i][j]) for i in range(nrows))))
            for j in range(ncols)
        ]
        corder = {s: k for k, s in enumerate(sorted(set(col_sigs)))}
        new_cols = [corder[s] for s in col_sigs]
        if new_cols == col_colors and new_rows == row_colors:
            return col_colors
        col_colors, row_colors = new_cols, new_rows


def _admissible_orderings(p: LatticePolytope):
    """All vertex orderings compatible with the canonical pairing coloring."""
    pm = _pairing_matrix(p)
    nrows = len(pm)
    ncols = len(p.vertices)
    out = []

    def recurse(col_colors):
        col_colors = _refine(pm, col_colors, nrows, ncols)
        cells: dict[int, list[int]] = {}
        for j, c in enumerate(col_colors):
            cells.setdefault(c, []).append(j)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = c
                break
        if target is None:
            order = sorted(range(ncols), key=lambda j: col_colors[j])
            out.append(order)
            return
        for j in cells[target]:
            branched = list(col_colors)
            branched[j] = -1
            recurse(branched)

    recurse([0] * ncols)
    return out


class _CanonicalData:
    __slots__ = ("normal_form", "maps")

    def __init__(self, normal_form, maps):
        self.normal_form = normal_form
        self.maps = maps  # achieving maps x -> U (x - v0), as (U, v0) pairs


@lru_cache(maxsize=262144)
def _canonical_data(p: LatticePolytope) -> _CanonicalData:
    p.require_full_dimensional()
    verts = p.vertices
    best = None
    maps = []
    for order in _admissible_orderings(p):
        v0 = verts[order[0]]
        cols = [tuple(a - b for a, b in zip(verts[j], v0)) for j in order[1:]]
        mat = tuple(zip(*cols))  # n x (v-1), row-major
        h, u = intlin.row_hnf_with_transform(mat)
        if best is None or h < best:
            best = h
            maps = [(u, v0)]
        elif h == best:
            maps.append((u, v0))
    return _CanonicalData(NormalForm(best), maps)


def normal_form(p: LatticePolytope) -> NormalForm:
    """Complete invariant under affine unimodular maps and vertex relabeling."""
    return _canonical_data(p).normal_form


def canonical_map(p: LatticePolytope) -> AffineUnimodularMap:
    """One affine map carrying p to its canonical position."""
    u, v0 = _canonical_data(p).maps[0]
    tr = tuple(-x for x in intlin.mat_vec(u, v0))
    return AffineUnimodularMap(u, tr)


def are_equivalent(p: LatticePolytope, q: LatticePolytope):
    """A witnessing map with map(p) = q, or None."""
    if p.ambient_dim != q.ambient_dim:
        raise DimensionMismatch("polytopes in different ambient dimensions")
    p.require_full_dimensional()
    q.require_full_dimensional()
    if len(p.vertices) != len(q.vertices):
        return None
    dp = _canonical_data(p)
    dq = _canonical_data(q)
    if dp.normal_form != dq.normal_form:
        return None
    witness = canonical_map(q).inverse().compose(canonical_map(p))
    assert witness.apply(p) == q, "normal-form witness failed verification"
    return witness


@lru_cache(maxsize=65536)
def affine_automorphisms(p: LatticePolytope) -> list[AffineUnimodularMap]:
    """The full finite group of affine lattice-preserving self-maps of p."""
    data = _canonical_data(p)
    m0 = canonical_map(p)
    m0_inv = m0.inverse()
    group = set()
    for u, v0 in data.maps:
        tr = tuple(-x for x in intlin.mat_vec(u, v0))
        g = m0_inv.compose(AffineUnimodularMap(u, tr))
        group.add(g)
    result = sorted(group, key=lambda g: g.key())
    for g in result:
        assert g.apply(p) == p, "automorphism failed verification"
    return result


def translation_class(p: LatticePolytope):
    """Vertex set normalized so the lexicographically smallest vertex is 0."""
    v0 = p.vertices[0]
    return tuple(tuple(a - b for a, b in zip(v, v0)) for v in p.vertices)


def tuple_cayley_normal_form(tup: PolytopeTuple) -> NormalForm:
    return normal_form(polytope.cayley_sum(tup))


def tuple_digest(tup: PolytopeTuple) -> str:
    return tuple_cayley_normal_form(tup).digest


def tuple_equivalent(a: PolytopeTuple, b: PolytopeTuple) -> bool:
    """Equivalence of tuples up to one map, member translations and permutation.

    When the first tuple admits no common lattice projection onto translates
    of the standard simplex of dimension k-1, equivalence is decided by
    comparing Cayley-sum normal forms; otherwise a direct witness search runs
    over permutations, equivalences of the first member and translation
    classes of the rest.
    """
    from . import proj  # local import; proj depends on equiv

    a = a if isinstance(a, PolytopeTuple) else PolytopeTuple(a)
    b = b if isinstance(b, PolytopeTuple) else PolytopeTuple(b)
    if len(a) != len(b):
        raise LengthMismatch(f"tuple lengths differ: {len(a)} vs {len(b)}")
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatch("tuples in different ambient dimensions")
    for p in list(a) + list(b):
        p.require_full_dimensional()

    if proj.common_projection(a, up_to_translates=True) is None:
        return tuple_digest(a) == tuple_digest(b)

    import itertools

    k = len(a)
    auts = None
    for perm in itertools.permutations(range(k)):
        w0 = are_equivalent(a[0], b[perm[0]])
        if w0 is None:
            continue
        if auts is None:
            auts = affine_automorphisms(a[0])
        for g in auts:
            w = w0.compose(g)
            if all(
                translation_class(w.apply(a[i])) == translation_class(b[perm[i]])
                for i in range(1, k)
            ):
                return True
    return False
