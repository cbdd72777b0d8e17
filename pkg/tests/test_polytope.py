import itertools

import pytest

from mdeg import polytope as P
from mdeg.errors import DimensionMismatch, LowerDimensional
from .conftest import example_family_triple, random_full_dim_polytope, sqp


def brute_points_in_hull(p):
    """Independent membership test: rank-based, no facet data."""
    from fractions import Fraction

    verts = p.vertices
    lo, hi = p.bounding_box()
    out = []
    for cand in itertools.product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        if _in_hull(verts, cand):
            out.append(cand)
    return out


def _in_hull(verts, x):
    # exact LP via Fourier-Motzkin is overkill; use barycentric search over
    # simplices of a fan triangulation from verts[0]
    import itertools as it

    from fractions import Fraction

    from mdeg import intlin

    n = len(x)
    v0 = verts[0]
    for simplex in it.combinations(verts[1:], n):
        cols = tuple(zip(*[P._sub(s, v0) for s in simplex]))
        if intlin.det(cols) == 0:
            continue
        sol = intlin.solve_rational(cols, P._sub(x, v0))
        if sol is None:
            continue
        if all(c >= 0 for c in sol) and sum(sol) <= 1:
            return True
    return False


def test_hull_simplex():
    s = P.hull([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert len(s.vertices) == 4
    assert len(s.facets) == 4


def test_hull_removes_redundant():
    sq = P.hull([(0, 0), (1, 0), (0, 1), (1, 1), (1, 1)])
    assert len(sq.vertices) == 4


def test_hull_p2_square():
    p2 = P.iterated_pyramid(P.unit_cube(2), 2)
    assert len(p2.vertices) == 6
    # facet count cross-checked against a brute-force facet enumeration
    assert len(p2.facets) == brute_facet_count(p2)


def brute_facet_count(p):
    """All supporting hyperplanes spanned by dim-subsets of vertices."""
    from mdeg import intlin

    n = p.ambient_dim
    seen = set()
    for subset in itertools.combinations(p.vertices, n):
        normal = P._simplex_normal(list(subset))
        if normal is None:
            continue
        b = P._dot(normal, subset[0])
        vals = [P._dot(normal, v) for v in p.vertices]
        if all(v <= b for v in vals):
            g = intlin.gcd_vector(normal)
            seen.add((tuple(x // g for x in normal), b // g))
        elif all(v >= b for v in vals):
            g = intlin.gcd_vector(normal)
            seen.add((tuple(-x // g for x in normal), -b // g))
    return len(seen)


def test_hull_idempotent(rng):
    for _ in range(30):
        p = random_full_dim_polytope(rng)
        assert P.hull(p.vertices) == p


def test_dim():
    assert P.standard_simplex(3).dim == 3
    seg = P.hull([(0, 0, 0), (2, 2, 2)])
    assert seg.dim == 1
    cs = P.cayley_sum(P.PolytopeTuple([P.standard_simplex(3)] * 3))
    assert cs.dim == 5


def test_lattice_points_small():
    assert len(P.lattice_points(P.standard_simplex(2))) == 3
    assert len(P.lattice_points(P.dilate(P.standard_simplex(2), 2))) == 6
    assert len(P.lattice_points(P.unit_cube(3))) == 8


def test_lattice_points_vs_bruteforce(rng):
    for _ in range(40):
        p = random_full_dim_polytope(rng, coord=4)
        assert sorted(P.lattice_points(p)) == brute_points_in_hull(p)


def test_lattice_points_lower_dimensional():
    seg = P.hull([(0, 0, 0), (2, 2, 4)])
    pts = P.lattice_points(seg)
    assert pts == [(0, 0, 0), (1, 1, 2), (2, 2, 4)]


def test_interior_points():
    assert P.interior_lattice_points(P.standard_simplex(3)) == []
    assert P.interior_lattice_points(P.dilate(P.standard_simplex(2), 3)) == [(1, 1)]
    assert P.interior_lattice_points(P.dilate(P.standard_simplex(2), 2)) == []


def test_is_hollow():
    assert P.is_hollow(P.standard_simplex(3))
    two_cubes = P.minkowski_sum(P.unit_cube(3), P.unit_cube(3))
    assert not P.is_hollow(two_cubes)
    prism = P.hull(
        [(0, 0, 0), (2, 0, 0), (0, 2, 0), (0, 0, 1), (2, 0, 1), (0, 2, 1)]
    )
    assert P.is_hollow(prism)


def test_normalized_volume():
    assert P.normalized_volume(P.standard_simplex(3)) == 1
    assert P.normalized_volume(P.unit_cube(3)) == 6
    p = P.lattice_pyramid(P.dilate(P.standard_simplex(2), 2))
    assert P.normalized_volume(p) == 4


def test_minkowski_examples():
    p = P.standard_simplex(3)
    t = P.hull([(5, -1, 2)])
    assert P.minkowski_sum(p, t) == p.translate((5, -1, 2))
    a = P.hull([(0,), (1,)])
    assert P.minkowski_sum(a, a) == P.hull([(0,), (2,)])
    d2 = P.standard_simplex(2)
    assert P.minkowski_sum(d2, d2) == P.dilate(d2, 2)
    with pytest.raises(DimensionMismatch):
        P.minkowski_sum(d2, p)


def test_minkowski_volume_identity(rng):
    for _ in range(25):
        p = random_full_dim_polytope(rng)
        s = P.minkowski_sum(p, p)
        assert P.normalized_volume(s) == 8 * P.normalized_volume(p)


def test_dilate():
    d2 = P.standard_simplex(2)
    assert P.dilate(d2, 2) == P.hull([(0, 0), (2, 0), (0, 2)])
    assert P.dilate(d2, 1) == d2
    assert P.dilate(d2, 0) == P.hull([(0, 0)])
    assert len(P.interior_lattice_points(P.dilate(P.standard_simplex(3), 3))) == 1


def test_lattice_width():
    assert P.lattice_width(P.standard_simplex(3))[0] == 1
    assert P.lattice_width(P.dilate(P.standard_simplex(2), 2))[0] == 2
    assert P.lattice_width(sqp())[0] == 1
    with pytest.raises(LowerDimensional):
        P.lattice_width(P.hull([(0, 0, 0), (1, 0, 0)]))


def test_lattice_width_vs_bruteforce(rng):
    for _ in range(25):
        p = random_full_dim_polytope(rng, coord=3)
        w, direction = P.lattice_width(p)
        vals = [P._dot(direction, v) for v in p.vertices]
        assert max(vals) - min(vals) == w
        best = min(
            max(P._dot(f, v) for v in p.vertices) - min(P._dot(f, v) for v in p.vertices)
            for f in itertools.product(range(-5, 6), repeat=3)
            if any(f)
        )
        assert w == best


def test_lattice_pyramid():
    assert P.lattice_pyramid(P.standard_simplex(2)) == P.standard_simplex(3)
    assert P.lattice_pyramid(P.unit_cube(2)) == P.hull(
        [(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1)]
    )
    p2 = P.iterated_pyramid(P.dilate(P.standard_simplex(2), 2), 2)
    assert P.is_exceptional_simplex(p2)


def test_cayley_sum():
    d2 = P.standard_simplex(2)
    cs = P.cayley_sum(P.PolytopeTuple([d2, d2]))
    assert cs.dim == 3
    assert len(cs.vertices) == 6  # prism over the triangle
    # Cayley sum of n segments fills dimension n
    segs = [P.hull([(0,), (2,)]), P.hull([(0,), (1,)]), P.hull([(0,), (0,)])]
    # embed in Z^1 tuples: use 1-dimensional ambient
    cs2 = P.cayley_sum(P.PolytopeTuple(segs[:2]))
    assert cs2.dim == 2
    fam = example_family_triple(1)
    cs3 = P.cayley_sum(fam)
    assert cs3.dim == 5
    assert len(cs3.vertices) == 15


def test_cayley_dim_formula(rng):
    for _ in range(15):
        k = rng.randint(2, 3)
        tup = P.PolytopeTuple([random_full_dim_polytope(rng, coord=2) for _ in range(k)])
        cs = P.cayley_sum(tup)
        s = P.minkowski_sum_many(list(tup))
        assert cs.dim == s.dim + k - 1


def test_degree():
    assert P.degree(P.standard_simplex(3)) == 0
    assert P.degree(P.lattice_pyramid(P.dilate(P.standard_simplex(2), 2))) == 1
    assert P.degree(P.dilate(P.standard_simplex(2), 3)) == 2


def test_degree_pyramid_preserved(rng):
    for _ in range(10):
        q = random_full_dim_polytope(rng, n=2, coord=2)
        assert P.degree(P.lattice_pyramid(q)) == P.degree(q)


def test_lawrence_prism():
    assert P.is_lawrence_prism(P.standard_simplex(3)) == (1, 0, 0)
    assert P.is_lawrence_prism(P.lattice_pyramid(P.dilate(P.standard_simplex(2), 2))) is None
    prism = P.hull([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 0, 1), (0, 1, 1)])
    assert P.is_lawrence_prism(prism) == (1, 1, 1)


def test_exceptional_simplex():
    assert P.is_exceptional_simplex(P.dilate(P.standard_simplex(2), 2))
    assert P.is_exceptional_simplex(P.lattice_pyramid(P.dilate(P.standard_simplex(2), 2)))
    assert not P.is_exceptional_simplex(P.unit_cube(3))


def test_degree_one_dichotomy(rng):
    """Full-dimensional 3-polytopes of degree <= 1 are Lawrence prisms or
    the exceptional simplex, never both."""
    from .conftest import random_subpolytope_of

    box = P.dilate(P.unit_cube(3), 3)
    seen = 0
    for _ in range(120):
        p = random_subpolytope_of(rng, box)
        if P.degree(p) > 1:
            continue
        seen += 1
        lawrence = P.is_lawrence_prism(p) is not None
        exceptional = P.is_exceptional_simplex(p)
        assert lawrence != exceptional
    assert seen >= 10
