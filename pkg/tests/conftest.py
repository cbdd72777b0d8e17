import itertools
import random

import pytest

from mdeg import equiv, intlin, polytope


@pytest.fixture
def rng():
    return random.Random(20240811)


def random_unimodular(rng, n=3, steps=12):
    m = [list(r) for r in intlin.identity_matrix(n)]
    for _ in range(steps):
        i, j = rng.sample(range(n), 2)
        c = rng.randint(-2, 2)
        if rng.random() < 0.7:
            for k in range(n):
                m[i][k] += c * m[j][k]
        else:
            m[i], m[j] = m[j], m[i]
    return tuple(tuple(r) for r in m)


def random_affine_map(rng, n=3, tr=5):
    lin = random_unimodular(rng, n)
    return equiv.AffineUnimodularMap(lin, tuple(rng.randint(-tr, tr) for _ in range(n)))


def random_full_dim_polytope(rng, n=3, coord=3, npts=(4, 8)):
    while True:
        pts = [
            tuple(rng.randint(-coord, coord) for _ in range(n))
            for _ in range(rng.randint(*npts))
        ]
        p = polytope.hull(pts)
        if p.dim == n:
            return p


def random_subpolytope_of(rng, container, npts=(4, 8)):
    """Random full-dimensional subpolytope of a container polytope."""
    pts = polytope.lattice_points(container)
    n = container.ambient_dim
    while True:
        p = polytope.hull(rng.sample(pts, min(len(pts), rng.randint(*npts))))
        if p.dim == n:
            return p


def brute_force_equivalent(p, q):
    """Orbit oracle: search all affine maps defined by vertex images."""
    if len(p.vertices) != len(q.vertices):
        return False
    vp = list(p.vertices)
    base_ids = [0] + polytope._affine_basis_indices(vp)
    bp = [vp[i] for i in base_ids]
    for imgs in itertools.permutations(q.vertices, len(bp)):
        a_cols = tuple(zip(*[polytope._sub(b, bp[0]) for b in bp[1:]]))
        b_cols = tuple(zip(*[polytope._sub(im, imgs[0]) for im in imgs[1:]]))
        d = intlin.det(a_cols)
        if d == 0:
            continue
        adj = polytope._adjugate(a_cols)
        num = intlin.mat_mul(b_cols, adj)
        if any(x % d for row in num for x in row):
            continue
        lin = tuple(tuple(x // d for x in row) for row in num)
        if intlin.det(lin) not in (1, -1):
            continue
        t = polytope._sub(imgs[0], intlin.mat_vec(lin, bp[0]))
        if equiv.AffineUnimodularMap(lin, t).apply(p) == q:
            return True
    return False


def example_family_triple(k):
    """The 1-parameter family of mixed-degree-one triples (members are square pyramids)."""
    p1 = polytope.hull([(1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 2, 0), (0, k, 1)])
    p2 = polytope.hull([(1, 0, 0), (0, 1, 0), (1, 1, 0), (2, 0, 0), (k, 0, 1)])
    p3 = polytope.hull([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1)])
    return polytope.PolytopeTuple((p1, p2, p3))


def trivial_prism_triple():
    """Lawrence prisms over the unimodular triangle; all project onto it."""
    p1 = polytope.hull([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 3), (1, 0, 3), (0, 1, 3)])
    p2 = polytope.hull([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 2), (1, 0, 1)])
    p3 = polytope.hull([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 3)])
    return polytope.PolytopeTuple((p1, p2, p3))


def sqp():
    return polytope.lattice_pyramid(polytope.unit_cube(2))
