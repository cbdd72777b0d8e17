"""Classification pipelines for triples of mixed degree one.

Every pipeline is deterministic: candidates are generated in sorted order,
deduplicated by the normal form of the Cayley sum of the tuple (valid
because every tuple kept by a pipeline admits no common lattice projection
onto translates of the standard triangle), and manifests are sorted by
digest before being returned or written.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from importlib import resources

from . import cache, decomp, equiv, intlin, mixed, polytope, proj
from .errors import (
    CounterexampleFound,
    CoverageGap,
    DependencyMissing,
    PreconditionViolation,
    SeedInvalid,
)
from .polytope import LatticePolytope, PolytopeTuple, _dot, _sub

SEED_VERSION = "aww11-v1"
MANIFEST_FORMAT = 1

EXPECTED_COUNTS = {
    "exceptional-pairs": 32,
    "two-exceptional": 29,
    "three-exceptional": 141,
    "one-exceptional": 82,
    "spanning": 27,
    "family-k0": 51,
    "family-k": 36,
}


@dataclass(frozen=True)
class HollowSeed:
    name: str
    polytope: LatticePolytope


@dataclass(frozen=True)
class ManifestClass:
    members: tuple[LatticePolytope, ...]
    digest: str


@dataclass
class ClassManifest:
    pipeline_id: str
    parameters: dict
    classes: list[ManifestClass]
    provenance: dict = field(default_factory=dict)

    @property
    def count(self) -> int:
        return len(self.classes)

    def digests(self) -> set[str]:
        return {c.digest for c in self.classes}

    def sort(self):
        self.classes.sort(key=lambda c: c.digest)
        return self

    def to_obj(self) -> dict:
        return {
            "format": MANIFEST_FORMAT,
            "pipeline_id": self.pipeline_id,
            "parameters": self.parameters,
            "count": self.count,
            "provenance": self.provenance,
            "classes": [
                {
                    "digest": c.digest,
                    "members": [[list(v) for v in p.vertices] for p in c.members],
                }
                for c in self.classes
            ],
        }

    @staticmethod
    def from_obj(obj: dict) -> "ClassManifest":
        classes = [
            ManifestClass(
                members=tuple(polytope.hull(vs) for vs in c["members"]),
                digest=c["digest"],
            )
            for c in obj["classes"]
        ]
        return ClassManifest(
            pipeline_id=obj["pipeline_id"],
            parameters=obj.get("parameters", {}),
            classes=classes,
            provenance=obj.get("provenance", {}),
        )


def _provenance(params: dict) -> dict:
    return {"seed_version": SEED_VERSION, "parameters": params}


# ---------------------------------------------------------------------------
# Seed data: the 12 maximal hollow 3-polytopes of width >= 2.
# ---------------------------------------------------------------------------


def _facet_has_relint_lattice_point(p: LatticePolytope, n, b) -> bool:
    others = [(m, c) for m, c in p.facets if (m, c) != (n, b)]
    lo, hi = p.bounding_box()
    for cand in itertools.product(*(range(a, t + 1) for a, t in zip(lo, hi))):
        if _dot(n, cand) != b:
            continue
        if all(_dot(m, cand) < c for m, c in others):
            return True
    return False


def is_maximal_hollow(p: LatticePolytope) -> bool:
    """Hollow and inclusion-maximal among lattice-free sets.

    A full-dimensional hollow polytope is maximal exactly when every facet
    carries a lattice point in its relative interior (pushing any facet
    out would swallow that point into the interior).
    """
    if p.dim != 3 or not polytope.is_hollow(p):
        return False
    return all(_facet_has_relint_lattice_point(p, n, b) for n, b in p.facets)


def load_seeds(path=None) -> list[HollowSeed]:
    """Bundled maximal hollow polytopes with full re-validation.

    Each record is checked to be a 3-dimensional hollow polytope of lattice
    width at least two that is maximal; the list must have exactly 12
    pairwise inequivalent members, so a transcription error fails fast.
    """
    if path is None:
        blob = resources.files("mdeg").joinpath("data/maximal_hollow_3d.json").read_text()
    else:
        with open(path) as fh:
            blob = fh.read()
    obj = json.loads(blob)
    if obj.get("format") != 1 or obj.get("version") != SEED_VERSION:
        raise SeedInvalid("unsupported seed data format or version")
    seeds = []
    digests = set()
    for rec in obj["seeds"]:
        p = polytope.hull(rec["vertices"])
        if p.dim != 3:
            raise SeedInvalid(f"{rec['name']}: not 3-dimensional")
        if not polytope.is_hollow(p):
            raise SeedInvalid(f"{rec['name']}: not hollow")
        if polytope.lattice_width(p)[0] < 2:
            raise SeedInvalid(f"{rec['name']}: width below 2")
        if not is_maximal_hollow(p):
            raise SeedInvalid(f"{rec['name']}: not maximal hollow")
        digests.add(equiv.normal_form(p).digest)
        seeds.append(HollowSeed(name=rec["name"], polytope=p))
    if len(seeds) != 12 or len(digests) != 12:
        raise SeedInvalid(f"expected 12 inequivalent seeds, got {len(seeds)} ({len(digests)} classes)")
    return seeds


# ---------------------------------------------------------------------------
# Subpolytope enumeration.
# ---------------------------------------------------------------------------


def enumerate_hollow_subpolytopes(seed: HollowSeed, min_width: int) -> list[LatticePolytope]:
    """Full-dimensional subpolytopes of the seed with width >= min_width, up to equivalence.

    Breadth-first vertex deletion: every proper subpolytope avoids some
    vertex, so deleting one vertex at a time reaches everything; states are
    deduplicated by normal form (subpolytope classes of a class member do
    not depend on the embedding) and pruned when the width drops, which is
    monotone under inclusion.
    """
    p = seed.polytope
    if p.dim != 3 or not polytope.is_hollow(p) or polytope.lattice_width(p)[0] < 2:
        raise SeedInvalid(f"{seed.name}: failed invariants")
    out = []
    seen = set()
    queue = [p]
    while queue:
        q = queue.pop()
        if q.dim != 3 or polytope.lattice_width(q)[0] < min_width:
            continue
        d = equiv.normal_form(q).digest
        if d in seen:
            continue
        seen.add(d)
        out.append(q)
        pts = set(polytope.lattice_points(q))
        for v in q.vertices:
            rest = sorted(pts - {v})
            if len(rest) >= 4:
                queue.append(polytope.hull(rest))
    out.sort(key=lambda q: equiv.normal_form(q).digest)
    return out


def full_dim_subhulls(points) -> list[LatticePolytope]:
    """Distinct full-dimensional hulls of subsets of the given lattice points."""
    pts = sorted(set(tuple(p) for p in points))
    n = len(pts[0])
    seen = {}
    if len(pts) <= 14:
        for r in range(n + 1, len(pts) + 1):
            for subset in itertools.combinations(pts, r):
                q = polytope.hull(subset)
                if q.dim == n:
                    seen.setdefault(q.vertices, q)
    else:
        queue = [polytope.hull(pts)]
        visited = set()
        while queue:
            q = queue.pop()
            if q.dim != n or q.vertices in visited:
                continue
            visited.add(q.vertices)
            seen.setdefault(q.vertices, q)
            qpts = set(polytope.lattice_points(q))
            for v in q.vertices:
                rest = sorted(qpts - {v})
                if len(rest) > n:
                    queue.append(polytope.hull(rest))
    return [seen[k] for k in sorted(seen)]


# ---------------------------------------------------------------------------
# Exceptionality.
# ---------------------------------------------------------------------------


def has_common_translate_projection(p: LatticePolytope, q: LatticePolytope) -> bool:
    return proj.common_projection(PolytopeTuple((p, q)), up_to_translates=True) is not None


def projects_onto_hollow_polygon(s: LatticePolytope) -> bool:
    """Sweep of primitive directions inside the difference box of s."""
    lo, hi = s.bounding_box()
    ranges = [h - l for l, h in zip(lo, hi)]
    dirs = set()
    for d in itertools.product(*(range(-r, r + 1) for r in ranges)):
        if all(x == 0 for x in d):
            continue
        if intlin.gcd_vector(d) != 1:
            continue
        dirs.add(polytope.canonical_sign(d))
    for d in sorted(dirs):
        image = proj.project_along(s, d)
        if image.is_full_dimensional() and polytope.is_hollow(image):
            return True
    return False


def is_exceptional_pair(p: LatticePolytope, q: LatticePolytope) -> bool:
    """No lattice projection maps p + q onto a hollow polygon.

    Requires both members 3-dimensional and the sum hollow. The direction
    sweep is bounded by the coordinate ranges of the sum; projections that
    are not parallel to the sum's geometry stretch the image, and hollow
    images need every image width to be at least the width of the sum.
    """
    if p.dim != 3 or q.dim != 3:
        raise PreconditionViolation("both members must be 3-dimensional")
    s = polytope.minkowski_sum(p, q)
    if not polytope.is_hollow(s):
        raise PreconditionViolation("the Minkowski sum of the pair must be hollow")
    return not projects_onto_hollow_polygon(s)


def _pair_nonexceptional_fast(p: LatticePolytope, q: LatticePolytope) -> bool:
    """Common translate-projection onto a unimodular triangle; equivalent to
    non-exceptionality for pairs with hollow sum."""
    return has_common_translate_projection(p, q)


# ---------------------------------------------------------------------------
# Pipelines.
# ---------------------------------------------------------------------------


def _pair_digest(a: LatticePolytope, b: LatticePolytope) -> str:
    return equiv.tuple_digest(PolytopeTuple((a, b)))


def exceptional_pairs(seeds=None, cache_dir=None, use_cache=True) -> ClassManifest:
    """The classes of exceptional pairs of 3-polytopes (expected count: 32).

    For every hollow width >= 2 subpolytope class of the 12 maximal hollow
    seeds, both summands of every full-dimensional Minkowski decomposition
    are tested for a common projection onto translates of the unimodular
    triangle; pairs with none are exceptional. Dedup is by the normal form
    of the Cayley sum of the pair.
    """
    params = {"pipeline": "exceptional-pairs", "seed_version": SEED_VERSION}
    if use_cache:
        cached = cache.load("exceptional-pairs", params, cache_dir)
        if cached is not None:
            return ClassManifest.from_obj(cached)
    if seeds is None:
        seeds = load_seeds()
    classes: dict[str, ManifestClass] = {}
    for seed in sorted(seeds, key=lambda s: s.name):
        for sub in enumerate_hollow_subpolytopes(seed, min_width=2):
            for pair in decomp.full_dim_summand_pairs(sub):
                if _pair_nonexceptional_fast(pair.a, pair.b):
                    continue
                digest = _pair_digest(pair.a, pair.b)
                if digest not in classes:
                    classes[digest] = ManifestClass(members=(pair.a, pair.b), digest=digest)
    manifest = ClassManifest(
        pipeline_id="exceptional-pairs",
        parameters=params,
        classes=list(classes.values()),
        provenance=_provenance(params),
    ).sort()
    _verify_exceptional_pairs(manifest)
    if use_cache:
        cache.store("exceptional-pairs", params, manifest.to_obj(), cache_dir)
    return manifest


def _verify_exceptional_pairs(manifest: ClassManifest):
    for c in manifest.classes:
        a, b = c.members
        s = polytope.minkowski_sum(a, b)
        if not polytope.is_hollow(s):
            raise CounterexampleFound(f"pair {c.digest}: sum not hollow")
        if has_common_translate_projection(a, b):
            raise CounterexampleFound(f"pair {c.digest}: common projection exists")
        if not is_exceptional_pair(a, b):
            raise CounterexampleFound(
                f"pair {c.digest}: hollow-image projection exists but no common "
                "triangle projection; phrasing equivalence violated"
            )


def _require(manifest, name):
    if manifest is None:
        raise DependencyMissing(f"pipeline requires the {name} manifest; run it first")
    return manifest


def triples_multi_exceptional(pairs_manifest=None, cache_dir=None, use_cache=True):
    """Triples of mixed degree one with two or three exceptional subpairs.

    Ordered exceptional pairs (A, B) and (C, D) with A equivalent to C are
    glued by every affine map carrying C to A; the candidate triple
    (A, B, map(D)) has mixed degree one iff B + map(D) is hollow, since the
    other pair sums are already hollow. Returns the manifests partitioned
    by the number of exceptional subpairs (2 resp. 3).
    """
    params = {"pipeline": "multi-exceptional", "seed_version": SEED_VERSION}
    if use_cache:
        cached = cache.load("multi-exceptional", params, cache_dir)
        if cached is not None:
            return (
                ClassManifest.from_obj(cached["two"]),
                ClassManifest.from_obj(cached["three"]),
            )
    pairs_manifest = _require(
        pairs_manifest if pairs_manifest is not None else exceptional_pairs(cache_dir=cache_dir),
        "exceptional-pairs",
    )
    ordered = []
    for c in pairs_manifest.classes:
        a, b = c.members
        ordered.append((a, b))
        if equiv.are_equivalent(a, b) is None:
            ordered.append((b, a))
    buckets: dict[str, list] = {}
    for a, b in ordered:
        buckets.setdefault(equiv.normal_form(a).digest, []).append((a, b))

    two: dict[str, ManifestClass] = {}
    three: dict[str, ManifestClass] = {}
    for digest in sorted(buckets):
        group = buckets[digest]
        for (a, b), (c, d) in itertools.product(group, repeat=2):
            phi = equiv.are_equivalent(c, a)
            assert phi is not None
            for psi in equiv.affine_automorphisms(c):
                d_img = phi.compose(psi).apply(d)
                if not polytope.is_hollow(polytope.minkowski_sum(b, d_img)):
                    continue
                tup = PolytopeTuple((a, b, d_img))
                key = equiv.tuple_digest(tup)
                if key in two or key in three:
                    continue
                third_exceptional = not _pair_nonexceptional_fast(b, d_img)
                target = three if third_exceptional else two
                target[key] = ManifestClass(members=tuple(tup), digest=key)

    params2 = dict(params, split="two-exceptional")
    params3 = dict(params, split="three-exceptional")
    m2 = ClassManifest("two-exceptional", params2, list(two.values()), _provenance(params2)).sort()
    m3 = ClassManifest("three-exceptional", params3, list(three.values()), _provenance(params3)).sort()
    for manifest, n_exc in ((m2, 2), (m3, 3)):
        for c in manifest.classes:
            report = mixed.mixed_degree(PolytopeTuple(c.members))
            if report.value != 1:
                raise CounterexampleFound(f"{c.digest}: md = {report.value}")
            exc = sum(
                 not _pair_nonexceptional_fast(x, y)
                 for x, y in itertools.combinations(c.members, 2)
            )
            if exc != n_exc:
                raise CounterexampleFound(f"{c.digest}: {exc} exceptional subpairs, expected {n_exc}")
    if use_cache:
        cache.store(
            "multi-exceptional",
            params,
            {"two": m2.to_obj(), "three": m3.to_obj()},
            cache_dir,
        )
    return m2, m3


def triples_one_exceptional(pairs_manifest=None, cache_dir=None, use_cache=True) -> ClassManifest:
    """Triples of mixed degree one with exactly one exceptional subpair (82).

    For an exceptional pair (P2, P3) and projections with unimodular
    triangle images, the third member lies in the intersection of the two
    infinite prisms; one vertex-anchored shift realizes the inclusion-
    maximal intersection (a unimodular simplex or the square pyramid), and
    its full-dimensional subpolytopes are the candidates.
    """
    params = {"pipeline": "one-exceptional", "seed_version": SEED_VERSION}
    if use_cache:
        cached = cache.load("one-exceptional", params, cache_dir)
        if cached is not None:
            return ClassManifest.from_obj(cached)
    pairs_manifest = _require(
        pairs_manifest if pairs_manifest is not None else exceptional_pairs(cache_dir=cache_dir),
        "exceptional-pairs",
    )
    found: dict[str, ManifestClass] = {}
    d3 = polytope.standard_simplex(3)
    sqp = polytope.lattice_pyramid(polytope.unit_cube(2))
    allowed = {equiv.normal_form(d3).digest, equiv.normal_form(sqp).digest}
    for c in pairs_manifest.classes:
        p2, p3 = c.members
        projs2 = proj.projections_onto_unimodular_simplex(p2)
        projs3 = proj.projections_onto_unimodular_simplex(p3)
        for phi3, phi2 in itertools.product(projs2, projs3):
            if phi3.kernel_direction == phi2.kernel_direction:
                continue
            c3 = proj.InfinitePrism(p2, phi3.kernel_direction)
            c2 = proj.InfinitePrism(p3, phi2.kernel_direction)
            anchors = sorted(
                {_sub(w3, w2) for w2 in p2.vertices for w3 in p3.vertices}
            )
            hit = proj.full_dim_intersection_translate(c2, c3, anchors)
            if hit is None:
                continue
            _, p1max = hit
            if equiv.normal_form(p1max).digest not in allowed:
                raise CounterexampleFound(
                    "prism intersection is neither a unimodular simplex nor the square pyramid"
                )
            for p1 in full_dim_subhulls(polytope.lattice_points(p1max)):
                if not polytope.is_hollow(polytope.minkowski_sum(p1, p2)):
                    continue
                if not polytope.is_hollow(polytope.minkowski_sum(p1, p3)):
                    continue
                if not _pair_nonexceptional_fast(p1, p2):
                    continue
                if not _pair_nonexceptional_fast(p1, p3):
                    continue
                tup = PolytopeTuple((p1, p2, p3))
                key = equiv.tuple_digest(tup)
                if key not in found:
                    found[key] = ManifestClass(members=tuple(tup), digest=key)
    manifest = ClassManifest(
        "one-exceptional", params, list(found.values()), _provenance(params)
    ).sort()
    for c in manifest.classes:
        report = mixed.mixed_degree(PolytopeTuple(c.members))
        if report.value != 1:
            raise CounterexampleFound(f"{c.digest}: md = {report.value}")
    if use_cache:
        cache.store("one-exceptional", params, manifest.to_obj(), cache_dir)
    return manifest


# ---------------------------------------------------------------------------
# Trivial-pattern triples: fixed pairwise projection directions.
# ---------------------------------------------------------------------------


def _triangle_signature(p: LatticePolytope, direction):
    """Translation class of the projected image when it is a unimodular triangle."""
    image = proj.project_along(p, direction)
    if (
        image.is_full_dimensional()
        and len(image.vertices) == 3
        and polytope.normalized_volume(image) == 1
    ):
        return equiv.translation_class(image)
    return None


def _no_triple_projection(tup: PolytopeTuple) -> bool:
    return proj.common_projection(tup, up_to_translates=True) is None


def _md_one_triple(members) -> bool:
    for p in members:
        if polytope.has_interior_lattice_point(p):
            return False
    for x, y in itertools.combinations(members, 2):
        if not polytope.is_hollow(polytope.minkowski_sum(x, y)):
            return False
    return not mixed.is_mv_one(PolytopeTuple(members))


def _pattern_triples(universes, directions):
    """Triples P_i from the universes where the pair skipping k projects
    along directions[k] onto translates of one unimodular triangle."""
    sigs = [
        [( _triangle_signature(p, directions[0]),
           _triangle_signature(p, directions[1]),
           _triangle_signature(p, directions[2])) for p in universe]
        for universe in universes
    ]
    u1, u2, u3 = universes
    s1, s2, s3 = sigs
    by23: dict = {}
    for j, p2 in enumerate(u2):
        if s2[j][0] is None or s2[j][2] is None:
            continue
        by23.setdefault(s2[j][0], []).append(j)
    out = []
    for i, p1 in enumerate(u1):
        sig2_p1, sig3_p1 = s1[i][1], s1[i][2]
        if sig2_p1 is None or sig3_p1 is None:
            continue
        for k, p3 in enumerate(u3):
            if s3[k][0] is None or s3[k][1] is None or s3[k][1] != sig2_p1:
                continue
            for j in by23.get(s3[k][0], ()):
                if s2[j][2] != sig3_p1:
                    continue
                out.append((p1, u2[j], p3))
    return out


def triples_spanning_directions(cache_dir=None, use_cache=True) -> ClassManifest:
    """Nontrivial all-pairs-projecting triples with independent directions (27).

    The three pairwise projection directions form a lattice basis, so they
    are fixed to the coordinate axes and the members confined, up to
    translation, to the unit cube.
    """
    params = {"pipeline": "spanning", "seed_version": SEED_VERSION}
    if use_cache:
        cached = cache.load("spanning", params, cache_dir)
        if cached is not None:
            return ClassManifest.from_obj(cached)
    cube = polytope.unit_cube(3)
    universe = full_dim_subhulls(polytope.lattice_points(cube))
    directions = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    found: dict[str, ManifestClass] = {}
    for p1, p2, p3 in _pattern_triples((universe, universe, universe), directions):
        if not _md_one_triple((p1, p2, p3)):
            continue
        tup = PolytopeTuple((p1, p2, p3))
        if not _no_triple_projection(tup):
            continue
        key = equiv.tuple_digest(tup)
        if key not in found:
            found[key] = ManifestClass(members=tuple(tup), digest=key)
    manifest = ClassManifest("spanning", params, list(found.values()), _provenance(params)).sort()
    if use_cache:
        cache.store("spanning", params, manifest.to_obj(), cache_dir)
    return manifest


def _family_boxes(k: int):
    g = ((1, -1, 0), (0, 1, 0), (0, k, 1))
    qk = polytope.hull(
        [
            tuple(a * g[0][i] + b * g[1][i] + c * g[2][i] for i in range(3))
            for a in (0, 1)
            for b in (0, 1)
            for c in (0, 1)
        ]
    )
    h = ((-1, 1, 0), (1, 0, 0), (k, 0, 1))
    rk = polytope.hull(
        [
            tuple(a * h[0][i] + b * h[1][i] + c * h[2][i] for i in range(3))
            for a in (0, 1)
            for b in (0, 1)
            for c in (0, 1)
        ]
    )
    return qk, rk, polytope.unit_cube(3)


def family_subtriples(k: int, cache_dir=None, use_cache=True) -> ClassManifest:
    """Mixed-degree-one pattern triples inside (Q_k, R_k, unit cube).

    Directions e1 (pair 2,3), e2 (pair 1,3), e1 - e2 (pair 1,2); classes
    already occurring at smaller k are excluded. Expected counts: 51 at
    k = 0 and 36 at every larger k.
    """
    if k < 0:
        raise ValueError("family parameter must be nonnegative")
    params = {"pipeline": "family", "k": k, "seed_version": SEED_VERSION}
    if use_cache:
        cached = cache.load("family", params, cache_dir)
        if cached is not None:
            return ClassManifest.from_obj(cached)
    earlier = set()
    for kk in range(k):
        earlier |= family_subtriples(kk, cache_dir=cache_dir, use_cache=use_cache).digests()
    qk, rk, box = _family_boxes(k)
    universes = (
        full_dim_subhulls(polytope.lattice_points(qk)),
        full_dim_subhulls(polytope.lattice_points(rk)),
        full_dim_subhulls(polytope.lattice_points(box)),
    )
    directions = ((1, 0, 0), (0, 1, 0), (1, -1, 0))
    found: dict[str, ManifestClass] = {}
    for p1, p2, p3 in _pattern_triples(universes, directions):
        if not _md_one_triple((p1, p2, p3)):
            continue
        tup = PolytopeTuple((p1, p2, p3))
        if not _no_triple_projection(tup):
            continue
        key = equiv.tuple_digest(tup)
        if key in earlier or key in found:
            continue
        found[key] = ManifestClass(members=tuple(tup), digest=key)
    manifest = ClassManifest("family", params, list(found.values()), _provenance(params)).sort()
    if use_cache:
        cache.store("family", params, manifest.to_obj(), cache_dir)
    return manifest


# ---------------------------------------------------------------------------
# Cover check and the dimension-4 verification.
# ---------------------------------------------------------------------------


def _cayley_polygon(x_pts, y_pts) -> LatticePolytope:
    pts = [tuple(p) + (0,) for p in x_pts] + [tuple(p) + (1,) for p in y_pts]
    return polytope.hull(pts)


def maximal_cover_triples() -> list[tuple[str, PolytopeTuple]]:
    """The six inclusion-maximal triples covering all classified triples."""
    d3 = polytope.standard_simplex(3)
    p2d2 = polytope.lattice_pyramid(polytope.dilate(polytope.standard_simplex(2), 2))
    e1, e2, e3 = (1, 0, 0), (0, 1, 0), (0, 0, 1)
    zero = (0, 0, 0)

    def pv(*pts):
        return polytope.hull(list(pts))

    triples = [
        ("a", PolytopeTuple((p2d2, p2d2, p2d2))),
        ("b", PolytopeTuple((polytope.dilate(d3, 2), d3, d3))),
        (
            "c",
            PolytopeTuple(
                (
                    pv(zero, (2, 0, 0), e2, e3),
                    pv(zero, (0, 2, 0), e1, e3),
                    pv(zero, (0, 0, 2), e1, e2),
                )
            ),
        ),
        (
            "d",
            PolytopeTuple(
                (
                    _cayley_polygon([(1, 0), (0, 1), (0, -1)], [(0, 0), (1, 0)]),
                    _cayley_polygon([(0, 0), (1, 0), (0, -1)], [(0, -1)]),
                    _cayley_polygon([(0, 0), (1, 0), (0, 1)], [(0, 1)]),
                )
            ),
        ),
        (
            "e",
            PolytopeTuple(
                (
                    _cayley_polygon([(0, 0), (0, 2)], [(0, 0), (1, 0)]),
                    _cayley_polygon([(0, 0), (-1, 0), (-1, -1)], [(-1, -2)]),
                    _cayley_polygon([(0, 0), (0, 1), (-1, 0)], [(1, 0)]),
                )
            ),
        ),
        (
            "f",
            PolytopeTuple(
                (
                    _cayley_polygon([(0, 0), (0, 2)], [(0, 0), (1, 0)]),
                    _cayley_polygon([(0, 0), (-1, 0), (-1, -1)], [(-1, -2)]),
                    _cayley_polygon([(0, 0), (0, -1), (-1, 0)], [(1, -2)]),
                )
            ),
        ),
    ]
    return triples


def maximal_cover_check(manifests=None, cache_dir=None, use_cache=True) -> dict:
    """Checks every class of the three exceptional-type manifests embeds in
    one of the six maximal triples; returns the per-class assignment."""
    params = {"pipeline": "cover", "seed_version": SEED_VERSION}
    if use_cache:
        cached = cache.load("cover", params, cache_dir)
        if cached is not None:
            return cached
    if manifests is None:
        pairs = exceptional_pairs(cache_dir=cache_dir)
        m2, m3 = triples_multi_exceptional(pairs, cache_dir=cache_dir)
        m1 = triples_one_exceptional(pairs, cache_dir=cache_dir)
        manifests = (m2, m3, m1)
    class_digests: dict[str, str] = {}
    for manifest in manifests:
        for c in manifest.classes:
            class_digests[c.digest] = manifest.pipeline_id

    assignment: dict[str, list[str]] = {d: [] for d in class_digests}
    for name, tup in maximal_cover_triples():
        report = mixed.mixed_degree(tup)
        if report.value != 1:
            raise CounterexampleFound(f"maximal triple ({name}) has md = {report.value}")
        universes = [full_dim_subhulls(polytope.lattice_points(p)) for p in tup]
        seen = set()
        for members in itertools.product(*universes):
            if not _md_one_triple(members):
                continue
            key = equiv.tuple_digest(PolytopeTuple(members))
            if key in seen:
                continue
            seen.add(key)
            if key in assignment:
                assignment[key].append(name)
    gaps = sorted(d for d, hits in assignment.items() if not hits)
    if gaps:
        raise CoverageGap(f"{len(gaps)} classes not covered: {gaps[:5]}...")
    report = {
        "classes": len(assignment),
        "assignment": {d: sorted(set(v)) for d, v in sorted(assignment.items())},
        "maximal_triples": [name for name, _ in maximal_cover_triples()],
    }
    if use_cache:
        cache.store("cover", params, report, cache_dir)
    return report


def dim4_case0_check(cache_dir=None, use_cache=True) -> dict:
    """The dimension-4 residual case: tuples (Delta_4, P2, P3, P4) with the
    members inside coordinate-permuted copies of the double pyramid over the
    unit square, mixed degree one and three simplex projections per member
    must all admit a common projection onto translates of Delta_3."""
    params = {"pipeline": "dim4-case0", "seed_version": SEED_VERSION}
    if use_cache:
        cached = cache.load("dim4-case0", params, cache_dir)
        if cached is not None:
            return cached
    d4 = polytope.standard_simplex(4)
    base = polytope.iterated_pyramid(polytope.unit_cube(2), 2)
    candidates = {}
    for pair in itertools.combinations(range(4), 2):
        perm = list(pair) + [i for i in range(4) if i not in pair]
        inv = [perm.index(i) for i in range(4)]
        mat = tuple(
            tuple(1 if inv[r] == c else 0 for c in range(4)) for r in range(4)
        )
        copy = base.apply(mat)
        for sub in full_dim_subhulls(polytope.lattice_points(copy)):
            candidates.setdefault(sub.vertices, sub)
    cand_list = [candidates[k] for k in sorted(candidates)]
    eligible = [
        p
        for p in cand_list
        if len(proj.projections_onto_unimodular_simplex(p)) >= 3
    ]
    checked = 0
    survivors = 0
    counterexamples = []
    for combo in itertools.combinations_with_replacement(eligible, 3):
        members = (d4,) + combo
        checked += 1
        if mixed.mixed_degree(PolytopeTuple(members)).value != 1:
            continue
        survivors += 1
        tup = PolytopeTuple(members)
        if proj.common_projection(tup, up_to_translates=True) is None:
            counterexamples.append([[list(v) for v in p.vertices] for p in members])
    if counterexamples:
        raise CounterexampleFound(
            f"{len(counterexamples)} tuples of mixed degree one without a common projection"
        )
    report = {
        "candidates": len(cand_list),
        "eligible": len(eligible),
        "checked": checked,
        "md_one": survivors,
        "counterexamples": 0,
    }
    if use_cache:
        cache.store("dim4-case0", params, report, cache_dir)
    return report
