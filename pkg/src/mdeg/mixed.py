"""Mixed volume, mixed degree, and the interior-point lower bound.

The mixed volume of an n-tuple in R^n is computed by inclusion-exclusion
over normalized volumes of subset Minkowski sums, normalized so that the
tuple of n standard simplices has mixed volume 1. The mixed degree of an
m-tuple is n when some member has an interior lattice point, and otherwise
the smallest d such that every Minkowski sum of n-d members is hollow.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import polytope
from .errors import InternalInvariantViolation, LengthMismatch, TooFewPolytopes
from .polytope import LatticePolytope, PolytopeTuple


def _as_tuple(tup) -> PolytopeTuple:
    return tup if isinstance(tup, PolytopeTuple) else PolytopeTuple(tup)


def mixed_volume(tup) -> int:
    """Normalized mixed volume via inclusion-exclusion over subset sums."""
    tup = _as_tuple(tup)
    n = tup.ambient_dim
    if len(tup) != n:
        raise LengthMismatch(f"need an {n}-tuple in dimension {n}, got {len(tup)} members")
    total = 0
    members = list(tup)
    for r in range(1, n + 1):
        sign = 1 if (n - r) % 2 == 0 else -1
        for subset in itertools.combinations(members, r):
            total += sign * polytope.normalized_volume(polytope.minkowski_sum_many(subset))
    q, rem = divmod(total, _factorial(n))
    if rem:
        raise InternalInvariantViolation("inclusion-exclusion sum not divisible by n!")
    return q


def _factorial(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


@dataclass(frozen=True)
class MixedDegreeReport:
    """Mixed degree with a witness and the hollowness certificates examined.

    For value d >= 1 (below n) the witness is the index set of an
    (n-d+1)-subtuple whose Minkowski sum is non-hollow; for value n it is
    the index of a member with an interior lattice point, and for 0 it is
    None. hollow_certificates maps index subsets to hollowness booleans.
    """

    value: int
    witness: tuple | None
    hollow_certificates: dict


def mixed_degree(tup) -> MixedDegreeReport:
    tup = _as_tuple(tup)
    n = tup.ambient_dim
    m = len(tup)
    if m < n - 1:
        raise TooFewPolytopes(f"mixed degree needs at least {n - 1} members, got {m}")
    for p in tup:
        p.require_full_dimensional()
    members = list(tup)
    certificates = {}
    for i, p in enumerate(members):
        if polytope.has_interior_lattice_point(p):
            return MixedDegreeReport(n, (i,), certificates)

    lowest = max(0, n - m)
    for d in range(lowest, n):
        size = n - d
        all_hollow = True
        witness = None
        for subset in itertools.combinations(range(m), size):
            s = polytope.minkowski_sum_many([members[i] for i in subset])
            hollow = polytope.is_hollow(s)
            certificates[subset] = hollow
            if not hollow:
                all_hollow = False
                witness = subset
                break
        if all_hollow:
            return MixedDegreeReport(d, _witness_below(certificates, d, n, m), certificates)
    return MixedDegreeReport(n, None, certificates)


def _witness_below(certificates, d, n, m):
    """For d >= 1, a previously seen non-hollow subset one level down."""
    if d == max(0, n - m):
        if d == 0:
            return None
    size = n - d + 1
    for subset, hollow in certificates.items():
        if len(subset) == size and not hollow:
            return subset
    return None


def mixed_degree_value(tup) -> int:
    return mixed_degree(tup).value


def is_mixed_degree_one(tup) -> bool:
    """md = 1: every member hollow and every (n-1)-subset sum hollow, but not md = 0."""
    return mixed_degree(tup).value == 1


def soprunov_check(tup):
    """Interior count of the total sum against MV - 1, with the equality certificate.

    Returns (interior_count, mv_minus_one, equality, all_subsums_hollow).
    The inequality interior_count >= mv - 1 is asserted internally: its
    failure would be an arithmetic bug, not a data condition.
    """
    tup = _as_tuple(tup)
    n = tup.ambient_dim
    if len(tup) != n:
        raise LengthMismatch(f"need an {n}-tuple in dimension {n}")
    for p in tup:
        p.require_full_dimensional()
    members = list(tup)
    total = polytope.minkowski_sum_many(members)
    interior_count = len(polytope.interior_lattice_points(total))
    mv_minus_one = mixed_volume(tup) - 1
    if interior_count < mv_minus_one:
        raise InternalInvariantViolation(
            f"interior count {interior_count} below mixed volume bound {mv_minus_one}"
        )
    all_subsums_hollow = all(
        polytope.is_hollow(
            polytope.minkowski_sum_many([members[i] for i in subset])
        )
        for subset in itertools.combinations(range(n), n - 1)
    )
    equality = interior_count == mv_minus_one
    return interior_count, mv_minus_one, equality, all_subsums_hollow


def is_mv_one(tup) -> bool:
    return mixed_volume(tup) == 1
