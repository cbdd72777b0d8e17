"""Minkowski summand enumeration for 3-polytopes.

A lattice decomposition s = a + b splits every edge of s: the edge of
lattice length L in primitive direction u contributes an edge of length
x in a and L - x in b, and around every facet the chosen lengths must
close up to a cycle. Solutions of this integer system are enumerated by
depth-first search with interval pruning, and each solution is rebuilt
into an explicit summand by walking the edge graph and verified by an
exact Minkowski sum. The facet cycles of a 3-polytope generate the cycle
space of its graph, so the closure constraints are exactly the solvability
conditions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import equiv, intlin, polytope
from .errors import DimensionMismatch, LowerDimensional
from .polytope import LatticePolytope, _add, _dot, _sub


@dataclass(frozen=True)
class SummandPair:
    a: LatticePolytope
    b: LatticePolytope
    sum: LatticePolytope


def minkowski_difference(s: LatticePolytope, a: LatticePolytope):
    """conv{x in Z^n : x + a is contained in s}; None when empty.

    Facet inequalities of s tightened by the support values of a, then the
    surviving lattice points are hulled.
    """
    if s.ambient_dim != a.ambient_dim:
        raise DimensionMismatch("operands in different ambient dimensions")
    s.require_full_dimensional()
    tightened = []
    for n, b in s.facets:
        support = max(_dot(n, v) for v in a.vertices)
        tightened.append((n, b - support))
    lo_s, hi_s = s.bounding_box()
    lo_a, hi_a = a.bounding_box()
    ranges = [range(ls - ha, hs - la + 1) for ls, hs, la, ha in zip(lo_s, hi_s, lo_a, hi_a)]
    pts = [
        x
        for x in itertools.product(*ranges)
        if all(_dot(n, x) <= b for n, b in tightened)
    ]
    if not pts:
        return None
    return polytope.hull(pts)


def _facet_cycles(s: LatticePolytope):
    """Vertex cycles of each facet of a 3-polytope, in exact cyclic order."""
    cycles = []
    for n, b in s.facets:
        on_facet = [v for v in s.vertices if _dot(n, v) == b]
        # Order the polygon: 2D chart inside the facet plane.
        v0 = on_facet[0]
        dirs = [_sub(v, v0) for v in on_facet[1:]]
        e1 = next(d for d in dirs if any(d))
        e2 = next(d for d in dirs if polytope._rank([e1, d]) == 2)
        chart = [(_dot(e1, _sub(v, v0)), _dot(e2, _sub(v, v0))) for v in on_facet]
        ring, _, _ = polytope._hull_2d(chart)
        index = {c: v for c, v in zip(chart, on_facet)}
        cycles.append([index[c] for c in ring])
    return cycles


def _edge_data(s: LatticePolytope):
    """Edges as (u primitive direction, length), plus per-facet oriented cycles."""
    edge_ids: dict[frozenset, int] = {}
    directed: list[tuple] = []  # per edge id: (u, length, tail, head)
    cycles = []
    for cyc in _facet_cycles(s):
        arcs = []
        for vv, ww in zip(cyc, cyc[1:] + cyc[:1]):
            key = frozenset((vv, ww))
            if key not in edge_ids:
                d = _sub(ww, vv)
                g = intlin.gcd_vector(d)
                u = tuple(x // g for x in d)
                edge_ids[key] = len(directed)
                directed.append((u, g, vv, ww))
            eid = edge_ids[key]
            u, g, tail, head = directed[eid]
            sign = 1 if tail == vv else -1
            arcs.append((eid, sign))
        cycles.append(arcs)
    return directed, cycles


def _edge_splittings(s: LatticePolytope):
    """All integer edge-length assignments closing up around every facet."""
    edges, cycles = _edge_data(s)
    m = len(edges)
    lengths = [e[1] for e in edges]
    dirs = [e[0] for e in edges]
    dim = s.ambient_dim

    # Process edges in an order that finishes facets early.
    order: list[int] = []
    seen = set()
    for arcs in cycles:
        for eid, _ in arcs:
            if eid not in seen:
                seen.add(eid)
                order.append(eid)
    pos = {eid: k for k, eid in enumerate(order)}
    cycle_last = [max(pos[eid] for eid, _ in arcs) for arcs in cycles]
    by_step: dict[int, list[int]] = {}
    for ci, last in enumerate(cycle_last):
        by_step.setdefault(last, []).append(ci)

    assign = [0] * m
    solutions = []

    def feasible(partial_step: int) -> bool:
        # Interval check on every touched, unfinished cycle.
        for ci, arcs in enumerate(cycles):
            lo = [0] * dim
            hi = [0] * dim
            fixed = [0] * dim
            touched = False
            open_edge = False
            for eid, sign in arcs:
                u = dirs[eid]
                if pos[eid] <= partial_step:
                    touched = True
                    a = assign[eid] * sign
                    for c in range(dim):
                        fixed[c] += a * u[c]
                else:
                    open_edge = True
                    l = lengths[eid]
                    for c in range(dim):
                        contrib = sign * l * u[c]
                        if contrib >= 0:
                            hi[c] += contrib
                        else:
                            lo[c] += contrib
            if not touched:
                continue
            if not open_edge:
                if any(fixed):
                    return False
            else:
                for c in range(dim):
                    if not (lo[c] <= -fixed[c] <= hi[c]):
                        return False
        return True

    def dfs(step: int):
        if step == m:
            solutions.append(tuple(assign))
            return
        eid = order[step]
        for val in range(lengths[eid] + 1):
            assign[eid] = val
            if feasible(step):
                dfs(step + 1)
        assign[eid] = 0

    dfs(0)
    return edges, solutions


def _walk_summand(s: LatticePolytope, edges, lengths_assigned):
    """Rebuild the summand polytope whose edges carry the assigned lengths."""
    adjacency: dict = {}
    for (u, g, tail, head), a in zip(edges, lengths_assigned):
        vec = tuple(a * x for x in u)
        adjacency.setdefault(tail, []).append((head, vec))
        adjacency.setdefault(head, []).append((tail, tuple(-x for x in vec)))
    v0 = s.vertices[0]
    offset = {v0: (0,) * s.ambient_dim}
    stack = [v0]
    while stack:
        v = stack.pop()
        for w, vec in adjacency[v]:
            target = _add(offset[v], vec)
            if w in offset:
                if offset[w] != target:
                    return None
            else:
                offset[w] = target
                stack.append(w)
    return polytope.hull(list(set(offset.values())))


def full_dim_summand_pairs(s: LatticePolytope) -> list[SummandPair]:
    """All unordered pairs (a, b) of 3-dimensional summands with a + b = s.

    Pairs are reported anchored at the first vertex of s and deduplicated
    by the sorted pair of member normal forms; every returned pair is
    re-verified by an exact Minkowski sum.
    """
    if s.ambient_dim != 3:
        raise LowerDimensional("summand enumeration is defined for 3-polytopes")
    s.require_full_dimensional()
    edges, solutions = _edge_splittings(s)
    v0 = s.vertices[0]
    shifted = s.translate(tuple(-x for x in v0))
    seen = set()
    out = []
    for sol in solutions:
        a = _walk_summand(s, edges, sol)
        if a is None or a.dim != 3:
            continue
        comp = tuple(length - x for (_, length, _, _), x in zip(edges, sol))
        b = _walk_summand(s, edges, comp)
        if b is None or b.dim != 3:
            continue
        if polytope.minkowski_sum(a, b) != shifted:
            continue
        ka = equiv.normal_form(a).digest
        kb = equiv.normal_form(b).digest
        key = (min(ka, kb), max(ka, kb))
        if key in seen:
            continue
        seen.add(key)
        if (kb, ka) == key:
            a, b = b, a
        out.append(SummandPair(a=a, b=b, sum=s))
    out.sort(key=lambda pair: (equiv.normal_form(pair.a).digest, equiv.normal_form(pair.b).digest))
    return out


def summand_pairs_bruteforce(s: LatticePolytope) -> set[tuple[str, str]]:
    """Exhaustive subset-pair oracle (test use; feasible up to ~10 lattice points).

    Returns the set of sorted digest pairs of full-dimensional decompositions.
    """
    s.require_full_dimensional()
    v0 = s.vertices[0]
    shifted = s.translate(tuple(-x for x in v0))
    pts = polytope.lattice_points(shifted)
    origin = (0,) * s.ambient_dim
    others = [p for p in pts if p != origin]
    found = set()
    hulls = {}
    for r in range(len(others) + 1):
        for subset in itertools.combinations(others, r):
            a = polytope.hull((origin,) + subset)
            if a.vertices in hulls:
                continue
            hulls[a.vertices] = a
    for a in hulls.values():
        if a.dim != s.ambient_dim:
            continue
        b = minkowski_difference(shifted, a)
        if b is None or b.dim != s.ambient_dim:
            continue
        if polytope.minkowski_sum(a, b) == shifted:
            ka = equiv.normal_form(a).digest
            kb = equiv.normal_form(b).digest
            found.add((min(ka, kb), max(ka, kb)))
    return found
