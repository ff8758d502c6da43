"""Slow, independent reference implementations used to cross-check the fast paths.

Nothing here shares code with :mod:`tropdd.extremality` or the minimal-component
search of :mod:`tropdd.hypergraph`; the oracles recompute saturation, argmax
sets and reachability from scratch.
"""

from __future__ import annotations

from math import comb
from typing import Sequence

from .hypergraph import Hypergraph, SccPartition, partition_from_reach
from .semiring import NEG_INF, IneqSystem, Scalar, Vector, normalize

ENUMERATION_GUARD = 24


def residuation_membership(gens: Sequence[Vector], x: Sequence[Scalar]) -> tuple[bool, tuple[Scalar, ...]]:
    """Decide whether ``x`` is a tropical combination of ``gens``.

    Uses the greatest coefficients ``lam_i = min_j (x_j - g_j)`` over the
    support of ``g``; ``x`` is a combination iff these reproduce it exactly.
    """
    d = len(x)
    lams = []
    for g in gens:
        if len(g) != d:
            raise ValueError("dimension mismatch")
        lam = None
        for gj, xj in zip(g, x):
            if gj is NEG_INF:
                continue
            if xj is NEG_INF:
                lam = NEG_INF
                break
            diff = xj - gj
            if lam is None or diff < lam:
                lam = diff
        lams.append(NEG_INF if lam is None else lam)
    combo = [NEG_INF] * d
    for lam, g in zip(lams, gens):
        if lam is NEG_INF:
            continue
        for j, gj in enumerate(g):
            if gj is not NEG_INF:
                v = lam + gj
                if combo[j] is NEG_INF or v > combo[j]:
                    combo[j] = v
    return all(c == xj for c, xj in zip(combo, x)), tuple(lams)


def is_extreme_residuation(gens: Sequence[Vector], x: Sequence[Scalar]) -> bool:
    """``x`` is extreme in the cone spanned by ``gens`` iff the members not
    proportional to it cannot produce it."""
    nx = normalize(x)
    others = [g for g in gens if normalize(g) != nx]
    return not residuation_membership(others, x)[0]


def _rows_at(sys: IneqSystem, g: Sequence[Scalar]):
    """Yield ``(head, tail)`` coordinate lists for each saturated finite row."""
    for ra, rb in zip(sys.a, sys.b):
        ta = [r + x for r, x in zip(ra, g) if r is not NEG_INF and x is not NEG_INF]
        tb = [r + x for r, x in zip(rb, g) if r is not NEG_INF and x is not NEG_INF]
        va = max(ta) if ta else NEG_INF
        vb = max(tb) if tb else NEG_INF
        if not va <= vb:
            raise ValueError("point violates the system")
        if va is NEG_INF or va != vb:
            continue
        head = [i for i in range(len(g)) if ra[i] is not NEG_INF and g[i] is not NEG_INF and ra[i] + g[i] == va]
        tail = [i for i in range(len(g)) if rb[i] is not NEG_INF and g[i] is not NEG_INF and rb[i] + g[i] == vb]
        yield head, tail


def tangent_zero_one_elements(sys: IneqSystem, g: Sequence[Scalar]) -> list[frozenset[int]]:
    """All {zero, unit} vectors of the tangent cone at ``g``, each given as the
    set of coordinates equal to the unit (a subset of ``support(g)``)."""
    supp = [i for i, x in enumerate(g) if x is not NEG_INF]
    if not supp:
        raise ValueError("the zero vector spans no ray")
    if len(supp) > ENUMERATION_GUARD:
        raise ValueError(f"enumeration guard: support of size {len(supp)} > {ENUMERATION_GUARD}")
    bit = {c: 1 << i for i, c in enumerate(supp)}
    constraints = []
    for head, tail in _rows_at(sys, g):
        hm = sum(bit[c] for c in head)
        tm = sum(bit[c] for c in tail)
        constraints.append((hm, tm))
    out = []
    for y in range(1 << len(supp)):
        if all(not (y & hm) or (y & tm) for hm, tm in constraints):
            out.append(frozenset(c for c in supp if y & bit[c]))
    return out


def enum_extreme_types(sys: IneqSystem, g: Sequence[Scalar]) -> frozenset[int]:
    """Coordinates ``t`` for which the all-unit vector is the only tangent
    {zero, unit} vector with a unit at ``t``."""
    elements = tangent_zero_one_elements(sys, g)
    full = frozenset(i for i, x in enumerate(g) if x is not NEG_INF)
    types = set()
    for t in full:
        if all(y == full for y in elements if t in y):
            types.add(t)
    return frozenset(types)


def is_extreme_enum(sys: IneqSystem, g: Sequence[Scalar], t: int | None = None) -> bool:
    types = enum_extreme_types(sys, g)
    if t is None:
        return bool(types)
    return t in types


def naive_reachable(h: Hypergraph, u: int) -> frozenset[int]:
    """Reachability by repeated sweeps over all hyperedges until nothing changes."""
    reached = {u}
    changed = True
    while changed:
        changed = False
        for tail, head in h.edges:
            if set(tail) <= reached and not set(head) <= reached:
                reached.update(head)
                changed = True
    return frozenset(reached)


def naive_minimal_sccs(h: Hypergraph) -> SccPartition:
    """Component partition, order and minimal components straight from the definitions."""
    reach = [naive_reachable(h, v) for v in range(h.node_count)]
    comps, below = partition_from_reach(h.node_count, reach)
    minimal = tuple(c for i, c in enumerate(comps) if below[i] == {i})
    return SccPartition(comps, below, minimal)


def naive_least_scc(h: Hypergraph) -> frozenset[int] | None:
    """The component contained in every reachability set, if any."""
    reach = [naive_reachable(h, v) for v in range(h.node_count)]
    if not reach:
        return None
    common = frozenset.intersection(*reach)
    if not common:
        return None
    return common


def upper_bound(n: int, d: int) -> int:
    """McMullen's bound ``U(n, d)`` on vertices of a ``d``-polytope with ``n`` facets."""
    if not n >= d >= 1:
        raise ValueError(f"U(n, d) needs n >= d >= 1, got n={n}, d={d}")
    return comb(n - (d + 1) // 2, n - d) + comb(n - (d + 2) // 2, n - d)


def ray_bound(n: int, d: int) -> int:
    """Largest possible number of extreme rays of a cone in dimension ``d``
    cut out by ``n`` tropical halfspaces: ``U(n + d, d - 1)`` (1 when d = 1)."""
    if d < 1 or n < 0:
        raise ValueError("need d >= 1 and n >= 0")
    if d == 1:
        return 1
    return upper_bound(n + d, d - 1)
