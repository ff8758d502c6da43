"""Extremality of a point of a tropical cone, read off its tangent hypergraph.

At a member ``g`` of ``{x | A x <= B x}`` every saturated row ``k`` (finite
``A_k g == B_k g``) contributes the hyperedge ``argmax(B_k g) -> argmax(A_k g)``
on the support of ``g``.  ``g`` spans an extreme ray exactly when the
components of that hypergraph have a least element; the coordinates in that
component are the types of ``g``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .hypergraph import Hypergraph, has_least_scc
from .semiring import NEG_INF, IneqSystem, Scalar, _dot_argmax, is_zero


class NotMemberError(ValueError):
    """The point does not satisfy the inequality system."""


@dataclass(frozen=True)
class TangentData:
    """Saturated rows of a system at a point, expressed on the point's support.

    ``support`` lists the finite coordinates in increasing order; node ``i`` of
    the hypergraph stands for coordinate ``support[i]``.  ``edges`` are given
    in original coordinates.
    """

    support: tuple[int, ...]
    saturated_rows: tuple[int, ...]
    edges: tuple[tuple[frozenset[int], frozenset[int]], ...]

    def hypergraph(self) -> Hypergraph:
        pos = {c: i for i, c in enumerate(self.support)}
        return Hypergraph(
            len(self.support),
            [([pos[c] for c in t], [pos[c] for c in hd]) for t, hd in self.edges],
        )


def tangent_data(sys: IneqSystem, g: Sequence[Scalar]) -> TangentData:
    if len(g) != sys.dim:
        raise ValueError(f"point has dimension {len(g)}, system has {sys.dim}")
    if is_zero(g):
        raise ValueError("the zero vector spans no ray")
    rows = []
    edges = []
    for k, (ra, rb) in enumerate(zip(sys.a, sys.b)):
        va, head = _dot_argmax(ra, g)
        vb, tail = _dot_argmax(rb, g)
        if va > vb:
            raise NotMemberError(f"row {k} is violated")
        if va == vb and va is not NEG_INF:
            rows.append(k)
            edges.append((frozenset(tail), frozenset(head)))
    supp = tuple(i for i, x in enumerate(g) if x is not NEG_INF)
    return TangentData(supp, tuple(rows), tuple(edges))


def tangent_hypergraph(sys: IneqSystem, g: Sequence[Scalar]) -> Hypergraph:
    """Hypergraph of the tangent cone at ``g``, nodes reindexed over ``support(g)``."""
    return tangent_data(sys, g).hypergraph()


def is_extreme(sys: IneqSystem, g: Sequence[Scalar]) -> bool:
    return has_least_scc(tangent_hypergraph(sys, g))[0]


def extreme_types(sys: IneqSystem, g: Sequence[Scalar]) -> frozenset[int]:
    """Coordinates ``t`` for which ``g`` is extreme of type ``t``; empty if not extreme."""
    data = tangent_data(sys, g)
    ok, least = has_least_scc(data.hypergraph())
    if not ok:
        return frozenset()
    return frozenset(data.support[i] for i in least)


def locality_radius(sys: IneqSystem, g: Sequence[Scalar]) -> Fraction:
    """Half the smallest positive slack of the system around ``g``.

    Slacks are the gaps ``B_k g - A_k g`` of finite unsaturated rows and, on
    each side of a saturated row, the gap between the largest and the second
    largest finite term.  Moving coordinates of ``g`` down by less than this
    amount keeps every row in the regime described by the tangent cone.
    Returns 1 when there is no finite slack at all.
    """
    slacks: list = []
    for ra, rb in zip(sys.a, sys.b):
        va, _ = _dot_argmax(ra, g)
        vb, _ = _dot_argmax(rb, g)
        if va is NEG_INF or vb is NEG_INF:
            if va is NEG_INF and vb is NEG_INF:
                continue
            if va is NEG_INF:
                continue  # unbounded slack
            raise NotMemberError("row violated")
        if va < vb:
            slacks.append(vb - va)
        elif va == vb:
            for row in (ra, rb):
                terms = sorted({r + x for r, x in zip(row, g) if r is not NEG_INF and x is not NEG_INF})
                if len(terms) > 1:
                    slacks.append(terms[-1] - terms[-2])
        else:
            raise NotMemberError("row violated")
    if not slacks:
        return Fraction(1)
    return Fraction(min(slacks)) / 2
