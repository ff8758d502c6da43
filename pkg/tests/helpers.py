"""Hypothesis strategies and brute-force helpers shared by the test modules."""

from __future__ import annotations

import itertools
from fractions import Fraction

from hypothesis import strategies as st

from tropdd.hypergraph import Hypergraph
from tropdd.oracle import is_extreme_residuation
from tropdd.semiring import NEG_INF, IneqSystem

O = NEG_INF

finite = st.one_of(
    st.integers(-50, 50),
    st.fractions(min_value=-20, max_value=20, max_denominator=12).map(
        lambda q: q.numerator if q.denominator == 1 else q
    ),
)
scalars = st.one_of(st.just(NEG_INF), finite)


def vectors(d, elements=scalars):
    return st.tuples(*[elements] * d)


def nonzero_vectors(d, elements=scalars):
    return vectors(d, elements).filter(lambda v: any(x is not NEG_INF for x in v))


@st.composite
def hypergraphs(draw, max_nodes=12, max_side=3):
    n = draw(st.integers(1, max_nodes))
    nodes = st.integers(0, n - 1)
    side = st.lists(nodes, min_size=1, max_size=max_side, unique=True)
    edges = draw(st.lists(st.tuples(side, side), max_size=3 * n))
    return Hypergraph(n, edges)


# reference cone in dimension 3: x3 <= x1+2, x1 <= max(x2,x3), x1 <= x3+2, x3 <= max(x1,x2-1)
REF_ROWS = [
    ((O, O, 0), (2, O, O)),
    ((0, O, O), (O, 0, 0)),
    ((0, O, O), (O, O, 2)),
    ((O, O, 0), (0, -1, O)),
]
G0, G1, G2, G3 = (O, 0, O), (-2, 1, 0), (2, 2, 0), (0, O, 0)

# u v w x y t -> 0..5
SAMPLE_HG = Hypergraph(6, [([0], [1]), ([1], [2]), ([2], [0]), ([1, 2], [3, 4]), ([2, 4], [5])])
U, V, W, X, Y, T = range(6)

# (criterion, PASS/FAIL, detail) lines printed at the end of the session
ACCEPTANCE_RESULTS: list[tuple[str, str, str]] = []


def brute_force_rays(sys: IneqSystem, bound: int) -> set[tuple]:
    """Extreme rays found by scanning normalized integer vectors in a box.

    Exact whenever every extreme ray has a representative with entries in
    ``[-bound, bound]`` (integer systems have integer extreme rays).
    """
    d = sys.dim
    values = [NEG_INF] + list(range(-bound, bound + 1))
    members = []
    for lead in range(d):
        for rest in itertools.product(values, repeat=d - lead - 1):
            v = (NEG_INF,) * lead + (0,) + rest
            if sys.contains(v):
                members.append(v)
    return {v for v in members if is_extreme_residuation(members, v)}


def frac(p, q=1):
    return Fraction(p, q)
