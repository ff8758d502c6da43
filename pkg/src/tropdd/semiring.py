"""Exact max-plus arithmetic.

Scalars are exact rationals (``int`` or :class:`fractions.Fraction`) plus the
distinguished bottom element :data:`NEG_INF`.  Vectors and matrix rows are plain
tuples of scalars.  Coordinates are numbered from 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union


class NegInf:
    """The max-plus zero (minus infinity).

    A singleton.  It compares below every rational, absorbs under ``+`` and is
    neutral for ``max``, so plain ``max`` and ``+`` over scalars give the
    semiring operations directly.
    """

    _instance: "NegInf | None" = None
    __slots__ = ()

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __reduce__(self):
        return "NEG_INF"

    def __repr__(self):
        return "NEG_INF"

    def __str__(self):
        return "-oo"

    def __hash__(self):
        return hash("-oo")

    def __eq__(self, other):
        return other is self

    def __ne__(self, other):
        return other is not self

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __add__(self, other):
        if other is self or isinstance(other, (int, Fraction)):
            return self
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        raise ArithmeticError("+oo is not an element of the max-plus semiring")


NEG_INF = NegInf()
ZERO = NEG_INF  # additive neutral
ONE = 0  # multiplicative neutral

Scalar = Union[int, Fraction, NegInf]
Vector = tuple  # tuple[Scalar, ...]


class DimensionError(ValueError):
    pass


def _canon(q: Fraction) -> Scalar:
    return q.numerator if q.denominator == 1 else q


def as_scalar(x) -> Scalar:
    """Coerce ``x`` to a scalar.

    Accepts ints, Fractions, :data:`NEG_INF`, finite floats (converted
    exactly), ``float('-inf')`` and strings in the text syntax.
    """
    if x is NEG_INF:
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return _canon(x)
    if isinstance(x, float):
        if x == float("-inf"):
            return NEG_INF
        if x != x or x == float("inf"):
            raise ValueError(f"not a max-plus scalar: {x!r}")
        return _canon(Fraction(x))
    if isinstance(x, str):
        return parse_scalar(x)
    raise TypeError(f"cannot convert {type(x).__name__} to a scalar")


def parse_scalar(token: str) -> Scalar:
    """Parse ``-oo``, a decimal (``2``, ``-1``, ``2.5``) or a rational ``p/q``."""
    t = token.strip()
    if t == "-oo":
        return NEG_INF
    if not t or "_" in t or any(c.isspace() for c in t):
        raise ValueError(f"invalid scalar token {token!r}")
    if "/" in t:
        p, _, q = t.partition("/")
        try:
            num, den = int(p), int(q)
        except ValueError:
            raise ValueError(f"invalid rational {token!r}") from None
        if den <= 0:
            raise ValueError(f"rational {token!r} needs a positive denominator")
        return _canon(Fraction(num, den))
    try:
        return _canon(Fraction(t))
    except ValueError:
        raise ValueError(f"invalid scalar token {token!r}") from None


def format_scalar(x: Scalar) -> str:
    if x is NEG_INF:
        return "-oo"
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"
    return str(x)


def as_vector(entries: Iterable) -> Vector:
    v = tuple(as_scalar(e) for e in entries)
    if not v:
        raise DimensionError("vectors must have positive dimension")
    return v


def vector(*entries) -> Vector:
    return as_vector(entries)


def tadd(x: Scalar, y: Scalar) -> Scalar:
    return x if x >= y else y


def tmul(x: Scalar, y: Scalar) -> Scalar:
    if x is NEG_INF or y is NEG_INF:
        return NEG_INF
    return x + y


def _check_dims(u: Sequence, v: Sequence) -> None:
    if len(u) != len(v):
        raise DimensionError(f"dimension mismatch: {len(u)} vs {len(v)}")


def dot(row: Sequence[Scalar], x: Sequence[Scalar]) -> Scalar:
    """Max-plus inner product ``max_i (row_i + x_i)``."""
    _check_dims(row, x)
    best = NEG_INF
    for r, xi in zip(row, x):
        if r is NEG_INF or xi is NEG_INF:
            continue
        s = r + xi
        if best is NEG_INF or s > best:
            best = s
    return best


def dot_argmax(row: Sequence[Scalar], x: Sequence[Scalar]) -> tuple[Scalar, frozenset[int]]:
    """Return the max-plus product together with the indices attaining it.

    The argmax of a product equal to ``NEG_INF`` is empty.
    """
    _check_dims(row, x)
    value, arg = _dot_argmax(row, x)
    return value, frozenset(arg)


def _dot_argmax(row, x):
    best = NEG_INF
    arg: list[int] = []
    for i, r in enumerate(row):
        xi = x[i]
        if r is NEG_INF or xi is NEG_INF:
            continue
        s = r + xi
        if best is NEG_INF or s > best:
            best = s
            arg = [i]
        elif s == best:
            arg.append(i)
    return best, arg


def combine(alpha: Scalar, u: Sequence[Scalar], beta: Scalar, v: Sequence[Scalar]) -> Vector:
    """Tropical linear combination ``alpha u (+) beta v``."""
    _check_dims(u, v)
    return tuple(tadd(tmul(alpha, ui), tmul(beta, vi)) for ui, vi in zip(u, v))


def scale(alpha: Scalar, u: Sequence[Scalar]) -> Vector:
    return tuple(tmul(alpha, ui) for ui in u)


def support(x: Sequence[Scalar]) -> frozenset[int]:
    return frozenset(i for i, xi in enumerate(x) if xi is not NEG_INF)


def is_zero(x: Sequence[Scalar]) -> bool:
    return all(xi is NEG_INF for xi in x)


def normalize(x: Sequence[Scalar]) -> Vector:
    """Scale ``x`` so that its first finite entry becomes 0."""
    for xi in x:
        if xi is not NEG_INF:
            kappa = -xi
            return tuple(
                NEG_INF if e is NEG_INF else _canon_any(e + kappa) for e in x
            )
    raise ValueError("cannot normalize the zero vector (it spans no ray)")


def _canon_any(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def is_proportional(u: Sequence[Scalar], v: Sequence[Scalar]) -> bool:
    _check_dims(u, v)
    return normalize(u) == normalize(v)


@dataclass(frozen=True)
class IneqSystem:
    """A system ``A x <= B x`` of max-plus inequalities.

    ``a`` and ``b`` are tuples of rows; ``dim`` is needed to describe systems
    with zero rows.
    """

    a: tuple
    b: tuple
    dim: int

    def __post_init__(self):
        a = tuple(tuple(as_scalar(e) for e in row) for row in self.a)
        b = tuple(tuple(as_scalar(e) for e in row) for row in self.b)
        if self.dim < 1:
            raise DimensionError("dimension must be positive")
        if len(a) != len(b):
            raise DimensionError("A and B must have the same number of rows")
        for ra, rb in zip(a, b):
            if len(ra) != self.dim or len(rb) != self.dim:
                raise DimensionError(f"every row must have {self.dim} entries")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @classmethod
    def from_rows(cls, rows: Iterable[tuple[Sequence, Sequence]], dim: int | None = None) -> "IneqSystem":
        rows = list(rows)
        if dim is None:
            if not rows:
                raise DimensionError("dimension required for an empty system")
            dim = len(rows[0][0])
        return cls(tuple(r[0] for r in rows), tuple(r[1] for r in rows), dim)

    @property
    def n(self) -> int:
        return len(self.a)

    @property
    def d(self) -> int:
        return self.dim

    def rows(self):
        return zip(self.a, self.b)

    def subsystem(self, indices: Iterable[int]) -> "IneqSystem":
        idx = list(indices)
        return IneqSystem(tuple(self.a[k] for k in idx), tuple(self.b[k] for k in idx), self.dim)

    def permuted(self, perm: Sequence[int]) -> "IneqSystem":
        return self.subsystem(perm)

    def with_row(self, a_row: Sequence, b_row: Sequence) -> "IneqSystem":
        return IneqSystem(self.a + (tuple(a_row),), self.b + (tuple(b_row),), self.dim)

    def contains(self, x: Sequence[Scalar]) -> bool:
        """Exact membership test: ``A_k x <= B_k x`` for every row."""
        _check_dims(x, range(self.dim))
        return all(dot(ra, x) <= dot(rb, x) for ra, rb in zip(self.a, self.b))

    __contains__ = contains
