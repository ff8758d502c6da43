"""Text formats for problems and generator sets.

Problem file::

    tropical-cone            # or tropical-polyhedron
    dim 3
    ineqs 1
    -oo -oo 0 ; 2 -oo -oo    # cone row: A_k ; B_k
    # polyhedron row: A_k ; c_k ; B_k ; e_k

Generator output (cone)::

    extreme-rays
    dim 3
    count 2
    -oo 0 -oo
    0 3 2

Polyhedron output replaces ``count`` by a ``points <k>`` block followed by a
``rays <m>`` block, after the header ``extreme-generators``.  Vectors are
listed in lexicographic order with ``-oo`` lowest, so equal inputs give
byte-identical output.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .dd import AffineGenerators, AffineSystem, GeneratorSet, homogenize
from .semiring import IneqSystem, format_scalar, parse_scalar

CONE = "cone"
POLYHEDRON = "polyhedron"
_HEADERS = {"tropical-cone": CONE, "tropical-polyhedron": POLYHEDRON}


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class ProblemFile:
    kind: str
    dim: int
    system: Union[IneqSystem, AffineSystem]

    @property
    def n(self) -> int:
        return self.system.n

    def cone(self) -> IneqSystem:
        """The system as a cone (homogenized for polyhedra)."""
        if self.kind == CONE:
            return self.system
        return homogenize(self.system)


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _tokens(words, lineno):
    out = []
    for w in words:
        try:
            out.append(parse_scalar(w))
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from None
    return tuple(out)


def _keyword_int(item, keyword):
    lineno, line = item
    words = line.split()
    if len(words) != 2 or words[0] != keyword:
        raise ParseError(f"expected '{keyword} <integer>'", lineno)
    try:
        value = int(words[1])
    except ValueError:
        raise ParseError(f"'{keyword}' needs an integer", lineno) from None
    if value < 0:
        raise ParseError(f"'{keyword}' must be nonnegative", lineno)
    return value


def parse_problem(text: str) -> ProblemFile:
    lines = list(_lines(text))
    if not lines:
        raise ParseError("empty problem file")
    lineno, header = lines[0]
    if header not in _HEADERS:
        raise ParseError("expected 'tropical-cone' or 'tropical-polyhedron'", lineno)
    kind = _HEADERS[header]
    if len(lines) < 3:
        raise ParseError("missing 'dim' or 'ineqs' line", lines[-1][0])
    dim = _keyword_int(lines[1], "dim")
    if dim < 1:
        raise ParseError("'dim' must be positive", lines[1][0])
    n = _keyword_int(lines[2], "ineqs")
    data = lines[3:]
    if len(data) != n:
        where = data[n][0] if len(data) > n else (data[-1][0] if data else lines[2][0])
        raise ParseError(f"expected {n} inequality lines, found {len(data)}", where)
    parts_expected = 2 if kind == CONE else 4
    sizes = [dim, dim] if kind == CONE else [dim, 1, dim, 1]
    rows = []
    for lineno, line in data:
        parts = [p.split() for p in line.split(";")]
        if len(parts) != parts_expected:
            raise ParseError(f"expected {parts_expected} ';'-separated groups, found {len(parts)}", lineno)
        for p, size in zip(parts, sizes):
            if len(p) != size:
                raise ParseError(
                    f"arity mismatch: expected groups of sizes {sizes}, found {[len(q) for q in parts]}",
                    lineno,
                )
        rows.append([_tokens(p, lineno) for p in parts])
    if kind == CONE:
        system = IneqSystem(tuple(r[0] for r in rows), tuple(r[1] for r in rows), dim)
    else:
        system = AffineSystem(
            tuple(r[0] for r in rows),
            tuple(r[1][0] for r in rows),
            tuple(r[2] for r in rows),
            tuple(r[3][0] for r in rows),
            dim,
        )
    return ProblemFile(kind, dim, system)


def _fmt(v) -> str:
    return " ".join(format_scalar(x) for x in v)


def format_problem(problem: ProblemFile) -> str:
    s = problem.system
    head = "tropical-cone" if problem.kind == CONE else "tropical-polyhedron"
    out = [head, f"dim {problem.dim}", f"ineqs {s.n}"]
    if problem.kind == CONE:
        out += [f"{_fmt(ra)} ; {_fmt(rb)}" for ra, rb in zip(s.a, s.b)]
    else:
        out += [
            f"{_fmt(ra)} ; {format_scalar(c)} ; {_fmt(rb)} ; {format_scalar(e)}"
            for ra, c, rb, e in zip(s.a, s.c, s.b, s.e)
        ]
    return "\n".join(out) + "\n"


def emit_generators(g: Union[GeneratorSet, AffineGenerators]) -> str:
    if isinstance(g, GeneratorSet):
        out = ["extreme-rays", f"dim {g.dim}", f"count {len(g)}"]
        out += [_fmt(v) for v in g]
    else:
        out = ["extreme-generators", f"dim {g.dim}", f"points {len(g.points)}"]
        out += [_fmt(v) for v in sorted(g.points)]
        out.append(f"rays {len(g.rays)}")
        out += [_fmt(v) for v in sorted(g.rays)]
    return "\n".join(out) + "\n"


def parse_generators(text: str) -> Union[GeneratorSet, AffineGenerators]:
    """Inverse of :func:`emit_generators`."""
    lines = list(_lines(text))
    if not lines or lines[0][1] not in ("extreme-rays", "extreme-generators"):
        raise ParseError("expected 'extreme-rays' or 'extreme-generators'", lines[0][0] if lines else None)
    if len(lines) < 3:
        raise ParseError("truncated generator file")
    dim = _keyword_int(lines[1], "dim")

    def block(pos, keyword):
        if pos >= len(lines):
            raise ParseError(f"missing '{keyword}' line")
        m = _keyword_int(lines[pos], keyword)
        vecs = []
        for lineno, line in lines[pos + 1:pos + 1 + m]:
            v = _tokens(line.split(), lineno)
            if len(v) != dim:
                raise ParseError(f"expected {dim} entries", lineno)
            vecs.append(v)
        if len(vecs) != m:
            raise ParseError(f"'{keyword}' announces {m} vectors, found {len(vecs)}")
        return vecs, pos + 1 + m

    if lines[0][1] == "extreme-rays":
        vecs, end = block(2, "count")
        if end != len(lines):
            raise ParseError("trailing data", lines[end][0])
        return GeneratorSet.from_vectors(dim, vecs)
    points, pos = block(2, "points")
    rays, end = block(pos, "rays")
    if end != len(lines):
        raise ParseError("trailing data", lines[end][0])
    return AffineGenerators(dim, tuple(sorted(points)), tuple(sorted(rays)))
