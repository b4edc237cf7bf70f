"""Line-oriented file formats for matrices, graphs and quadratic polynomials.

Every format starts with a header line; ``#`` starts a comment; blank lines are ignored.
"""

from __future__ import annotations

import pathlib
from collections.abc import Iterator
from fractions import Fraction

from ..gausssum.poly import QuadPoly
from ..utils.errors import NotPrimePower, ParseError
from ..utils.path import FileUtils
from .entry import PureEntry, format_entry, parse_entry
from .graph import MultiGraph
from .matrix import PureMatrix


def _lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for line_no, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            yield line_no, body.split()


def _int(token: str, line_no: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected an integer, got {token!r}", line_no) from None


def _header(lines: Iterator[tuple[int, list[str]]], keyword: str) -> tuple[int, list[str]]:
    try:
        line_no, tokens = next(lines)
    except StopIteration:
        raise ParseError(f"empty file, expected '{keyword}' header") from None
    if tokens[0] != keyword:
        raise ParseError(f"expected '{keyword}' header, got {tokens[0]!r}", line_no)
    return line_no, tokens[1:]


# ---------------------------------------------------------------------------------------------------- matrix


def parse_matrix(text: str) -> PureMatrix:
    lines = _lines(text)
    line_no, rest = _header(lines, "matrix")
    if len(rest) != 1:
        raise ParseError("header must be 'matrix <m>'", line_no)
    m = _int(rest[0], line_no)
    if m < 1:
        raise ParseError(f"matrix dimension must be positive, got {m}", line_no)
    zero = PureEntry(Fraction(0))
    rows = [[zero] * m for _ in range(m)]
    seen: set[tuple[int, int]] = set()
    for line_no, tokens in lines:
        if len(tokens) < 3:
            raise ParseError("entry line must be 'i j <entry>'", line_no)
        i, j = _int(tokens[0], line_no), _int(tokens[1], line_no)
        if not (0 <= i <= j < m):
            raise ParseError(f"index pair ({i},{j}) is not in the upper triangle of a {m}x{m} matrix", line_no)
        if (i, j) in seen:
            raise ParseError(f"duplicate entry ({i},{j})", line_no)
        seen.add((i, j))
        rows[i][j] = rows[j][i] = parse_entry("".join(tokens[2:]), line_no)
    return PureMatrix.from_rows(rows)


def format_matrix(A: PureMatrix) -> str:
    out = [f"matrix {A.dim}"]
    for i in range(A.dim):
        for j in range(i, A.dim):
            if not A[i, j].is_zero():
                out.append(f"{i} {j} {format_entry(A[i, j])}")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------------------------------- graph


def parse_graph(text: str) -> MultiGraph:
    lines = _lines(text)
    line_no, rest = _header(lines, "graph")
    if len(rest) != 1:
        raise ParseError("header must be 'graph <n>'", line_no)
    n = _int(rest[0], line_no)
    if n < 0:
        raise ParseError(f"vertex count must be non-negative, got {n}", line_no)
    edges = []
    for line_no, tokens in lines:
        if len(tokens) != 3:
            raise ParseError("edge line must be 'u v mult'", line_no)
        u, v, t = (_int(tok, line_no) for tok in tokens)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"edge ({u},{v}) out of range for {n} vertices", line_no)
        if t < 1:
            raise ParseError(f"multiplicity must be positive, got {t}", line_no)
        edges.append((u, v, t))
    return MultiGraph(n, tuple(edges))


def format_graph(G: MultiGraph) -> str:
    out = [f"graph {G.vertex_count}"]
    out += [f"{u} {v} {t}" for u, v, t in G.edges]
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------------------------------- polynomial


def _keyed(token: str, key: str, line_no: int) -> int:
    name, sep, value = token.partition("=")
    if not sep or name != key:
        raise ParseError(f"expected '{key}=<int>', got {token!r}", line_no)
    return _int(value, line_no)


def parse_poly(text: str) -> QuadPoly:
    lines = _lines(text)
    line_no, rest = _header(lines, "poly")
    if len(rest) != 2:
        raise ParseError("header must be 'poly q=<q> n=<n>'", line_no)
    q, n = _keyed(rest[0], "q", line_no), _keyed(rest[1], "n", line_no)
    quad: dict[tuple[int, int], int] = {}
    lin: dict[int, int] = {}
    const = 0
    for line_no, tokens in lines:
        kind, args = tokens[0], [_int(tok, line_no) for tok in tokens[1:]]
        if kind == "q" and len(args) == 3:
            i, j, c = args
            if not (0 <= i <= j < n):
                raise ParseError(f"quadratic term ({i},{j}) must satisfy 0 <= i <= j < {n}", line_no)
            quad[(i, j)] = quad.get((i, j), 0) + c
        elif kind == "l" and len(args) == 2:
            i, c = args
            if not 0 <= i < n:
                raise ParseError(f"linear term index {i} out of range", line_no)
            lin[i] = lin.get(i, 0) + c
        elif kind == "k" and len(args) == 1:
            const += args[0]
        else:
            raise ParseError(f"unknown term line {' '.join(tokens)!r}", line_no)
    try:
        return QuadPoly.build(q, n, quad, lin, const)
    except (ValueError, NotPrimePower) as e:
        raise ParseError(str(e), line_no) from e


def format_poly(f: QuadPoly) -> str:
    out = [f"poly q={f.q} n={f.n}"]
    out += [f"q {i} {j} {c}" for (i, j), c in sorted(f.quad.items())]
    out += [f"l {i} {c}" for i, c in sorted(f.lin.items())]
    if f.const:
        out.append(f"k {f.const}")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------------------------------- files


def read_matrix(path: str | pathlib.Path) -> PureMatrix:
    return parse_matrix(FileUtils.read_text(path))


def read_graph(path: str | pathlib.Path) -> MultiGraph:
    return parse_graph(FileUtils.read_text(path))


def read_poly(path: str | pathlib.Path) -> QuadPoly:
    return parse_poly(FileUtils.read_text(path))
