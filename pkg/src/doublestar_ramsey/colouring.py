"""Red/blue edge 2-colourings of complete graphs.

Neighbourhoods are stored as Python ints used as bitsets: bit ``j`` of
``adjacency(RED)[i]`` is set iff edge ``{i, j}`` is red.  Blue is the
complement inside ``K_n``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 4096


class Colour(enum.Enum):
    RED = "R"
    BLUE = "B"

    @property
    def other(self) -> Colour:
        return Colour.BLUE if self is Colour.RED else Colour.RED

    @classmethod
    def from_char(cls, ch: str) -> Colour:
        return cls(ch)


RED = Colour.RED
BLUE = Colour.BLUE


class ColouringFormatError(ValueError):
    """Malformed colouring text; ``line`` is the 1-based physical line."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"{message} at line {line}"
        super().__init__(message)


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Colouring2:
    """Immutable 2-colouring of the edges of ``K_n``.

    ``red[i]`` is the bitset of red neighbours of ``i``.  Use
    :meth:`from_edges`, :meth:`from_function` or :func:`parse_colouring`
    rather than building the masks by hand.
    """

    n: int
    red: tuple[int, ...]
    blue: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        n = self.n
        if n < 2:
            raise ValueError(f"n must be at least 2, got {n}")
        if n > MAX_VERTICES:
            raise ValueError(f"n={n} exceeds the supported maximum {MAX_VERTICES}")
        if len(self.red) != n:
            raise ValueError("red adjacency must have one mask per vertex")
        full = (1 << n) - 1
        for i, row in enumerate(self.red):
            if row & ~full or row >> i & 1:
                raise ValueError(f"bad adjacency mask for vertex {i}")
            for j in bits(row):
                if not self.red[j] >> i & 1:
                    raise ValueError(f"asymmetric red adjacency at {{{i}, {j}}}")
        blue = tuple(full ^ row ^ (1 << i) for i, row in enumerate(self.red))
        object.__setattr__(self, "blue", blue)

    @classmethod
    def _trusted(cls, n: int, red: tuple[int, ...]) -> Colouring2:
        # skips validation; callers guarantee symmetric masks without loops
        self = object.__new__(cls)
        full = (1 << n) - 1
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "red", red)
        object.__setattr__(self, "blue", tuple(full ^ row ^ (1 << i) for i, row in enumerate(red)))
        return self

    @classmethod
    def from_edges(cls, n: int, red_edges: Iterable[tuple[int, int]]) -> Colouring2:
        """Colour the listed edges red and every other edge blue."""
        rows = [0] * n
        for i, j in red_edges:
            if i == j or not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"invalid edge ({i}, {j}) for n={n}")
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        return cls(n, tuple(rows))

    @classmethod
    def from_function(cls, n: int, colour_of) -> Colouring2:
        """Build from ``colour_of(i, j) -> Colour`` called once per ``i < j``."""
        return cls.from_edges(
            n, ((i, j) for i in range(n) for j in range(i + 1, n) if colour_of(i, j) is RED)
        )

    @classmethod
    def monochromatic(cls, n: int, colour: Colour = RED) -> Colouring2:
        full = (1 << n) - 1
        if colour is RED:
            return cls(n, tuple(full ^ (1 << i) for i in range(n)))
        return cls(n, (0,) * n)

    def adjacency(self, colour: Colour) -> tuple[int, ...]:
        return self.red if colour is RED else self.blue

    def colour(self, i: int, j: int) -> Colour:
        self._check_vertex(i)
        self._check_vertex(j)
        if i == j:
            raise ValueError("a vertex has no edge to itself")
        return RED if self.red[i] >> j & 1 else BLUE

    def swapped(self) -> Colouring2:
        """The same colouring with red and blue exchanged."""
        return Colouring2(self.n, self.blue)

    def edges(self) -> Iterator[tuple[int, int]]:
        n = self.n
        for i in range(n):
            for j in range(i + 1, n):
                yield i, j

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range for n={self.n}")


def neighbourhood(c: Colouring2, v: int, colour: Colour) -> frozenset[int]:
    c._check_vertex(v)
    return frozenset(bits(c.adjacency(colour)[v]))


def degree(c: Colouring2, v: int, colour: Colour) -> int:
    c._check_vertex(v)
    return c.adjacency(colour)[v].bit_count()


def max_degree(c: Colouring2, colour: Colour) -> int:
    return max(row.bit_count() for row in c.adjacency(colour))


def min_degree(c: Colouring2, colour: Colour) -> int:
    return min(row.bit_count() for row in c.adjacency(colour))


# --- text format v1 -------------------------------------------------------


def parse_colouring(text: str) -> Colouring2:
    """Parse format v1: ``n <int>`` then ``n-1`` rows of R/B characters.

    Row ``i`` holds the colours of edges ``{i, i+1}, ..., {i, n-1}``.
    Comment lines (``#``) and blank lines are skipped; CR is tolerated.
    """
    n: int | None = None
    rows: list[int] = []
    last_line = 0
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip("\r")
        if not line.strip() or line.startswith("#"):
            continue
        last_line = lineno
        if n is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "n":
                raise ColouringFormatError("malformed header, expected 'n <integer>'", lineno)
            try:
                n = int(parts[1])
            except ValueError:
                raise ColouringFormatError("malformed header, expected 'n <integer>'", lineno) from None
            if n < 2:
                raise ColouringFormatError(f"n must be at least 2, got {n}", lineno)
            if n > MAX_VERTICES:
                raise ColouringFormatError(f"n={n} exceeds the supported maximum {MAX_VERTICES}", lineno)
            red = [0] * n
            continue
        i = len(rows)
        if i >= n - 1:
            raise ColouringFormatError(f"too many data lines for n={n}", lineno)
        expected = n - 1 - i
        if len(line) != expected:
            raise ColouringFormatError(
                f"wrong row length {len(line)}, expected {expected}", lineno
            )
        for offset, ch in enumerate(line):
            if ch == "R":
                j = i + 1 + offset
                red[i] |= 1 << j
                red[j] |= 1 << i
            elif ch != "B":
                raise ColouringFormatError("invalid colour character", lineno)
        rows.append(i)
    if n is None:
        raise ColouringFormatError("missing header", last_line + 1)
    if len(rows) != n - 1:
        raise ColouringFormatError(
            f"expected {n - 1} data lines, found {len(rows)}", last_line + 1
        )
    return Colouring2(n, tuple(red))


def serialize_colouring(c: Colouring2) -> str:
    n = c.n
    lines = [f"n {n}"]
    for i in range(n - 1):
        row = c.red[i]
        lines.append("".join("R" if row >> j & 1 else "B" for j in range(i + 1, n)))
    return "\n".join(lines) + "\n"


def read_colouring(path) -> Colouring2:
    with open(path, encoding="ascii", newline="") as fh:
        return parse_colouring(fh.read())


def write_colouring(path, c: Colouring2) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(serialize_colouring(c))


def colouring_from_bits(n: int, word: int, edge_order: Sequence[tuple[int, int]] | None = None) -> Colouring2:
    """Decode ``word`` (bit k set = k-th edge red) into a colouring.

    Edges are numbered lexicographically unless ``edge_order`` is given.
    Used by exhaustive sweeps.
    """
    if edge_order is None:
        edge_order = [(i, j) for i in range(n) for j in range(i + 1, n)]
    rows = [0] * n
    for k, (i, j) in enumerate(edge_order):
        if word >> k & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Colouring2._trusted(n, tuple(rows))
