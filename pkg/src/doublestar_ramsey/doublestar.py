"""Detection and construction of monochromatic double stars ``S(m1, m2)``.

A double star on centres ``v, w`` exists in colour ``C`` iff ``vw`` has
colour ``C``, ``d_C(v) > m1``, ``d_C(w) > m2`` and
``|N_C(v) | N_C(w)| >= m1 + m2 + 2``.  Sufficiency is the greedy leaf
choice in :func:`embed_at`; necessity is plain counting (the union must
hold both centres and all ``m1 + m2`` leaves).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .colouring import BLUE, RED, Colour, Colouring2, bits, to_mask


@dataclass(frozen=True)
class DoubleStarSpec:
    """Leaf counts of ``S(m1, m2)``; normalized so that ``m1 >= m2 >= 1``."""

    m1: int
    m2: int

    def __post_init__(self) -> None:
        m1, m2 = self.m1, self.m2
        if m1 < m2:
            m1, m2 = m2, m1
            object.__setattr__(self, "m1", m1)
            object.__setattr__(self, "m2", m2)
        if m2 < 1:
            raise ValueError(f"leaf counts must be positive, got ({self.m1}, {self.m2})")

    @property
    def order(self) -> int:
        """Number of vertices of the double star."""
        return self.m1 + self.m2 + 2

    def __str__(self) -> str:
        return f"S({self.m1},{self.m2})"


@dataclass(frozen=True)
class Embedding:
    colour: Colour
    centre1: int
    centre2: int
    leaves1: tuple[int, ...]
    leaves2: tuple[int, ...]

    def vertices(self) -> tuple[int, ...]:
        return (self.centre1, self.centre2) + self.leaves1 + self.leaves2


class PreconditionError(ValueError):
    """An operation was called outside its documented domain."""


def _feasible(adj: tuple[int, ...], v: int, w: int, m1: int, m2: int) -> bool:
    nv, nw = adj[v], adj[w]
    return (
        nv.bit_count() > m1
        and nw.bit_count() > m2
        and (nv | nw).bit_count() >= m1 + m2 + 2
    )


def centre_feasible(c: Colouring2, colour: Colour, v: int, w: int, spec: DoubleStarSpec) -> bool:
    """Whether ``S(m1, m2)`` with ``v`` carrying ``m1`` leaves and ``w``
    carrying ``m2`` leaves can be embedded on centre edge ``vw``."""
    if c.colour(v, w) is not colour:
        raise PreconditionError(f"edge ({v}, {w}) is not {colour.name.lower()}")
    return _feasible(c.adjacency(colour), v, w, spec.m1, spec.m2)


def _lowest(mask: int, k: int) -> list[int]:
    out = []
    for x in bits(mask):
        if len(out) == k:
            break
        out.append(x)
    return out


def embed_at(c: Colouring2, colour: Colour, v: int, w: int, spec: DoubleStarSpec) -> Embedding:
    """Greedy embedding on centres ``(v, w)``.

    ``v`` takes its private neighbours first (those outside ``N(w) + w``),
    lowest index first, then tops up from the common neighbourhood; ``w``
    then takes the lowest-index neighbours that remain.
    """
    if not centre_feasible(c, colour, v, w, spec):
        raise PreconditionError(f"centres ({v}, {w}) cannot carry {spec} in {colour.name.lower()}")
    adj = c.adjacency(colour)
    nv, nw = adj[v], adj[w]
    private = nv & ~nw & ~(1 << w)
    leaves1 = _lowest(private, spec.m1)
    if len(leaves1) < spec.m1:
        leaves1 += _lowest(nv & nw, spec.m1 - len(leaves1))
    leaves2 = _lowest(nw & ~(1 << v) & ~to_mask(leaves1), spec.m2)
    if len(leaves1) != spec.m1 or len(leaves2) != spec.m2:
        raise AssertionError("greedy ran out of leaves on a feasible centre pair")
    return Embedding(colour, v, w, tuple(sorted(leaves1)), tuple(leaves2))


def find_monochromatic(c: Colouring2, spec: DoubleStarSpec) -> Optional[Embedding]:
    """First monochromatic ``S(m1, m2)`` in scan order, or ``None``.

    Scan order: red before blue, then ordered centre pairs ``(v, w)`` in
    lexicographic order.
    """
    m1, m2 = spec.m1, spec.m2
    if spec.order > c.n:
        return None
    need = m1 + m2 + 2
    for colour in (RED, BLUE):
        adj = c.adjacency(colour)
        for v in range(c.n):
            nv = adj[v]
            if nv.bit_count() <= m1:
                continue
            for w in bits(nv):
                nw = adj[w]
                if nw.bit_count() > m2 and (nv | nw).bit_count() >= need:
                    return embed_at(c, colour, v, w, spec)
    return None


def has_monochromatic(c: Colouring2, spec: DoubleStarSpec) -> bool:
    return find_monochromatic(c, spec) is not None


def feasible_pairs(c: Colouring2, spec: DoubleStarSpec) -> int:
    """Count (colour, ordered centre pair) combinations that carry a copy."""
    m1, m2 = spec.m1, spec.m2
    total = 0
    for colour in (RED, BLUE):
        adj = c.adjacency(colour)
        for v in range(c.n):
            if adj[v].bit_count() <= m1:
                continue
            for w in bits(adj[v]):
                if _feasible(adj, v, w, m1, m2):
                    total += 1
    return total


def validate_embedding(c: Colouring2, spec: DoubleStarSpec, e: Embedding) -> bool:
    n = c.n
    verts = e.vertices()
    if any(not isinstance(x, int) or not 0 <= x < n for x in verts):
        return False
    if len(set(verts)) != len(verts):
        return False
    if len(e.leaves1) != spec.m1 or len(e.leaves2) != spec.m2:
        return False
    adj = c.adjacency(e.colour)
    if not adj[e.centre1] >> e.centre2 & 1:
        return False
    if any(not adj[e.centre1] >> x & 1 for x in e.leaves1):
        return False
    return all(adj[e.centre2] >> x & 1 for x in e.leaves2)


# --- certificate text -----------------------------------------------------


def format_certificate(e: Embedding) -> str:
    return (
        f"colour {e.colour.value}\n"
        f"centre1 {e.centre1}\n"
        f"centre2 {e.centre2}\n"
        f"leaves1 {' '.join(map(str, e.leaves1))}\n"
        f"leaves2 {' '.join(map(str, e.leaves2))}\n"
    )


def parse_certificate(text: str) -> Embedding:
    fields: dict[str, list[str]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, *values = line.split()
        if key in fields:
            raise ValueError(f"duplicate key {key!r} at line {lineno}")
        fields[key] = values
    missing = {"colour", "centre1", "centre2", "leaves1", "leaves2"} - fields.keys()
    if missing:
        raise ValueError(f"certificate missing keys: {', '.join(sorted(missing))}")
    if len(fields["colour"]) != 1 or fields["colour"][0] not in ("R", "B"):
        raise ValueError("certificate colour must be R or B")
    try:
        (c1,), (c2,) = fields["centre1"], fields["centre2"]
        return Embedding(
            Colour(fields["colour"][0]),
            int(c1),
            int(c2),
            tuple(int(x) for x in fields["leaves1"]),
            tuple(int(x) for x in fields["leaves2"]),
        )
    except ValueError as exc:
        raise ValueError(f"malformed certificate: {exc}") from None
