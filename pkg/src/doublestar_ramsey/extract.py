"""Witness extraction by replaying the upper-bound argument.

For ``S(m1, m2)`` with ``(sqrt(5)+1)/2 * m2 < m1 < 3 m2`` and
``n >= m1 + m2 + m3 + 1`` vertices, the argument runs as follows:

1. pick a *minor* colour in which every vertex has degree at most ``m1``;
   the other (*major*) colour then has minimum degree ``>= m2 + m3``;
2. fix ``v`` and a set ``A`` of ``m2 + m3`` major neighbours of ``v``;
3. pick ``z`` outside ``A + v`` with few major neighbours in ``A``;
4. any major edge ``uz`` with ``u`` in ``A`` is the centre edge of a copy.

Step 3 relies on every ``w`` in ``A`` having at most ``m1 - m3`` major
neighbours outside ``A + v``.  When that fails for some ``w``, ``(v, w)``
itself carries a copy, so the replay tries it before giving up.

Step 1 is only known non-constructively; if neither colour qualifies,
:func:`extract` falls back to a full scan.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .bounds import m3_of, in_golden_range
from .colouring import BLUE, RED, Colour, Colouring2, bits, max_degree, serialize_colouring
from .doublestar import (
    DoubleStarSpec,
    Embedding,
    PreconditionError,
    _feasible,
    embed_at,
    find_monochromatic,
    format_certificate,
    validate_embedding,
)


class FallbackNeeded(Exception):
    """The replay could not finish; ``partial`` holds whatever was fixed."""

    def __init__(self, reason: str, partial: Optional[dict] = None):
        super().__init__(reason)
        self.reason = reason
        self.partial = partial or {}


class CounterexampleAlarm(RuntimeError):
    """No monochromatic copy exists on a colouring where one must.

    Carries the offending colouring in format v1.
    """

    def __init__(self, spec: DoubleStarSpec, colouring_text: str):
        super().__init__(f"no monochromatic {spec} found; colouring:\n{colouring_text}")
        self.spec = spec
        self.colouring_text = colouring_text


@dataclass(frozen=True)
class ExtractionTrace:
    major_colour: Optional[Colour]
    minor_colour: Optional[Colour]
    m3: int
    v: Optional[int]
    A: tuple[int, ...]
    z: Optional[int]
    u: Optional[int]
    z_red_into_A: Optional[int]
    # largest |N_major(w) - (A + v)| over w in A
    outside_max: Optional[int]
    # "uz": final step; "vw": a vertex of A broke the degree cap; "scan": fallback
    step: str
    embedding: Embedding
    used_fallback: bool
    diagnostic: str = ""

    def render(self) -> str:
        def show(x) -> str:
            if x is None:
                return "-"
            if isinstance(x, Colour):
                return x.value
            if isinstance(x, bool):
                return "true" if x else "false"
            if isinstance(x, tuple):
                return " ".join(map(str, x)) or "-"
            return str(x)

        e = self.embedding
        rows = [
            ("minor_colour", show(self.minor_colour)),
            ("major_colour", show(self.major_colour)),
            ("m3", show(self.m3)),
            ("v", show(self.v)),
            ("A", show(self.A)),
            ("outside_max", show(self.outside_max)),
            ("z", show(self.z)),
            ("z_red_into_A", show(self.z_red_into_A)),
            ("u", show(self.u)),
            ("step", self.step),
            (
                "embedding",
                f"{e.colour.value} {e.centre1}-{e.centre2} "
                f"[{show(e.leaves1)}] [{show(e.leaves2)}]",
            ),
            ("used_fallback", show(self.used_fallback)),
        ]
        if self.diagnostic:
            rows.append(("diagnostic", self.diagnostic))
        return "".join(f"{k} {v}\n" for k, v in rows)


def select_low_colour(c: Colouring2, m1: int) -> Optional[Colour]:
    """A colour whose maximum degree is at most ``m1``; blue wins ties."""
    if max_degree(c, BLUE) <= m1:
        return BLUE
    if max_degree(c, RED) <= m1:
        return RED
    return None


def _check_preconditions(c: Colouring2, spec: DoubleStarSpec) -> int:
    if not in_golden_range(spec):
        raise PreconditionError(f"{spec} is outside (sqrt(5)+1)/2 * m2 < m1 < 3 m2")
    m3 = m3_of(spec)
    need = spec.m1 + spec.m2 + m3 + 1
    if c.n < need:
        raise PreconditionError(f"{spec} needs n >= {need}, got n={c.n}")
    return m3


def extract_via_proof(c: Colouring2, spec: DoubleStarSpec) -> ExtractionTrace:
    """Replay the argument with lowest-index choices throughout.

    Raises :class:`FallbackNeeded` when no colour has maximum degree at
    most ``m1``, or if a step fails (which would contradict the bound).
    """
    m3 = _check_preconditions(c, spec)
    m1, m2 = spec.m1, spec.m2
    minor = select_low_colour(c, m1)
    if minor is None:
        raise FallbackNeeded(f"both colours have a vertex of degree > {m1}", {"m3": m3})
    major = minor.other
    adj = c.adjacency(major)
    size_a = m2 + m3

    v = 0
    A = []
    for x in bits(adj[v]):
        if len(A) == size_a:
            break
        A.append(x)
    if len(A) < size_a:
        # impossible: d_major(v) >= n - 1 - m1 >= m2 + m3
        raise FallbackNeeded("major-colour neighbourhood of v smaller than m2 + m3", {"m3": m3})
    a_mask = sum(1 << x for x in A)
    closed = a_mask | 1 << v
    outside_max = max((adj[w] & ~closed).bit_count() for w in A)

    z, z_into = -1, c.n
    for x in range(c.n):
        if closed >> x & 1:
            continue
        k = (adj[x] & a_mask).bit_count()
        if k < z_into:
            z, z_into = x, k
    partial = dict(m3=m3, major=major, v=v, A=tuple(A), z=z, z_red_into_A=z_into, outside_max=outside_max)
    if z_into == 0:
        raise FallbackNeeded(f"vertex {z} has no major-colour edge into A", partial)
    u = (adj[z] & a_mask & -(adj[z] & a_mask)).bit_length() - 1

    step, diagnostic = "uz", ""
    if _feasible(adj, u, z, m1, m2):
        emb = embed_at(c, major, u, z, spec)
    else:
        for w in A:
            if _feasible(adj, v, w, m1, m2):
                step = "vw"
                diagnostic = f"vertex {w} of A has {(adj[w] & ~closed).bit_count()} > {m1 - m3} neighbours outside A+v"
                emb = embed_at(c, major, v, w, spec)
                break
        else:
            raise FallbackNeeded(f"centre pair ({u}, {z}) is not feasible", partial)
    return ExtractionTrace(
        major_colour=major,
        minor_colour=minor,
        m3=m3,
        v=v,
        A=tuple(A),
        z=z,
        u=u,
        z_red_into_A=z_into,
        outside_max=outside_max,
        step=step,
        embedding=emb,
        used_fallback=False,
        diagnostic=diagnostic,
    )


def extract_trace(c: Colouring2, spec: DoubleStarSpec) -> ExtractionTrace:
    """Like :func:`extract` but keeps the trace, including on fallback."""
    try:
        trace = extract_via_proof(c, spec)
    except FallbackNeeded as fb:
        emb = find_monochromatic(c, spec)
        if emb is None:
            raise CounterexampleAlarm(spec, serialize_colouring(c)) from None
        p = fb.partial
        trace = ExtractionTrace(
            major_colour=p.get("major"),
            minor_colour=p["major"].other if "major" in p else None,
            m3=p["m3"],
            v=p.get("v"),
            A=p.get("A", ()),
            z=p.get("z"),
            u=None,
            z_red_into_A=p.get("z_red_into_A"),
            outside_max=p.get("outside_max"),
            step="scan",
            embedding=emb,
            used_fallback=True,
            diagnostic=fb.reason,
        )
    if not validate_embedding(c, spec, trace.embedding):
        raise AssertionError("extracted embedding failed validation:\n" + format_certificate(trace.embedding))
    return trace


def extract(c: Colouring2, spec: DoubleStarSpec) -> Embedding:
    """A monochromatic ``S(m1, m2)`` in ``c``; always exists above the bound.

    Raises :class:`CounterexampleAlarm` if none is found.
    """
    return extract_trace(c, spec).embedding
