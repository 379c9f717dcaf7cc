"""Canonical colourings showing ``R(S(m1, m2)) > r_b - 1``."""

from __future__ import annotations

from .bounds import r_b
from .colouring import Colouring2
from .doublestar import DoubleStarSpec


def _two_cliques(n: int, split: int) -> Colouring2:
    # red inside {0..split-1} and inside {split..n-1}, blue across
    full = (1 << n) - 1
    low = (1 << split) - 1
    high = full ^ low
    rows = tuple((low if i < split else high) ^ (1 << i) for i in range(n))
    return Colouring2(n, rows)


def canonical_colouring(spec: DoubleStarSpec) -> Colouring2:
    """Good colouring of ``K_{r_b - 1}`` with no monochromatic ``S(m1, m2)``.

    With ``t_i = m_i + 1``:

    * ``t1 > 2 t2``: two red cliques of ``t1 - 1`` vertices each, blue
      between them.  Red components are too small and the blue graph is
      ``K_{m1, m1}``, where no vertex reaches degree ``m1 + 1``.
    * ``t1 <= 2 t2``: a red clique on ``{0, ..., t1 + t2 - 2}``; the
      remaining ``t2 - 1`` vertices are joined in blue to the clique and
      in red among themselves.  Blue is then bipartite with a side of
      only ``m2`` vertices, too small for either colour class of the tree.
    """
    t1, t2 = spec.m1 + 1, spec.m2 + 1
    n = r_b(spec) - 1
    if t1 > 2 * t2:
        return _two_cliques(n, t1 - 1)
    return _two_cliques(n, t1 + t2 - 1)
