"""Circling and boxing masks, and the type-D decorated-row components.

An entry is circled when it sits on its cone hyperplane (the row-chain lower
bound is tight) and boxed when it sits on its polytope hyperplane (the
highest-weight upper bound is tight).  An entry may carry both marks; the
coefficient rules send that case to zero.

In type D the contribution of a row is organized by connected components of
equal, chain-comparable entries.  The two central entries of a row are not
mutually comparable; whether an equal central pair with no equal neighbour
still forms one component is governed by ``Conventions.d_component_rule``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .conventions import DEFAULT, Conventions
from .patterns import (LittelmannPattern, PatternAggregates, Position,
                       _chain_lower_bound, _chain_tight, _upper_bound_agg,
                       polytope_satisfied, row_end)
from .weightpoly import Weight


def circling_lower_bound(L: LittelmannPattern, pos: Position) -> int | Fraction:
    """Cone lower bound for the entry at ``pos``; the halved middle case of
    type B is returned as an exact Fraction."""
    i, j = pos
    if not (1 <= i <= len(L.rows) and i <= j <= row_end(L.spec, i)):
        raise ValueError(f"position {pos} is outside the {L.spec} shape")
    return _chain_lower_bound(L.a, L.spec, i, j)


@dataclass(frozen=True)
class ComponentD:
    """Maximal run of equal entries in one type-D row.

    ``kind`` is "generic", "ml" (spans the middle asymmetrically) or "sml"
    (spans the middle symmetrically: j1 + j2 = 2r - 1).  ``length`` is half
    the vertex count of a symmetric run; ``shorter_leg_col`` points at the
    run end nearer the middle for an asymmetric one.
    """

    row: int
    j1: int
    j2: int
    value: int
    kind: str
    length: int | None = None
    shorter_leg_col: int | None = None


@dataclass(frozen=True)
class DecoratedPattern:
    pattern: LittelmannPattern
    lam: Weight
    circled: tuple[tuple[bool, ...], ...]
    boxed: tuple[tuple[bool, ...], ...]
    components: tuple[ComponentD, ...]
    conv: Conventions = DEFAULT

    def is_circled(self, i: int, j: int) -> bool:
        return self.circled[i - 1][j - i]

    def is_boxed(self, i: int, j: int) -> bool:
        return self.boxed[i - 1][j - i]


def _row_components(L: LittelmannPattern, conv: Conventions) -> tuple[ComponentD, ...]:
    if L.spec.family != "D":
        return ()
    r = L.spec.rank
    out: list[ComponentD] = []
    for i, row in enumerate(L.rows, start=1):
        end = row_end(L.spec, i)
        runs: list[tuple[int, int]] = []
        j = i
        while j <= end:
            k = j
            while k + 1 <= end and L.a(i, k + 1) == L.a(i, j):
                k += 1
            runs.append((j, k))
            j = k + 1
        if conv.d_component_rule == "strict":
            split = []
            for j1, j2 in runs:
                if (j1, j2) == (r - 1, r):
                    # equal central pair with no shared equal neighbour
                    split.extend([(r - 1, r - 1), (r, r)])
                else:
                    split.append((j1, j2))
            runs = split
        for j1, j2 in runs:
            out.append(_classify(L, i, j1, j2, conv))
    return tuple(out)


def _classify(L: LittelmannPattern, i: int, j1: int, j2: int,
              conv: Conventions) -> ComponentD:
    r = L.spec.rank
    if conv.ml_span_rule == "legs":
        spans = j1 <= r - 2 and j2 >= r + 1
    else:
        spans = j1 <= r - 1 and j2 >= r
    value = L.a(i, j1)
    if not spans:
        return ComponentD(i, j1, j2, value, "generic")
    if j1 + j2 == 2 * r - 1:
        return ComponentD(i, j1, j2, value, "sml", length=r - j1)
    left, right = (r - 1) - j1, j2 - r
    shorter = j1 if left < right else j2
    return ComponentD(i, j1, j2, value, "ml", shorter_leg_col=shorter)


def build_components_D(dp: DecoratedPattern) -> tuple[ComponentD, ...]:
    """Partition each row of a type-D decorated pattern into components."""
    if dp.pattern.spec.family != "D":
        raise ValueError("decorated-graph components exist only in type D")
    return _row_components(dp.pattern, dp.conv)


def decorate(L: LittelmannPattern, lam: Weight,
             conv: Conventions = DEFAULT) -> DecoratedPattern:
    """Attach circling/boxing masks for a pattern inside the ``lam`` polytope."""
    lam = tuple(lam)
    if not polytope_satisfied(L, lam, conv):
        raise ValueError("pattern lies outside the highest-weight polytope")
    agg = PatternAggregates(L, conv)
    circ, box = [], []
    for idx, row in enumerate(L.rows):
        i = idx + 1
        crow, brow = [], []
        for off, v in enumerate(row):
            j = i + off
            crow.append(_chain_tight(L.a, L.spec, i, j))
            brow.append(v == _upper_bound_agg(agg, lam, i, j))
        circ.append(tuple(crow))
        box.append(tuple(brow))
    return DecoratedPattern(
        pattern=L,
        lam=lam,
        circled=tuple(circ),
        boxed=tuple(box),
        components=_row_components(L, conv),
        conv=conv,
    )


def render(dp: DecoratedPattern) -> str:
    """Fixed-width grid with (x) for circled, [x] for boxed, [(x)] for both."""
    cells: list[list[str]] = []
    for i, row in enumerate(dp.pattern.rows, start=1):
        line = []
        for off, v in enumerate(row):
            j = i + off
            tok = str(v)
            if dp.is_circled(i, j):
                tok = f"({tok})"
            if dp.is_boxed(i, j):
                tok = f"[{tok}]"
            line.append(tok)
        cells.append(line)
    width = max(len(tok) for line in cells for tok in line)
    lines = []
    for i, line in enumerate(cells):
        pad = " " * (i * (width + 1))
        lines.append(pad + " ".join(tok.rjust(width) for tok in line))
    return "\n".join(lines)
