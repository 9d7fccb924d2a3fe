"""Cells of the Taylor complex and its least-common-multiple table.

A cell is a plain ``int`` bitmask over generator indices: bit ``i`` set means
generator ``i`` belongs to the cell.  The empty cell is ``0`` and the full
cell is ``(1 << n) - 1``.  Since the generator sequence is ordered smallest
first, a generator's index is also its position in the total order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .algebra import Monomial, MonomialIdeal, quotient

DEFAULT_MAX_GENERATORS = 24


def cell_members(cell: int) -> tuple[int, ...]:
    """Generator indices of a cell, ascending."""
    out = []
    while cell:
        low = cell & -cell
        out.append(low.bit_length() - 1)
        cell ^= low
    return tuple(out)


def cell_of(indices) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def cardinality(cell: int) -> int:
    return cell.bit_count()


class TaylorComplex:
    """All ``2**n`` cells of an ideal with their lcm labels precomputed.

    ``lcms[cell]`` holds the lcm of the member generators; distinct exponent
    vectors are interned to a single Monomial instance, so two cells have
    equal lcms exactly when their table entries are the same object.
    Immutable after construction.
    """

    __slots__ = ("ideal", "n", "lcms", "_bridge_cache")

    def __init__(self, ideal: MonomialIdeal, lcms: list[Monomial]):
        self.ideal = ideal
        self.n = ideal.n
        self.lcms = lcms
        self._bridge_cache = None

    def lcm(self, cell: int) -> Monomial:
        return self.lcms[cell]

    def cells_of_cardinality(self, k: int) -> list[int]:
        """Cells with k members, in ascending bitmask order."""
        return [c for c in range(1 << self.n) if c.bit_count() == k]

    def bridges(self, cell: int) -> list[int]:
        """Members whose removal keeps the lcm, ascending.

        Lcm entries are interned, so identity comparison is exact.
        """
        lcms = self.lcms
        label = lcms[cell]
        return [i for i in cell_members(cell) if lcms[cell ^ (1 << i)] is label]

    def smallest_bridge(self, cell: int) -> int | None:
        """The bridge of minimal position, or None if the cell has none."""
        found = self.bridges(cell)
        return found[0] if found else None

    def bridge_table(self) -> list[tuple[int, ...]]:
        """Bridges of every cell, indexed by cell mask (cached).

        Bridges do not depend on the generator order, so order searches can
        reuse this table across permutations.
        """
        if self._bridge_cache is None:
            self._bridge_cache = [tuple(self.bridges(c)) for c in range(1 << self.n)]
        return self._bridge_cache


def build_taylor(ideal: MonomialIdeal, max_generators: int = DEFAULT_MAX_GENERATORS) -> TaylorComplex:
    """Materialize the full lcm table of the Taylor complex of ``ideal``."""
    n = ideal.n
    if n > max_generators:
        raise ValueError(
            f"ideal has {n} generators, above the cap of {max_generators}; "
            f"pass a larger max_generators to override"
        )
    context = ideal.context
    one = context.one()
    interned: dict[tuple[int, ...], Monomial] = {one.exponents: one}
    lcms = [one] * (1 << n)
    gens = ideal.generators
    for cell in range(1, 1 << n):
        top = cell.bit_length() - 1
        rest = cell ^ (1 << top)
        exps = tuple(map(max, lcms[rest].exponents, gens[top].exponents))
        mono = interned.get(exps)
        if mono is None:
            mono = Monomial(context, exps)
            interned[exps] = mono
        lcms[cell] = mono
    return TaylorComplex(ideal, lcms)


def incidence_sign(source: int, target: int) -> int:
    """Sign of the facet ``target`` inside ``source``.

    Convention: ``(-1)**j`` where ``j`` is the 0-based rank of the removed
    index among the source members in ascending order.  Any consistent
    simplicial convention works; this one is validated globally by the
    boundary-squares-to-zero checks.
    """
    removed = source ^ target
    if target & ~source or removed.bit_count() != 1:
        raise ValueError(f"cells {source:#x} -> {target:#x} are not a facet pair")
    below = source & (removed - 1)
    return -1 if below.bit_count() & 1 else 1


class DifferentialEntry(NamedTuple):
    coefficient: int
    monomial_factor: Monomial


@dataclass(frozen=True)
class DifferentialMatrix:
    """Sparse matrix of integer-times-monomial entries between cell bases.

    ``rows`` and ``cols`` list basis cells in ascending bitmask order;
    ``entries`` is keyed by ``(row_index, col_index)``.
    """

    rows: tuple[int, ...]
    cols: tuple[int, ...]
    entries: dict[tuple[int, int], DifferentialEntry]


def taylor_differential(tc: TaylorComplex, i: int) -> DifferentialMatrix:
    """Degree-``i`` boundary map of the Taylor complex.

    Rows are the cardinality ``i - 1`` cells, columns the cardinality ``i``
    cells; the entry at a facet pair is the incidence sign together with the
    quotient of the two lcm labels.
    """
    n = tc.n
    if not 0 < i <= n:
        raise ValueError(f"differential degree {i} out of range 1..{n}")
    rows = tuple(tc.cells_of_cardinality(i - 1))
    cols = tuple(tc.cells_of_cardinality(i))
    row_index = {c: k for k, c in enumerate(rows)}
    entries: dict[tuple[int, int], DifferentialEntry] = {}
    for cidx, sigma in enumerate(cols):
        label = tc.lcm(sigma)
        for j in cell_members(sigma):
            tau = sigma ^ (1 << j)
            entries[(row_index[tau], cidx)] = DifferentialEntry(
                incidence_sign(sigma, tau), quotient(label, tc.lcm(tau))
            )
    return DifferentialMatrix(rows, cols, entries)
