"""Skew diagrams in basic form, the ribbon bijection, and shape statistics."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError
from .partitions import (
    Composition,
    Partition,
    as_composition,
    as_partition,
    conjugate,
    reverse,
)


def _strip_empty_rows(lam: Partition, mu: Partition) -> tuple[Partition, Partition]:
    mu_pad = mu + (0,) * (len(lam) - len(mu))
    kept = [(l, m) for l, m in zip(lam, mu_pad) if l > m]
    lam2 = tuple(l for l, _ in kept)
    mu2 = tuple(m for _, m in kept)
    while mu2 and mu2[-1] == 0:
        mu2 = mu2[:-1]
    return lam2, mu2


def _basic_form(lam: Partition, mu: Partition) -> tuple[Partition, Partition]:
    # Dropping an empty row never creates an empty column (column counts are
    # untouched), so one pass on rows and one on columns suffices.
    lam, mu = _strip_empty_rows(lam, mu)
    if not lam:
        return (), ()
    lam_t, mu_t = _strip_empty_rows(conjugate(lam), conjugate(mu))
    return conjugate(lam_t), conjugate(mu_t)


class SkewDiagram:
    """A skew shape outer/inner, normalized to basic form (no empty rows or columns)."""

    __slots__ = ("outer", "inner", "_cells")

    def __init__(self, outer: Iterable[int] = (), inner: Iterable[int] = ()):
        lam = as_partition(outer)
        mu = as_partition(inner)
        if len(mu) > len(lam) or any(m > l for m, l in zip(mu, lam)):
            raise DomainError(f"inner shape {mu} not contained in outer shape {lam}")
        self.outer, self.inner = _basic_form(lam, mu)
        self._cells = None

    @property
    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    @property
    def num_rows(self) -> int:
        return len(self.outer)

    @property
    def num_cols(self) -> int:
        return self.outer[0] if self.outer else 0

    def row_lengths(self) -> tuple[int, ...]:
        """Cells per row, top to bottom."""
        mu = self.inner + (0,) * (self.num_rows - len(self.inner))
        return tuple(l - m for l, m in zip(self.outer, mu))

    def column_lengths(self) -> tuple[int, ...]:
        """Cells per column, left to right."""
        lam_t = conjugate(self.outer)
        mu_t = conjugate(self.inner) + (0,) * len(lam_t)
        return tuple(l - m for l, m in zip(lam_t, mu_t))

    def cells(self) -> tuple[tuple[int, int], ...]:
        """All (row, column) coordinates, 1-indexed, in row-major order."""
        if self._cells is None:
            mu = self.inner + (0,) * (self.num_rows - len(self.inner))
            self._cells = tuple(
                (i + 1, j)
                for i, (l, m) in enumerate(zip(self.outer, mu))
                for j in range(m + 1, l + 1)
            )
        return self._cells

    def sort_key(self) -> tuple[Partition, Partition]:
        return (self.outer, self.inner)

    def notation(self) -> str:
        """Canonical text form, e.g. '4,3,3/2,2' (inner part omitted when empty)."""
        out = ",".join(map(str, self.outer))
        if self.inner:
            return f"{out}/{','.join(map(str, self.inner))}"
        return out

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SkewDiagram)
            and self.outer == other.outer
            and self.inner == other.inner
        )

    def __hash__(self) -> int:
        return hash((self.outer, self.inner))

    def __repr__(self) -> str:
        return f"SkewDiagram({self.outer!r}, {self.inner!r})"


def profile(diagram: SkewDiagram) -> tuple[Partition, Partition]:
    """Row-length and column-length multisets, each sorted into a partition."""
    rows = tuple(sorted(diagram.row_lengths(), reverse=True))
    cols = tuple(sorted(diagram.column_lengths(), reverse=True))
    return rows, cols


def ribbon_of(alpha: Iterable[int]) -> SkewDiagram:
    """The ribbon whose rows, top to bottom, have the lengths of alpha.

    Consecutive rows overlap in exactly one column, so the result is an
    edgewise-connected skew shape containing no 2x2 block.
    """
    alpha = as_composition(alpha)
    if not alpha:
        raise DomainError("a ribbon needs at least one row")
    ell = len(alpha)
    suffix = 0
    lam = [0] * ell
    for i in range(ell - 1, -1, -1):
        suffix += alpha[i]
        lam[i] = suffix - (ell - 1 - i)
    mu = [lam[i + 1] - 1 for i in range(ell - 1)]
    return SkewDiagram(lam, mu)


def composition_of(diagram: SkewDiagram) -> Composition:
    """Row lengths of a ribbon, top to bottom (inverse of ribbon_of)."""
    if not is_ribbon(diagram):
        raise DomainError(f"{diagram.notation()} is not a ribbon")
    return diagram.row_lengths()


def rotate180(diagram: SkewDiagram) -> SkewDiagram:
    """The diagram rotated half a turn inside its bounding box."""
    if not diagram.outer:
        return SkewDiagram()
    c = diagram.num_cols
    mu = diagram.inner + (0,) * (diagram.num_rows - len(diagram.inner))
    new_outer = tuple(c - m for m in reversed(mu))
    new_inner = tuple(c - l for l in reversed(diagram.outer))
    return SkewDiagram(new_outer, new_inner)


def transpose(diagram: SkewDiagram) -> SkewDiagram:
    """The diagram reflected across its main diagonal."""
    return SkewDiagram(conjugate(diagram.outer), conjugate(diagram.inner))


def is_connected(diagram: SkewDiagram) -> bool:
    """Whether the cells form one edgewise-connected component."""
    cells = set(diagram.cells())
    if not cells:
        return False
    stack = [next(iter(diagram.cells()))]
    seen = {stack[0]}
    while stack:
        r, c = stack.pop()
        for nb in ((r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)):
            if nb in cells and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(cells)


@lru_cache(maxsize=None)
def _rectangle_table(outer: Partition, inner: Partition) -> dict[tuple[int, int], int]:
    """Map (m, n) -> number of m-by-n cell rectangles, omitting zero counts."""
    diagram = SkewDiagram(outer, inner)
    cells = set(diagram.cells())
    table: dict[tuple[int, int], int] = {}
    for i, j in cells:
        width = diagram.num_cols
        m = 0
        while (i + m, j) in cells and width:
            run = 0
            while run < width and (i + m, j + run) in cells:
                run += 1
            width = run
            m += 1
            for n in range(1, width + 1):
                key = (m, n)
                table[key] = table.get(key, 0) + 1
    return table


def rectangle_count(diagram: SkewDiagram, m: int, n: int) -> int:
    """Number of m-row by n-column rectangles of cells inside the diagram."""
    if m < 1 or n < 1:
        raise DomainError("rectangle dimensions must be positive")
    return _rectangle_table(diagram.outer, diagram.inner).get((m, n), 0)


def is_ribbon(diagram: SkewDiagram) -> bool:
    """Whether the diagram is connected and contains no 2x2 block of cells."""
    return (
        diagram.size >= 1
        and is_connected(diagram)
        and rectangle_count(diagram, 2, 2) == 0
    )


@dataclass(frozen=True)
class MfPattern:
    """A row profile written as (m, 1^k, n, 1^l), possibly after reversal.

    m == 0 encodes the one-row ribbon (N), the only case with no such
    two-block form; every longer profile is reported with m >= 1 by
    absorbing leading 1s into the runs.
    """

    m: int
    k: int
    n: int
    l: int
    reversed: bool

    def composition(self) -> Composition:
        body = ((self.m,) if self.m else ()) + (1,) * self.k + (self.n,) + (1,) * self.l
        return tuple(reversed(body)) if self.reversed else body


def mf_pattern(alpha: Iterable[int]) -> MfPattern | None:
    """Decompose alpha (or its reverse) as (m, 1^k, n, 1^l), or return None.

    A ribbon's expansion is multiplicity-free exactly when such a
    decomposition exists.  Ties prefer the unreversed reading, then the
    smallest k.
    """
    alpha = as_composition(alpha)
    if not alpha:
        raise DomainError("mf_pattern needs a non-empty composition")
    if len(alpha) == 1:
        return MfPattern(0, 0, alpha[0], 0, False)
    for rev, beta in ((False, alpha), (True, reverse(alpha))):
        big = [i for i in range(1, len(beta)) if beta[i] > 1]
        if len(big) > 1:
            continue
        q = big[0] if big else 1
        return MfPattern(beta[0], q - 1, beta[q], len(beta) - 1 - q, rev)
    return None


DEFAULT_ENUMERATION_LIMIT = 8


def enumerate_basic_skew(n: int, max_size: int = DEFAULT_ENUMERATION_LIMIT) -> list[SkewDiagram]:
    """All basic skew diagrams with n cells (connected or not), sorted.

    Rows are generated bottom-up as column intervals [s, e] with
    s and e weakly increasing upward, s <= previous e + 1 (no empty
    column), and the bottom row starting at column 1.
    """
    if not 1 <= n <= max_size:
        raise DomainError(f"enumeration size must be in 1..{max_size}, got {n}")
    found: list[SkewDiagram] = []

    def grow(rows: list[tuple[int, int]], used: int) -> None:
        if used == n:
            spans = rows[::-1]
            lam = tuple(e for _, e in spans)
            mu = tuple(s - 1 for s, _ in spans)
            found.append(SkewDiagram(lam, mu))
            return
        s_prev, e_prev = rows[-1]
        for s in range(s_prev, e_prev + 2):
            for e in range(max(s, e_prev), s + (n - used)):
                rows.append((s, e))
                grow(rows, used + e - s + 1)
                rows.pop()

    for e in range(1, n + 1):
        grow([(1, e)], e)
    found.sort(key=SkewDiagram.sort_key)
    return found
