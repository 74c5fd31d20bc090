"""Littlewood-Richardson expansion of skew Schur functions in the Schur basis."""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .diagrams import SkewDiagram
from .errors import DomainError
from .partitions import Partition, as_partition, conjugate

DEFAULT_EXPANSION_LIMIT = 16


class SchurVector:
    """A finitely supported map from partitions to positive integer coefficients.

    Represents a Schur-positive symmetric function.  All index partitions must
    have the same size (a skew Schur function is homogeneous), zero terms are
    dropped, and iteration order is descending lexicographic, so equal vectors
    render identically.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Iterable[int], int] | None = None):
        clean: dict[Partition, int] = {}
        for key, coeff in dict(terms or {}).items():
            part = as_partition(key)
            c = int(coeff)
            if c < 0:
                raise DomainError(f"coefficient of {part} is negative: {c}")
            if c:
                clean[part] = clean.get(part, 0) + c
        if len({sum(p) for p in clean}) > 1:
            raise DomainError(f"mixed degrees in one expansion: {sorted(clean)}")
        self._terms = dict(sorted(clean.items(), reverse=True))

    def degree(self) -> int | None:
        """Common size of the index partitions, or None for the zero vector."""
        for part in self._terms:
            return sum(part)
        return None

    def items(self) -> tuple[tuple[Partition, int], ...]:
        return tuple(self._terms.items())

    def support(self) -> tuple[Partition, ...]:
        return tuple(self._terms)

    def __getitem__(self, key: Iterable[int]) -> int:
        return self._terms.get(as_partition(key), 0)

    def __contains__(self, key: Iterable[int]) -> bool:
        return as_partition(key) in self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self):
        return iter(self._terms)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SchurVector) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __repr__(self) -> str:
        body = ", ".join(f"{p}: {c}" for p, c in self._terms.items())
        return f"SchurVector({{{body}}})"


class Relation(Enum):
    """Outcome of comparing two Schur expansions."""

    EQUAL = "equal"
    GREATER = "greater"
    LESS = "less"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class ComparisonResult:
    """A Relation plus, for strict comparisons, the positive difference."""

    relation: Relation
    difference: SchurVector | None = None


def is_lattice_word(word: Sequence[int]) -> bool:
    """Whether every prefix has at least as many i's as (i+1)'s for all i."""
    counts: dict[int, int] = {}
    for letter in word:
        counts[letter] = counts.get(letter, 0) + 1
        if letter > 1 and counts.get(letter - 1, 0) < counts[letter]:
            return False
    return True


@lru_cache(maxsize=None)
def _expansion_terms(outer: Partition, inner: Partition) -> tuple[tuple[Partition, int], ...]:
    diagram = SkewDiagram(outer, inner)
    cells = diagram.cells()
    n = len(cells)
    if n == 0:
        return (((), 1),)

    # Cells in reading-word order: top to bottom, right to left within a row.
    reading = sorted(cells, key=lambda cell: (cell[0], -cell[1]))
    index = {cell: p for p, cell in enumerate(reading)}
    right = [index.get((r, c + 1)) for r, c in reading]
    above = [index.get((r - 1, c)) for r, c in reading]
    # In an LR filling, row i holds entries at most i; checked against an
    # unbounded reference enumerator on small shapes.
    bound = [r for r, _ in reading]

    entries = [0] * n
    counts = [0] * (diagram.num_rows + 2)
    weights: dict[Partition, int] = {}

    def fill(p: int) -> None:
        if p == n:
            parts = []
            v = 1
            while counts[v]:
                parts.append(counts[v])
                v += 1
            w = tuple(parts)
            weights[w] = weights.get(w, 0) + 1
            return
        lo = 1 if above[p] is None else entries[above[p]] + 1
        hi = bound[p] if right[p] is None else min(bound[p], entries[right[p]])
        for v in range(lo, hi + 1):
            # Appending v keeps the reading word lattice iff v's predecessor
            # stays strictly ahead.
            if v > 1 and counts[v - 1] <= counts[v]:
                continue
            entries[p] = v
            counts[v] += 1
            fill(p + 1)
            counts[v] -= 1

    fill(0)
    return tuple(sorted(weights.items(), reverse=True))


def expand(diagram: SkewDiagram, max_size: int = DEFAULT_EXPANSION_LIMIT) -> SchurVector:
    """Schur expansion of the skew Schur function of the diagram.

    The coefficient of a partition is the number of semistandard fillings of
    the diagram with lattice reading word (read right to left, top to bottom)
    and that content.  Fillings are generated depth-first in reading order,
    cutting branches as soon as the lattice prefix condition fails.
    """
    if diagram.size > max_size:
        raise DomainError(
            f"expansion limited to {max_size} cells, got {diagram.size}"
        )
    return SchurVector(dict(_expansion_terms(diagram.outer, diagram.inner)))


def omega_vec(vec: SchurVector) -> SchurVector:
    """The omega involution: conjugate every index partition."""
    return SchurVector({conjugate(p): c for p, c in vec.items()})


def is_multiplicity_free_vec(vec: SchurVector) -> bool:
    """Whether every coefficient is 0 or 1."""
    return all(c == 1 for _, c in vec.items())


def compare_vectors(v1: SchurVector, v2: SchurVector) -> ComparisonResult:
    """Classify v1 - v2 as equal, greater, less, or incomparable.

    GREATER/LESS come with the positive difference; vectors of different
    degrees are incomparable outright.
    """
    if v1 == v2:
        return ComparisonResult(Relation.EQUAL, SchurVector())
    if v1.degree() != v2.degree():
        return ComparisonResult(Relation.INCOMPARABLE)
    diff = {p: v1[p] - v2[p] for p in set(v1.support()) | set(v2.support())}
    diff = {p: c for p, c in diff.items() if c}
    if all(c > 0 for c in diff.values()):
        return ComparisonResult(Relation.GREATER, SchurVector(diff))
    if all(c < 0 for c in diff.values()):
        return ComparisonResult(Relation.LESS, SchurVector({p: -c for p, c in diff.items()}))
    return ComparisonResult(Relation.INCOMPARABLE)
