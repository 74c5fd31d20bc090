"""Schur-positivity order on skew diagrams and finite poset models of it."""

from __future__ import annotations

from collections.abc import Callable, Iterable
from dataclasses import dataclass

from .diagrams import (
    DEFAULT_ENUMERATION_LIMIT,
    SkewDiagram,
    _rectangle_table,
    enumerate_basic_skew,
    is_ribbon,
    profile,
)
from .errors import DomainError
from .lr import (
    DEFAULT_EXPANSION_LIMIT,
    ComparisonResult,
    Relation,
    SchurVector,
    compare_vectors,
    expand,
    is_multiplicity_free_vec,
)
from .partitions import dominance_leq, partitions_of


def necessary_filter(a: SkewDiagram, b: SkewDiagram) -> bool:
    """Cheap necessary conditions for s_a - s_b to be Schur positive.

    If the difference is Schur positive then a's row and column profiles are
    dominated by b's, and a contains no more m-by-n cell rectangles than b
    for any m, n.  A False return therefore refutes positivity; True decides
    nothing.
    """
    if a.size != b.size:
        raise DomainError("necessary_filter requires diagrams of equal size")
    rows_a, cols_a = profile(a)
    rows_b, cols_b = profile(b)
    if not dominance_leq(rows_a, rows_b) or not dominance_leq(cols_a, cols_b):
        return False
    table_b = _rectangle_table(b.outer, b.inner)
    for key, count in _rectangle_table(a.outer, a.inner).items():
        if count > table_b.get(key, 0):
            return False
    return True


def compare_diagrams(
    a: SkewDiagram, b: SkewDiagram, max_size: int = DEFAULT_EXPANSION_LIMIT
) -> ComparisonResult:
    """Compare the skew Schur functions of two diagrams.

    Inexpensive refutations run first: diagrams of different sizes are
    incomparable, as are ribbons with different row counts; when the
    necessary conditions fail in both directions no expansion is needed.
    Otherwise the answer comes from the full expansions.
    """
    if a.size != b.size:
        return ComparisonResult(Relation.INCOMPARABLE)
    if a == b:
        return ComparisonResult(Relation.EQUAL, SchurVector())
    if is_ribbon(a) and is_ribbon(b) and a.num_rows != b.num_rows:
        return ComparisonResult(Relation.INCOMPARABLE)
    a_over_b = necessary_filter(a, b)
    b_over_a = necessary_filter(b, a)
    if not a_over_b and not b_over_a:
        return ComparisonResult(Relation.INCOMPARABLE)
    result = compare_vectors(expand(a, max_size), expand(b, max_size))
    if result.relation is Relation.GREATER:
        assert a_over_b
    elif result.relation is Relation.LESS:
        assert b_over_a
    elif result.relation is Relation.EQUAL:
        assert a_over_b and b_over_a
    return result


@dataclass(frozen=True)
class SchurClass:
    """All input diagrams sharing one Schur expansion."""

    members: tuple[SkewDiagram, ...]
    expansion: SchurVector

    @property
    def representative(self) -> SkewDiagram:
        return self.members[0]


@dataclass(frozen=True)
class PosetModel:
    """Schur-positivity order on the expansion classes of a set of diagrams.

    leq[i][j] says class i sits below class j; hasse lists the cover pairs
    (lower, upper) of the transitive reduction.
    """

    classes: tuple[SchurClass, ...]
    leq: tuple[tuple[bool, ...], ...]
    hasse: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.classes)

    def index_of(self, diagram: SkewDiagram) -> int:
        for i, cls in enumerate(self.classes):
            if diagram in cls.members:
                return i
        raise DomainError(f"{diagram!r} is not a member of this poset")


def build_poset(
    diagrams: Iterable[SkewDiagram], max_size: int = DEFAULT_EXPANSION_LIMIT
) -> PosetModel:
    """Group diagrams by Schur expansion and order the classes.

    Each expansion is computed once; classes are compared coefficientwise.
    Class lists and members are sorted by shape, so the model is
    reproducible for a given input set.
    """
    unique = sorted(set(diagrams), key=SkewDiagram.sort_key)
    if len({d.size for d in unique}) > 1:
        raise DomainError("poset construction requires diagrams of equal size")

    by_expansion: dict[SchurVector, list[SkewDiagram]] = {}
    for diagram in unique:
        by_expansion.setdefault(expand(diagram, max_size), []).append(diagram)
    classes = tuple(
        SchurClass(tuple(members), vec)
        for vec, members in sorted(
            by_expansion.items(), key=lambda kv: kv[1][0].sort_key()
        )
    )

    n = len(classes)
    leq = [[False] * n for _ in range(n)]
    for i in range(n):
        leq[i][i] = True
        for j in range(i + 1, n):
            rel = compare_vectors(classes[i].expansion, classes[j].expansion).relation
            if rel is Relation.LESS:
                leq[i][j] = True
            elif rel is Relation.GREATER:
                leq[j][i] = True

    hasse = []
    for i in range(n):
        for j in range(n):
            if i == j or not leq[i][j]:
                continue
            if not any(leq[i][k] and leq[k][j] for k in range(n) if k != i and k != j):
                hasse.append((i, j))

    return PosetModel(
        classes,
        tuple(tuple(row) for row in leq),
        tuple(sorted(hasse)),
    )


def _linear_extension(model: PosetModel) -> list[int]:
    n = len(model)
    return sorted(range(n), key=lambda i: sum(model.leq[j][i] for j in range(n)))


def check_graded(model: PosetModel) -> bool:
    """Whether all maximal chains between any two comparable elements have
    equal length."""
    n = len(model)
    succ: list[list[int]] = [[] for _ in range(n)]
    for lo, hi in model.hasse:
        succ[lo].append(hi)
    order = _linear_extension(model)
    for x in range(n):
        longest = {x: 0}
        shortest = {x: 0}
        for v in order:
            if v not in longest:
                continue
            for w in succ[v]:
                longest[w] = max(longest.get(w, 0), longest[v] + 1)
                shortest[w] = min(shortest.get(w, n + 1), shortest[v] + 1)
        for y in range(n):
            if y != x and model.leq[x][y] and longest[y] != shortest[y]:
                return False
    return True


def check_join_semilattice(model: PosetModel) -> bool:
    """Whether every pair with a common upper bound has a least one."""
    n = len(model)
    for i in range(n):
        for j in range(i, n):
            uppers = [k for k in range(n) if model.leq[i][k] and model.leq[j][k]]
            if uppers and not any(
                all(model.leq[u][k] for k in uppers) for u in uppers
            ):
                return False
    return True


def check_convex(model: PosetModel, member: Callable[[SchurClass], bool]) -> bool:
    """Whether the classes satisfying the predicate form a convex subposet:
    no outside class sits strictly between two member classes."""
    n = len(model)
    flags = [member(cls) for cls in model.classes]
    for b in range(n):
        if flags[b]:
            continue
        below = any(flags[a] and a != b and model.leq[a][b] for a in range(n))
        above = any(flags[c] and c != b and model.leq[b][c] for c in range(n))
        if below and above:
            return False
    return True


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of an exhaustive cross-check: pair count and disagreements."""

    checked: int
    disagreements: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.disagreements


def convexity_report(
    n: int, max_enum: int = DEFAULT_ENUMERATION_LIMIT
) -> VerifyReport:
    """Check convexity of the distinguished families inside the size-n poset.

    Families: ribbon classes with a fixed row count, their multiplicity-free
    parts, and the fibers with a fixed row profile.
    """
    model = build_poset(enumerate_basic_skew(n, max_enum))
    checked = 0
    bad = []

    def audit(tag: str, member: Callable[[SchurClass], bool]) -> None:
        nonlocal checked
        checked += 1
        if not check_convex(model, member):
            bad.append(tag)

    def ribbon_rows(cls: SchurClass, rows: int) -> bool:
        return any(is_ribbon(d) and d.num_rows == rows for d in cls.members)

    for rows in range(1, n + 1):
        audit(
            f"ribbons with {rows} rows",
            lambda cls, rows=rows: ribbon_rows(cls, rows),
        )
        audit(
            f"multiplicity-free ribbons with {rows} rows",
            lambda cls, rows=rows: ribbon_rows(cls, rows)
            and is_multiplicity_free_vec(cls.expansion),
        )
    for lam in partitions_of(n):
        audit(
            f"row profile {lam}",
            lambda cls, lam=lam: profile(cls.representative)[0] == lam,
        )
    return VerifyReport(checked, tuple(bad))
