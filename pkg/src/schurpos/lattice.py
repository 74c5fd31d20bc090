"""Closed-form model of the multiplicity-free ribbon poset.

Multiplicity-free ribbons with n cells and a fixed number of rows, taken up
to Schur-function equality, are indexed by the dimensions of the rectangle
inside their skew shape.  On those rectangle labels the Schur-positivity
order is a product of two zigzag chains, which makes order tests, covers,
meets, and joins closed-form.  Everything here can be cross-checked against
the Littlewood-Richardson engine, and the verify_* functions do exactly
that.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from itertools import combinations

from .diagrams import mf_pattern, profile, ribbon_of
from .errors import DomainError
from .lr import (
    DEFAULT_EXPANSION_LIMIT,
    Relation,
    SchurVector,
    compare_vectors,
    expand,
    is_multiplicity_free_vec,
)
from .partitions import (
    Composition,
    Partition,
    as_composition,
    as_partition,
    compositions_of,
    conjugate,
    dominance_leq,
    reverse,
)
from .poset import VerifyReport, compare_diagrams


def _is_canonical(a: int, b: int, ell: int, nl: int) -> bool:
    if 1 <= a < ell - 1 and 1 <= b < nl:
        return True
    if a == ell - 1 and 1 <= b <= nl // 2:
        return True
    if b == nl and 1 <= a <= (ell - 1) // 2:
        return True
    return a == ell - 1 and b == nl


@dataclass(frozen=True)
class RectLabel:
    """Canonical rectangle label [a, b] for a multiplicity-free ribbon class.

    The class of ribbons with n cells and `rows` rows whose shape complements
    an a-by-b rectangle sits at [a, b].  Boundary classes admit two rectangle
    descriptions; only the canonical one (smaller index) is allowed here.
    """

    a: int
    b: int
    n: int
    rows: int

    def __post_init__(self) -> None:
        if not 2 <= self.rows <= self.n - 1:
            raise DomainError(
                f"rectangle labels need 2 <= rows <= n - 1, got rows={self.rows}, n={self.n}"
            )
        if not _is_canonical(self.a, self.b, self.rows, self.n - self.rows):
            raise DomainError(
                f"[{self.a},{self.b}] is not a canonical label for n={self.n}, rows={self.rows}"
            )

    def __str__(self) -> str:
        return f"[{self.a},{self.b}]"


def canonical_label(a: int, b: int, n: int, rows: int) -> RectLabel:
    """Build a label, folding the boundary identifications first.

    [rows-1, b] equals [rows-1, (n-rows)-b] and [a, n-rows] equals
    [rows-1-a, n-rows]; the degenerate corner forms [rows-1, 0] and
    [0, n-rows] both name the bottom class.
    """
    ell, nl = rows, n - rows
    if not (0 <= a <= ell - 1 and 0 <= b <= nl):
        raise DomainError(
            f"grid coordinates need 0 <= a <= rows - 1 and 0 <= b <= n - rows, "
            f"got a={a}, b={b} for n={n}, rows={rows}"
        )
    if (a, b) in ((ell - 1, 0), (0, nl)):
        return RectLabel(ell - 1, nl, n, rows)
    if a == ell - 1 and b != nl:
        b = min(b, nl - b)
    elif b == nl and a != ell - 1:
        a = min(a, ell - a - 1)
    return RectLabel(a, b, n, rows)


def elements(n: int, rows: int) -> list[RectLabel]:
    """All canonical labels for size n and the given row count, in (a, b) order."""
    if not 2 <= rows <= n - 1:
        raise DomainError(f"rectangle labels need 2 <= rows <= n - 1, got rows={rows}, n={n}")
    ell, nl = rows, n - rows
    return [
        RectLabel(a, b, n, rows)
        for a in range(1, ell)
        for b in range(1, nl + 1)
        if _is_canonical(a, b, ell, nl)
    ]


def chain_rank(kind: str, x: int, n: int, rows: int) -> int:
    """Height of x in the zigzag chain ordering the labels' coordinates.

    The 'h' chain orders 1..rows-1 by closeness to the middle of that range,
    ties broken toward the left half sitting lower; 'w' does the same for
    1..n-rows.  Any fixed tie-break offset in (0, 1/2) yields these ranks, so
    they are computed with the offset 1/4, scaled by 4 to stay integral.
    """
    if kind == "h":
        if not 1 <= x <= rows - 1:
            raise DomainError(f"h-chain needs 1 <= x <= rows - 1, got {x}")
        return -abs(4 * x - (2 * rows - 1))
    if kind == "w":
        nl = n - rows
        if not 1 <= x <= nl:
            raise DomainError(f"w-chain needs 1 <= x <= n - rows, got {x}")
        return -abs(4 * x - (2 * nl + 1))
    raise DomainError(f"chain kind must be 'h' or 'w', got {kind!r}")


def _same_context(l1: RectLabel, l2: RectLabel) -> None:
    if (l1.n, l1.rows) != (l2.n, l2.rows):
        raise DomainError(
            f"labels from different posets: n={l1.n}, rows={l1.rows} vs n={l2.n}, rows={l2.rows}"
        )


def leq_s_closed(l1: RectLabel, l2: RectLabel) -> bool:
    """Closed-form Schur-positivity comparison: componentwise in chain rank."""
    _same_context(l1, l2)
    n, rows = l1.n, l1.rows
    return chain_rank("h", l1.a, n, rows) <= chain_rank("h", l2.a, n, rows) and chain_rank(
        "w", l1.b, n, rows
    ) <= chain_rank("w", l2.b, n, rows)


def join(l1: RectLabel, l2: RectLabel) -> RectLabel:
    """Least upper bound: componentwise maximum in chain rank."""
    _same_context(l1, l2)
    n, rows = l1.n, l1.rows
    a = max(l1.a, l2.a, key=lambda x: chain_rank("h", x, n, rows))
    b = max(l1.b, l2.b, key=lambda x: chain_rank("w", x, n, rows))
    return canonical_label(a, b, n, rows)


def meet(l1: RectLabel, l2: RectLabel) -> RectLabel:
    """Greatest lower bound.

    The componentwise chain minimum [a, b] works except when one coordinate
    bottoms out: then the other is reflected through the relevant boundary
    identification before the label is read off.
    """
    _same_context(l1, l2)
    n, rows = l1.n, l1.rows
    ell, nl = rows, n - rows
    a = min(l1.a, l2.a, key=lambda x: chain_rank("h", x, n, rows))
    b = min(l1.b, l2.b, key=lambda x: chain_rank("w", x, n, rows))
    if a == ell - 1 and 2 * b > nl:
        a, b = ell - 1, nl - b
    elif b == nl and 2 * a > ell - 1:
        a, b = ell - 1 - a, b
    return canonical_label(a, b, n, rows)


def _chain(kind: str, n: int, rows: int) -> list[int]:
    top = rows - 1 if kind == "h" else n - rows
    return sorted(range(1, top + 1), key=lambda x: chain_rank(kind, x, n, rows))


def covers(n: int, rows: int) -> list[tuple[RectLabel, RectLabel]]:
    """Cover pairs (lower, upper) of the label poset, in closed form.

    Five families: steps along the right boundary, h-chain steps at a fixed
    interior b, steps along the bottom boundary, w-chain steps at a fixed
    interior a, and the two covers of the bottom class.
    """
    ell, nl = rows, n - rows
    edges: set[tuple[RectLabel, RectLabel]] = set()

    def add(lo: tuple[int, int], hi: tuple[int, int]) -> None:
        if (
            lo != hi
            and _is_canonical(*lo, ell, nl)
            and _is_canonical(*hi, ell, nl)
        ):
            edges.add(
                (RectLabel(*lo, n, rows), RectLabel(*hi, n, rows))
            )

    for a in range(1, (ell - 1) // 2):
        add((a, nl), (a + 1, nl))
    for b in range(1, nl // 2):
        add((ell - 1, b), (ell - 1, b + 1))
    h_chain = _chain("h", n, rows)
    for a1, a2 in zip(h_chain, h_chain[1:]):
        for b in range(1, nl):
            add((a1, b), (a2, b))
    w_chain = _chain("w", n, rows)
    for b1, b2 in zip(w_chain, w_chain[1:]):
        for a in range(1, ell - 1):
            add((a, b1), (a, b2))
    for top in ((1, nl), (ell - 1, 1)):
        add((ell - 1, nl), top)

    return sorted(edges, key=lambda e: (e[0].a, e[0].b, e[1].a, e[1].b))


def ribbon_of_label(label: RectLabel) -> Composition:
    """Row lengths of the representative ribbon of the class at the label."""
    ell, nl = label.rows, label.n - label.rows
    return (
        (nl - label.b + 1,)
        + (1,) * (label.a - 1)
        + (label.b + 1,)
        + (1,) * (ell - label.a - 1)
    )


def label_of_ribbon(alpha: Iterable[int]) -> RectLabel:
    """Canonical rectangle label of a multiplicity-free ribbon's class.

    Errors when the ribbon is not multiplicity-free or when its row count is
    degenerate (a single row, or all rows of length one) and so falls outside
    the rectangle indexing.
    """
    alpha = as_composition(alpha)
    total, ell = sum(alpha), len(alpha)
    if not 2 <= ell <= total - 1:
        raise DomainError(
            f"no rectangle label: {alpha} needs 2 <= rows <= size - 1"
        )
    if mf_pattern(alpha) is None:
        raise DomainError(f"{alpha} is not a multiplicity-free ribbon")
    found = set()
    for beta in {alpha, reverse(alpha)}:
        big = [q for q in range(1, ell) if beta[q] > 1]
        if len(big) > 1:
            continue
        if big:
            found.add(canonical_label(big[0], beta[big[0]] - 1, total, ell))
        else:
            found.add(canonical_label(ell - 1, total - ell, total, ell))
    assert len(found) == 1, f"label candidates disagree for {alpha}"
    return found.pop()


def schubert_pair(label: RectLabel) -> tuple[Partition, Partition]:
    """Partitions (kappa, tau) indexing the Schubert-class translation.

    The difference of the products sigma_kappa . sigma_tau attached to two
    labels (in the Grassmannian of rows-planes in n-space) is Schubert
    positive exactly when the ribbon difference is Schur positive.
    """
    ell, nl = label.rows, label.n - label.rows
    first = as_partition((label.a,) * label.b)
    second = as_partition(
        (nl,) * (ell - label.a - 1) + (nl - label.b,) * label.a
    )
    return first, second


# --- exact difference formulas for the four cover families -----------------

_FOURCOVERS_HYPOTHESES = {
    1: "n - 1 > m",
    2: "n > m and l >= 1",
    3: "n >= 2 and l > k",
    4: "m >= 2, n >= 2 and l - 1 > k",
}


def _fourcovers_ok(case: int, m: int, k: int, n: int, l: int) -> bool:
    if case == 1:
        return n - 1 > m
    if case == 2:
        return n > m and l >= 1
    if case == 3:
        return n >= 2 and l > k
    return m >= 2 and n >= 2 and l - 1 > k


def _check_fourcovers(case: int, m: int, k: int, n: int, l: int) -> None:
    if case not in (1, 2, 3, 4):
        raise DomainError(f"case must be 1, 2, 3, or 4, got {case}")
    if m < 1 or n < 1 or k < 0 or l < 0:
        raise DomainError("patterns need m, n >= 1 and k, l >= 0")
    if not _fourcovers_ok(case, m, k, n, l):
        raise DomainError(f"case {case} requires {_FOURCOVERS_HYPOTHESES[case]}")


def fourcovers_pair(
    case: int, m: int, k: int, n: int, l: int
) -> tuple[Composition, Composition]:
    """The (upper, lower) ribbons whose difference the closed form gives.

    All four lower ribbons follow the two-block pattern (m, 1^k, n, 1^l); the
    upper one is the neighbouring pattern in the relevant chain direction.
    """
    _check_fourcovers(case, m, k, n, l)
    base = (m,) + (1,) * k + (n,) + (1,) * l
    if case == 1:
        return (n - 1,) + (1,) * k + (m + 1,) + (1,) * l, base
    if case == 2:
        return base, (n,) + (1,) * k + (m,) + (1,) * l
    if case == 3:
        return base, (m,) + (1,) * l + (n,) + (1,) * k
    return (m,) + (1,) * (l - 1) + (n,) + (1,) * (k + 1), base


def fourcovers_delta(case: int, m: int, k: int, n: int, l: int) -> SchurVector:
    """Closed-form Schur expansion of the cover difference.

    Cases 3 and 4 are the images of cases 1 and 2 under the omega involution,
    hence the conjugated shape of their summands.
    """
    _check_fourcovers(case, m, k, n, l)
    terms: dict[Partition, int] = {}
    if case == 1:
        for i in range(min(k, l) + 1):
            terms[(n - 1, m + 1) + (2,) * i + (1,) * (k + l - 2 * i)] = 1
    elif case == 2:
        for i in range(min(k, l - 1) + 1):
            terms[(n, m + 1) + (2,) * i + (1,) * (k + l - 2 * i - 1)] = 1
    elif case == 3:
        for i in range(min(n - 2, m - 1) + 1):
            terms[(n + m - i - 1, i + 2) + (2,) * k + (1,) * (l - k - 1)] = 1
    else:
        for i in range(min(n - 2, m - 2) + 1):
            terms[(n + m - i - 2, i + 2) + (2,) * (k + 1) + (1,) * (l - k - 2)] = 1
    return SchurVector(terms)


# --- certified non-relations ------------------------------------------------

_ONLYCOVERS_HYPOTHESES = {
    1: "n - 1 > m",
    2: "n > m and l >= 1",
    3: "n >= 2, n' >= 2 and l > k",
    4: "m >= 2, n >= 2, n' >= 2 and l - 1 > k",
}


def _check_onlycovers(
    case: int, m: int, k: int, n: int, l: int, alt: tuple[int, int]
) -> None:
    if case not in (1, 2, 3, 4):
        raise DomainError(f"case must be 1, 2, 3, or 4, got {case}")
    if m < 1 or n < 1 or k < 0 or l < 0:
        raise DomainError("patterns need m, n >= 1 and k, l >= 0")
    p, q = alt
    if case in (1, 2):
        if p < 0 or q < 0:
            raise DomainError("alternate exponents k', l' must be >= 0")
        if p + q != k + l:
            raise DomainError(f"case {case} requires k' + l' = k + l")
        ok = n - 1 > m if case == 1 else (n > m and l >= 1)
    else:
        if p < 1 or q < 1:
            raise DomainError("alternate parts m', n' must be >= 1")
        if p + q != m + n:
            raise DomainError(f"case {case} requires m' + n' = m + n")
        if case == 3:
            ok = n >= 2 and q >= 2 and l > k
        else:
            ok = m >= 2 and n >= 2 and q >= 2 and l - 1 > k
    if not ok:
        raise DomainError(f"case {case} requires {_ONLYCOVERS_HYPOTHESES[case]}")


def onlycovers_pair(
    case: int, m: int, k: int, n: int, l: int, alt: tuple[int, int]
) -> tuple[Composition, Composition]:
    """Ribbons (x, y) certified to satisfy "x is not below y".

    `alt` carries the independent parameters of y: (k', l') with
    k' + l' = k + l for cases 1 and 2, (m', n') with m' + n' = m + n for
    cases 3 and 4.
    """
    _check_onlycovers(case, m, k, n, l, alt)
    p, q = alt
    if case == 1:
        return (n - 1,) + (1,) * k + (m + 1,) + (1,) * l, (m,) + (1,) * p + (n,) + (1,) * q
    if case == 2:
        return (m,) + (1,) * k + (n,) + (1,) * l, (n,) + (1,) * p + (m,) + (1,) * q
    if case == 3:
        return (m,) + (1,) * k + (n,) + (1,) * l, (p,) + (1,) * l + (q,) + (1,) * k
    return (m,) + (1,) * (l - 1) + (n,) + (1,) * (k + 1), (p,) + (1,) * k + (q,) + (1,) * l


@dataclass(frozen=True)
class RefutationEvidence:
    """Why lhs cannot sit below rhs in the Schur-positivity order.

    kind "rows-dominance" / "cols-dominance": profiles holds the pair
    (profile of rhs, profile of lhs) for which the dominance required of an
    upper element fails.  kind "coefficient": content names a partition whose
    coefficient is positive in lhs's expansion but zero in rhs's.
    """

    kind: str
    lhs: Composition
    rhs: Composition
    profiles: tuple[Partition, Partition] | None = None
    content: Partition | None = None


def onlycovers_witness(
    case: int, m: int, k: int, n: int, l: int, alt: tuple[int, int]
) -> RefutationEvidence:
    """Closed-form evidence for the non-relation of onlycovers_pair.

    Cases 1 and 3 fail a dominance necessary condition (on rows resp.
    columns); cases 2 and 4 exhibit a content that only the left expansion
    contains.
    """
    x, y = onlycovers_pair(case, m, k, n, l, alt)
    if case == 1:
        return RefutationEvidence(
            "rows-dominance",
            x,
            y,
            profiles=(profile(ribbon_of(y))[0], profile(ribbon_of(x))[0]),
        )
    if case == 3:
        return RefutationEvidence(
            "cols-dominance",
            x,
            y,
            profiles=(profile(ribbon_of(y))[1], profile(ribbon_of(x))[1]),
        )
    if case == 2:
        content = (n, m + 1) + (1,) * (k + l - 1)
    else:
        content = conjugate((l + 1, k + 3) + (1,) * (m + n - 4))
    return RefutationEvidence("coefficient", x, y, content=as_partition(content))


# --- exhaustive verification against the expansion engine -------------------


def _pattern_params(max_total: int) -> Iterator[tuple[int, int, int, int]]:
    for m in range(1, max_total):
        for n in range(1, max_total - m + 1):
            for k in range(max_total - m - n + 1):
                for l in range(max_total - m - n - k + 1):
                    yield m, k, n, l


def verify_fourcovers(max_size: int = 12) -> VerifyReport:
    """Check every closed-form cover difference of total size <= max_size."""
    checked = 0
    bad = []
    for case in (1, 2, 3, 4):
        for m, k, n, l in _pattern_params(max_size):
            if not _fourcovers_ok(case, m, k, n, l):
                continue
            upper, lower = fourcovers_pair(case, m, k, n, l)
            claimed = fourcovers_delta(case, m, k, n, l)
            result = compare_vectors(
                expand(ribbon_of(upper), max_size), expand(ribbon_of(lower), max_size)
            )
            checked += 1
            if result.relation is not Relation.GREATER or result.difference != claimed:
                bad.append(
                    f"case {case}, (m,k,n,l)=({m},{k},{n},{l}): "
                    f"expansion gives {result.relation.value}, claimed difference mismatch"
                )
    return VerifyReport(checked, tuple(bad))


def _onlycovers_instances(
    max_size: int,
) -> Iterator[tuple[int, int, int, int, int, tuple[int, int]]]:
    for case in (1, 2, 3, 4):
        for m, k, n, l in _pattern_params(max_size):
            if not _fourcovers_ok(case, m, k, n, l):
                continue
            if case in (1, 2):
                for kp in range(k + l + 1):
                    yield case, m, k, n, l, (kp, k + l - kp)
            else:
                for mp in range(1, m + n - 1):
                    yield case, m, k, n, l, (mp, m + n - mp)


def verify_onlycovers(max_size: int = 12) -> VerifyReport:
    """Check every certified non-relation of total size <= max_size.

    Each instance must compare as something other than greater-or-equal when
    the candidate upper ribbon is expanded against the lower one, and the
    closed-form evidence must hold verbatim: the claimed dominance really
    fails, or the claimed content really separates the expansions.
    """
    checked = 0
    bad = []
    for case, m, k, n, l, alt in _onlycovers_instances(max_size):
        x, y = onlycovers_pair(case, m, k, n, l, alt)
        evidence = onlycovers_witness(case, m, k, n, l, alt)
        tag = f"case {case}, (m,k,n,l)=({m},{k},{n},{l}), alt={alt}"
        checked += 1
        result = compare_diagrams(ribbon_of(y), ribbon_of(x), max_size)
        if result.relation in (Relation.GREATER, Relation.EQUAL):
            bad.append(f"{tag}: expansion says {result.relation.value}")
            continue
        if evidence.kind in ("rows-dominance", "cols-dominance"):
            which = 0 if evidence.kind == "rows-dominance" else 1
            actual = (
                profile(ribbon_of(y))[which],
                profile(ribbon_of(x))[which],
            )
            if evidence.profiles != actual:
                bad.append(f"{tag}: evidence profiles are not the diagram profiles")
            elif dominance_leq(*evidence.profiles):
                bad.append(f"{tag}: claimed dominance failure actually holds")
        else:
            if expand(ribbon_of(x), max_size)[evidence.content] < 1:
                bad.append(f"{tag}: witness content missing from the lower expansion")
            elif expand(ribbon_of(y), max_size)[evidence.content] != 0:
                bad.append(f"{tag}: witness content present in the upper expansion")
    return VerifyReport(checked, tuple(bad))


def verify_bigdiff(
    n: int, rows: int, max_size: int = DEFAULT_EXPANSION_LIMIT
) -> VerifyReport:
    """Compare the closed-form order with the expansion order on every pair."""
    labels = elements(n, rows)
    diagrams = {label: ribbon_of(ribbon_of_label(label)) for label in labels}
    checked = 0
    bad = []
    for x in labels:
        for y in labels:
            checked += 1
            closed = leq_s_closed(x, y)
            result = compare_diagrams(diagrams[y], diagrams[x], max_size)
            oracle = result.relation in (Relation.GREATER, Relation.EQUAL)
            if closed != oracle:
                bad.append(
                    f"{x} <= {y}: closed form says {closed}, expansion says "
                    f"{result.relation.value}"
                )
    return VerifyReport(checked, tuple(bad))


def verify_mflemma(max_size: int = 10) -> VerifyReport:
    """Check the two-block multiplicity-freeness pattern on all ribbons.

    For every composition of every size up to max_size, the pattern matcher
    must agree with direct inspection of the expansion's coefficients, and a
    successful match must reproduce the composition it was given.
    """
    checked = 0
    bad = []
    for size in range(1, max_size + 1):
        for alpha in compositions_of(size):
            checked += 1
            pattern = mf_pattern(alpha)
            free = is_multiplicity_free_vec(expand(ribbon_of(alpha), max_size))
            if (pattern is not None) != free:
                verdict = "matches" if pattern is not None else "matches nothing"
                bad.append(
                    f"{alpha}: pattern {verdict} but expansion is "
                    f"{'free' if free else 'not free'}"
                )
            elif pattern is not None and pattern.composition() != alpha:
                bad.append(f"{alpha}: pattern rebuilds {pattern.composition()}")
    return VerifyReport(checked, tuple(bad))


# --- trim-lattice statistics -------------------------------------------------


@dataclass(frozen=True)
class TrimReport:
    """Structural statistics of the label lattice at one (n, rows)."""

    join_irreducibles: int
    meet_irreducibles: int
    longest_chain_elements: int
    left_modular_max_chain: bool
    spine_left_modular: bool
    spine_distributive: bool


def trim_report(n: int, rows: int) -> TrimReport:
    """Measure how far the label lattice is from being graded yet trim.

    Reports the number of join- and meet-irreducible elements, the number of
    elements on a longest chain, whether some longest chain consists of
    left-modular elements only, whether every element lying on any longest
    chain is left modular, and whether those elements form a distributive
    sublattice.
    """
    labels = elements(n, rows)
    size = len(labels)
    leq = [[leq_s_closed(x, y) for y in labels] for x in labels]

    succ: list[list[int]] = [[] for _ in range(size)]
    pred: list[list[int]] = [[] for _ in range(size)]
    for i in range(size):
        for j in range(size):
            if i == j or not leq[i][j]:
                continue
            if not any(
                leq[i][t] and leq[t][j] for t in range(size) if t != i and t != j
            ):
                succ[i].append(j)
                pred[j].append(i)

    join_irr = sum(1 for v in range(size) if len(pred[v]) == 1)
    meet_irr = sum(1 for v in range(size) if len(succ[v]) == 1)

    order = sorted(range(size), key=lambda v: sum(leq[u][v] for u in range(size)))
    down = [0] * size
    for v in order:
        for w in succ[v]:
            down[w] = max(down[w], down[v] + 1)
    up = [0] * size
    for v in reversed(order):
        for w in pred[v]:
            up[w] = max(up[w], up[v] + 1)
    max_len = max(down[v] + up[v] for v in range(size))
    spine = [v for v in range(size) if down[v] + up[v] == max_len]

    modular: dict[int, bool] = {}

    def left_modular(v: int) -> bool:
        if v not in modular:
            x = labels[v]
            modular[v] = all(
                meet(join(labels[yi], x), labels[zi])
                == join(labels[yi], meet(x, labels[zi]))
                for yi in range(size)
                for zi in range(size)
                if yi != zi and leq[yi][zi]
            )
        return modular[v]

    chains: list[tuple[int, ...]] = []

    def walk(v: int, acc: list[int]) -> None:
        acc.append(v)
        if up[v] == 0:
            chains.append(tuple(acc))
        else:
            for w in succ[v]:
                if down[w] == down[v] + 1 and down[w] + up[w] == max_len:
                    walk(w, acc)
        acc.pop()

    for v in spine:
        if down[v] == 0:
            walk(v, [])

    some_chain = any(all(left_modular(v) for v in chain) for chain in chains)
    all_spine = all(left_modular(v) for v in spine)

    spine_labels = [labels[v] for v in spine]
    spine_set = set(spine_labels)
    distributive = all(
        meet(x, y) in spine_set and join(x, y) in spine_set
        for x, y in combinations(spine_labels, 2)
    ) and all(
        meet(x, join(y, z)) == join(meet(x, y), meet(x, z))
        for x in spine_labels
        for y, z in combinations(spine_labels, 2)
    )

    return TrimReport(join_irr, meet_irr, max_len + 1, some_chain, all_spine, distributive)
