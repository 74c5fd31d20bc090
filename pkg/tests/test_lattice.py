"""Closed-form model of the multiplicity-free ribbon poset."""

import pytest

from schurpos import (
    DomainError,
    RectLabel,
    Relation,
    SchurVector,
    canonical_label,
    chain_rank,
    compare_diagrams,
    covers,
    elements,
    expand,
    fourcovers_delta,
    fourcovers_pair,
    join,
    label_of_ribbon,
    leq_s_closed,
    meet,
    mf_pattern,
    onlycovers_pair,
    onlycovers_witness,
    ribbon_of,
    ribbon_of_label,
    schubert_pair,
    trim_report,
    verify_bigdiff,
    verify_fourcovers,
    verify_mflemma,
    verify_onlycovers,
)
from schurpos.partitions import compositions_of, reverse


# --- labels and their identifications ------------------------------------


def test_element_counts():
    assert len(elements(12, 6)) == 26
    for n in range(3, 16):
        for rows in range(2, n):
            nl = n - rows
            expected = (rows - 2) * (nl - 1) + nl // 2 + (rows - 1) // 2 + 1
            assert len(elements(n, rows)) == expected, (n, rows)


def test_element_context_validation():
    with pytest.raises(DomainError, match="2 <= rows <= n - 1"):
        elements(3, 3)
    with pytest.raises(DomainError, match="2 <= rows <= n - 1"):
        RectLabel(1, 1, 3, 3)


def test_non_canonical_labels_are_rejected():
    with pytest.raises(DomainError, match="not a canonical label"):
        RectLabel(2, 1, 5, 2)
    # [5,4] at (12,6) folds to [5,2]; the unfolded spelling is invalid.
    with pytest.raises(DomainError, match="not a canonical label"):
        RectLabel(5, 4, 12, 6)


def test_canonical_label_folds_the_boundaries():
    assert canonical_label(5, 4, 12, 6) == RectLabel(5, 2, 12, 6)
    assert canonical_label(5, 2, 12, 6) == RectLabel(5, 2, 12, 6)
    assert canonical_label(4, 6, 12, 6) == RectLabel(1, 6, 12, 6)
    assert canonical_label(1, 6, 12, 6) == RectLabel(1, 6, 12, 6)
    # Degenerate corners name the bottom class.
    assert canonical_label(5, 0, 12, 6) == RectLabel(5, 6, 12, 6)
    assert canonical_label(0, 6, 12, 6) == RectLabel(5, 6, 12, 6)


def test_canonical_label_rejects_out_of_grid_coordinates():
    with pytest.raises(DomainError, match="grid coordinates"):
        canonical_label(5, 10, 12, 6)
    with pytest.raises(DomainError, match="grid coordinates"):
        canonical_label(-1, 3, 12, 6)


def test_label_str():
    assert str(RectLabel(3, 5, 15, 6)) == "[3,5]"


# --- chain ranks ----------------------------------------------------------


def test_chain_orders_match_known_sequences():
    h = sorted(range(1, 6), key=lambda x: chain_rank("h", x, 12, 6))
    assert h == [5, 1, 4, 2, 3]
    w = sorted(range(1, 7), key=lambda x: chain_rank("w", x, 12, 6))
    assert w == [6, 1, 5, 2, 4, 3]


def test_chain_ranks_are_injective():
    for n in range(4, 16):
        for rows in range(2, n):
            hs = [chain_rank("h", x, n, rows) for x in range(1, rows)]
            ws = [chain_rank("w", x, n, rows) for x in range(1, n - rows + 1)]
            assert len(set(hs)) == len(hs)
            assert len(set(ws)) == len(ws)


def test_chain_rank_validation():
    with pytest.raises(DomainError, match="h-chain needs"):
        chain_rank("h", 6, 12, 6)
    with pytest.raises(DomainError, match="w-chain needs"):
        chain_rank("w", 0, 12, 6)
    with pytest.raises(DomainError, match="chain kind"):
        chain_rank("x", 1, 12, 6)


# --- label/ribbon dictionary ----------------------------------------------


def test_ribbon_of_label_formula():
    label = RectLabel(3, 5, 15, 6)
    assert ribbon_of_label(label) == (5, 1, 1, 6, 1, 1)
    assert label_of_ribbon((5, 1, 1, 6, 1, 1)) == label


def test_label_ribbon_roundtrip_everywhere():
    for n in range(3, 13):
        for rows in range(2, n):
            for label in elements(n, rows):
                alpha = ribbon_of_label(label)
                assert sum(alpha) == n
                assert len(alpha) == rows
                assert mf_pattern(alpha) is not None
                assert label_of_ribbon(alpha) == label
                assert label_of_ribbon(reverse(alpha)) == label


def test_every_mf_ribbon_has_a_label():
    # Within a context, labels list one ribbon per class; together with their
    # reversals they exhaust the multiplicity-free compositions.
    for n in range(3, 11):
        for rows in range(2, n):
            labelled = set()
            for label in elements(n, rows):
                alpha = ribbon_of_label(label)
                labelled.add(alpha)
                labelled.add(reverse(alpha))
            mf = {
                alpha
                for alpha in compositions_of(n, rows)
                if mf_pattern(alpha) is not None
            }
            assert labelled == mf


def test_label_of_ribbon_rejections():
    with pytest.raises(DomainError, match="not a multiplicity-free ribbon"):
        label_of_ribbon((1, 2, 1, 3, 2))
    with pytest.raises(DomainError, match="2 <= rows <= size - 1"):
        label_of_ribbon((5,))


# --- the closed-form order -------------------------------------------------


def test_leq_is_rank_componentwise():
    x = RectLabel(5, 3, 12, 6)
    y = RectLabel(1, 4, 12, 6)
    assert not leq_s_closed(x, y)
    assert not leq_s_closed(y, x)
    bottom = RectLabel(5, 6, 12, 6)
    top = RectLabel(3, 3, 12, 6)
    for label in elements(12, 6):
        assert leq_s_closed(bottom, label)
        assert leq_s_closed(label, top)


def test_leq_rejects_mixed_contexts():
    with pytest.raises(DomainError, match="different posets"):
        leq_s_closed(RectLabel(1, 1, 12, 6), RectLabel(1, 1, 12, 5))


def test_closed_order_matches_expansions():
    for n, rows in [(7, 3), (8, 4), (9, 4), (9, 6)]:
        report = verify_bigdiff(n, rows)
        assert report.ok, report.disagreements
        assert report.checked == len(elements(n, rows)) ** 2


def test_closed_order_spot_check_against_expansions():
    ctx = (10, 4)
    labels = elements(*ctx)
    vecs = {label: expand(ribbon_of(ribbon_of_label(label))) for label in labels}
    for x in labels:
        for y in labels:
            result = compare_diagrams(
                ribbon_of(ribbon_of_label(x)), ribbon_of(ribbon_of_label(y))
            )
            expected = result.relation in (Relation.LESS, Relation.EQUAL)
            assert leq_s_closed(x, y) == expected
    assert len(vecs) == len(labels)


# --- meet and join ----------------------------------------------------------


def test_meet_and_join_known_values():
    ctx = (12, 6)
    assert meet(RectLabel(5, 3, *ctx), RectLabel(1, 4, *ctx)) == RectLabel(5, 2, *ctx)
    assert join(RectLabel(1, 2, *ctx), RectLabel(2, 1, *ctx)) == RectLabel(2, 2, *ctx)
    assert meet(RectLabel(1, 2, *ctx), RectLabel(2, 1, *ctx)) == RectLabel(1, 1, *ctx)


def test_meet_and_join_against_brute_force():
    for n in range(4, 11):
        for rows in range(2, n):
            labels = elements(n, rows)
            for x in labels:
                for y in labels:
                    lower = [z for z in labels if leq_s_closed(z, x) and leq_s_closed(z, y)]
                    glb = max(
                        lower,
                        key=lambda z: sum(leq_s_closed(w, z) for w in lower),
                    )
                    assert all(leq_s_closed(w, glb) for w in lower)
                    assert meet(x, y) == glb

                    upper = [z for z in labels if leq_s_closed(x, z) and leq_s_closed(y, z)]
                    lub = max(
                        upper,
                        key=lambda z: sum(leq_s_closed(z, w) for w in upper),
                    )
                    assert all(leq_s_closed(lub, w) for w in upper)
                    assert join(x, y) == lub


def test_meet_join_identities():
    labels = elements(11, 5)
    for x in labels:
        for y in labels:
            assert meet(x, y) == meet(y, x)
            assert join(x, y) == join(y, x)
            assert meet(x, x) == x
            assert join(x, x) == x
            assert meet(x, join(x, y)) == x
            assert join(x, meet(x, y)) == x


# --- covers ------------------------------------------------------------------


def test_covers_match_the_transitive_reduction():
    for n in range(4, 11):
        for rows in range(2, n):
            labels = elements(n, rows)
            strict = {
                (x, y)
                for x in labels
                for y in labels
                if x != y and leq_s_closed(x, y)
            }
            expected = {
                (x, y)
                for x, y in strict
                if not any((x, z) in strict and (z, y) in strict for z in labels)
            }
            assert set(covers(n, rows)) == expected, (n, rows)


def test_cover_counts_at_the_featured_size():
    assert len(covers(12, 6)) == 41


# --- Schubert labels ---------------------------------------------------------


def test_schubert_pair_known_value():
    first, second = schubert_pair(RectLabel(3, 5, 15, 6))
    assert first == (3, 3, 3, 3, 3)
    assert second == (9, 9, 4, 4, 4)


def test_schubert_pair_shapes():
    for label in elements(12, 6):
        first, second = schubert_pair(label)
        assert first == tuple([label.a] * label.b)
        assert all(p <= 6 for p in second)


# --- the four cover families -------------------------------------------------


def test_fourcovers_worked_examples():
    assert fourcovers_pair(1, 1, 0, 3, 0) == ((2, 2), (1, 3))
    assert fourcovers_delta(1, 1, 0, 3, 0) == SchurVector({(2, 2): 1})

    assert fourcovers_pair(2, 1, 0, 2, 1) == ((1, 2, 1), (2, 1, 1))
    assert fourcovers_delta(2, 1, 0, 2, 1) == SchurVector({(2, 2): 1})

    assert fourcovers_pair(3, 2, 0, 2, 1) == ((2, 2, 1), (2, 1, 2))
    assert fourcovers_delta(3, 2, 0, 2, 1) == SchurVector({(3, 2): 1})


def test_fourcovers_delta_matches_expansions():
    report = verify_fourcovers(10)
    assert report.ok, report.disagreements
    assert report.checked > 0


def test_fourcovers_rejects_broken_hypotheses():
    with pytest.raises(DomainError, match="case 1 requires"):
        fourcovers_pair(1, 3, 0, 3, 0)
    with pytest.raises(DomainError, match="case must be"):
        fourcovers_pair(5, 1, 0, 3, 0)
    with pytest.raises(DomainError, match="m, n >= 1"):
        fourcovers_pair(1, 0, 0, 3, 0)


def test_fourcovers_pairs_are_genuine_covers_in_context():
    # Upper and lower ribbons of each family sit at adjacent spots in the
    # closed-form poset whenever both are multiplicity-free.
    upper, lower = fourcovers_pair(2, 2, 1, 3, 1)
    hi = label_of_ribbon(upper)
    lo = label_of_ribbon(lower)
    assert (lo, hi) in covers(sum(upper), len(upper))


# --- the non-cover refutations ------------------------------------------------


def test_onlycovers_worked_pairs():
    x, y = onlycovers_pair(1, 1, 0, 3, 0, alt=(0, 0))
    assert (x, y) == ((2, 2), (1, 3))
    evidence = onlycovers_witness(1, 1, 0, 3, 0, alt=(0, 0))
    assert evidence.kind == "rows-dominance"


def test_onlycovers_evidence_kinds():
    assert onlycovers_witness(2, 1, 0, 2, 1, alt=(1, 0)).kind == "coefficient"
    assert onlycovers_witness(3, 2, 0, 2, 1, alt=(2, 2)).kind == "cols-dominance"
    assert onlycovers_witness(4, 2, 0, 2, 2, alt=(2, 2)).kind == "coefficient"


def test_onlycovers_sweep():
    report = verify_onlycovers(10)
    assert report.ok, report.disagreements
    assert report.checked > 0


# --- multiplicity-freeness sweep -------------------------------------------------


def test_mflemma_sweep():
    report = verify_mflemma(9)
    assert report.ok, report.disagreements
    assert report.checked == 511  # compositions of every size up to nine


# --- trim statistics -------------------------------------------------------------


def test_trim_report_featured_size():
    report = trim_report(12, 6)
    assert report.join_irreducibles == 9
    assert report.meet_irreducibles == 9
    assert report.longest_chain_elements == 10
    assert report.left_modular_max_chain
    assert report.spine_left_modular
    assert report.spine_distributive


def test_trim_interior_sizes_have_n_minus_3_irreducibles():
    for n in range(5, 11):
        for rows in range(3, n - 1):
            report = trim_report(n, rows)
            assert report.join_irreducibles == n - 3
            assert report.meet_irreducibles == n - 3
            assert report.longest_chain_elements == n - 2
            assert report.left_modular_max_chain


def test_trim_boundary_sizes_collapse_to_chains():
    # At rows 2 and n-1 the boundary identifications leave a chain of
    # floor(n/2) elements; it is still trim, just smaller.
    for n in range(5, 13):
        for rows in (2, n - 1):
            report = trim_report(n, rows)
            chain = n // 2
            assert report.longest_chain_elements == chain
            assert report.join_irreducibles == chain - 1
            assert report.meet_irreducibles == chain - 1
            assert report.left_modular_max_chain
