import random

import pytest

from boolpoly import _merge_numba
from boolpoly.mixed import (
    MixedMonomial,
    MixedPolynomial,
    format_mixed,
    mixed_to_table,
    parse_polynomial,
    theorem2_representation,
)
from boolpoly.reduce import (
    GENERALIZED,
    PAPER,
    algorithm1,
    merge_fixpoint,
    substitution_pass,
    try_merge,
)
from boolpoly.truthtable import TruthTable

SUM2SQ = TruthTable.from_ones(4, [0, 1, 2, 4, 5, 8, 9, 10, 13])


def term(text, n):
    (m,) = parse_polynomial(text, n).terms
    return m


def naive_merge_fixpoint(p, generalized):
    """Literal scan-with-restart reference for the merge engine."""
    keys = set(p.keys)
    events = []
    while True:
        found = None
        ordered = sorted(keys)
        for i, ki in enumerate(ordered):
            for kj in ordered[i + 1 :]:
                d = ki ^ kj
                sh = ((d.bit_length() - 1) >> 1) << 1
                if d & ~(3 << sh):
                    continue
                c1 = (ki >> sh) & 3
                c2 = (kj >> sh) & 3
                if not generalized and (c1 == 0 or c2 == 0):
                    continue
                found = (ki, kj, ki + ((3 - c1 - c2 - c1) << sh))
                break
            if found:
                break
        if not found:
            break
        ki, kj, m = found
        keys.discard(ki)
        keys.discard(kj)
        if m in keys:
            keys.discard(m)
            events.append((ki, kj, m, True))
        else:
            keys.add(m)
            events.append((ki, kj, m, False))
    return MixedPolynomial(p.n, tuple(sorted(keys))), events


def random_mixed(rng, n, max_terms=14):
    terms = set()
    for _ in range(rng.randint(0, max_terms)):
        x = rng.randrange(1 << n)
        y = rng.randrange(1 << n) & ~x
        terms.add(MixedMonomial.from_masks(n, x, y))
    return MixedPolynomial.from_terms(terms, n)


class TestTryMerge:
    def test_paper_first_merge(self):
        m = try_merge(term("y1y2x3x4", 4), term("y1x2x3x4", 4), PAPER)
        assert str(m) == "y1x3x4"

    def test_paper_second_round_merge(self):
        m = try_merge(term("y1x3x4", 4), term("x1x3x4", 4), PAPER)
        assert str(m) == "x3x4"

    def test_absorb_constant(self):
        m = try_merge(term("1", 1), term("x1", 1))
        assert str(m) == "y1"

    def test_absent_plus_y_gives_x(self):
        m = try_merge(term("x2", 2), term("y1x2", 2))
        assert str(m) == "x1x2"

    def test_two_differences_do_not_merge(self):
        assert try_merge(term("x1x2", 2), term("y1y2", 2)) is None

    def test_identical_terms_do_not_merge(self):
        assert try_merge(term("x1x2", 2), term("x1x2", 2)) is None

    def test_paper_mode_rejects_absent_merges(self):
        assert try_merge(term("1", 1), term("x1", 1), PAPER) is None

    def test_commutative(self):
        rng = random.Random(31)
        for _ in range(100):
            n = rng.randint(1, 6)
            a = random_mixed(rng, n, 1)
            b = random_mixed(rng, n, 1)
            if a.term_count() != 1 or b.term_count() != 1:
                continue
            (ta,), (tb,) = a.terms, b.terms
            for mode in (GENERALIZED, PAPER):
                assert try_merge(ta, tb, mode) == try_merge(tb, ta, mode)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            try_merge(term("x1", 1), term("x1", 2))

    def test_bad_mode(self):
        with pytest.raises(ValueError):
            try_merge(term("x1", 1), term("y1", 1), mode="greedy")


class TestMergeFixpoint:
    def test_example1_stage2_paper_mode(self):
        stage1 = theorem2_representation(SUM2SQ)
        reduced, trace = merge_fixpoint(stage1, PAPER)
        assert format_mixed(reduced) == "1+x3x4+x2x3y4+x1x2y3y4"
        assert len(trace) == 4

    def test_example1_first_round_matches_paper(self):
        # the first three merges are the ones the paper performs
        stage1 = theorem2_representation(SUM2SQ)
        _, trace = merge_fixpoint(stage1, PAPER)
        merged = [str(ev.merged) for ev in trace]
        assert merged == ["y1x3x4", "x2x3y4", "x1x3x4", "x3x4"]
        after_round1 = parse_polynomial("1+y1x3x4+x2x3y4+x1x3x4+x1x2y3y4", 4)
        survivors = set(stage1.keys)
        for ev in trace[:3]:
            survivors -= {ev.left.key, ev.right.key}
            survivors.add(ev.merged.key)
        assert MixedPolynomial(4, tuple(sorted(survivors))) == after_round1

    def test_single_term_unchanged(self):
        p = parse_polynomial("x1y2", 2)
        reduced, trace = merge_fixpoint(p)
        assert reduced == p
        assert trace == []

    def test_complementary_pair_gives_one(self):
        p = parse_polynomial("x1+y1", 1)
        reduced, _ = merge_fixpoint(p)
        assert format_mixed(reduced) == "1"

    def test_no_mergeable_pair_remains(self):
        rng = random.Random(32)
        for _ in range(60):
            n = rng.randint(1, 6)
            p = random_mixed(rng, n)
            for mode in (GENERALIZED, PAPER):
                reduced, _ = merge_fixpoint(p, mode)
                terms = reduced.terms
                for i, a in enumerate(terms):
                    for b in terms[i + 1 :]:
                        assert try_merge(a, b, mode) is None

    def test_value_preserved(self):
        rng = random.Random(33)
        for _ in range(60):
            n = rng.randint(1, 7)
            p = random_mixed(rng, n)
            for mode in (GENERALIZED, PAPER):
                reduced, _ = merge_fixpoint(p, mode)
                assert mixed_to_table(reduced) == mixed_to_table(p)

    def test_counts_per_event(self):
        rng = random.Random(34)
        for _ in range(60):
            n = rng.randint(1, 6)
            p = random_mixed(rng, n)
            reduced, trace = merge_fixpoint(p)
            drop = sum(3 if ev.canceled else 1 for ev in trace)
            assert reduced.term_count() == p.term_count() - drop

    def test_matches_naive_reference(self):
        rng = random.Random(35)
        for _ in range(300):
            n = rng.randint(1, 6)
            p = random_mixed(rng, n)
            for mode in (GENERALIZED, PAPER):
                got, trace = merge_fixpoint(p, mode)
                want, want_events = naive_merge_fixpoint(p, mode == GENERALIZED)
                assert got == want
                assert [
                    (ev.left.key, ev.right.key, ev.merged.key, ev.canceled)
                    for ev in trace
                ] == want_events

    @pytest.mark.skipif(not _merge_numba.HAVE_NUMBA, reason="numba unavailable")
    def test_kernel_matches_python_engine(self):
        rng = random.Random(36)
        for _ in range(80):
            n = rng.randint(1, 9)
            if rng.random() < 0.5:
                p = theorem2_representation(TruthTable(n, rng.getrandbits(1 << n)))
            else:
                p = random_mixed(rng, n, 30)
            for mode in (GENERALIZED, PAPER):
                fast = merge_fixpoint(p, mode)
                slow = merge_fixpoint(p, mode, force_python=True)
                assert fast[0] == slow[0]
                assert fast[1] == slow[1]

    def test_cancellation_event(self):
        # x1x2 + x1y2 -> x1, which cancels the existing x1
        p = parse_polynomial("x1+x1x2+x1y2", 2)
        reduced, trace = merge_fixpoint(p, PAPER)
        assert any(ev.canceled for ev in trace)
        assert reduced.term_count() == 0
        assert mixed_to_table(p).packed == 0


class TestSubstitutionPass:
    def test_substitution_alone_suffices(self):
        p = parse_polynomial("1+y1", 1)
        out, _ = substitution_pass(p)
        assert format_mixed(out) == "x1"

    def test_all_complements_remerge_to_one_term(self):
        p = parse_polynomial("y1y2y3", 3)
        out, _ = substitution_pass(p)
        assert mixed_to_table(out) == mixed_to_table(p)
        assert out.term_count() == 1

    def test_unmergeable_pure_x_unchanged(self):
        p = parse_polynomial("x1x2", 2)
        out, _ = substitution_pass(p, PAPER)
        assert out == p

    def test_value_preserved(self):
        rng = random.Random(37)
        for _ in range(40):
            n = rng.randint(1, 7)
            p = random_mixed(rng, n)
            for mode in (GENERALIZED, PAPER):
                out, _ = substitution_pass(p, mode)
                assert mixed_to_table(out) == mixed_to_table(p)


class TestAlgorithm1:
    def test_example1(self):
        poly, report = algorithm1(SUM2SQ, PAPER)
        assert format_mixed(poly) == "1+x3x4+x2x3y4+x1x2y3y4"
        assert report.initial_terms == 8
        assert report.after_merge_terms == 4
        assert report.selected_terms == 4
        assert mixed_to_table(poly) == SUM2SQ

    def test_example1_generalized_reaches_four_terms(self):
        poly, _ = algorithm1(SUM2SQ, GENERALIZED)
        assert poly.term_count() <= 4
        assert mixed_to_table(poly) == SUM2SQ

    def test_constant_zero(self):
        poly, report = algorithm1(TruthTable(3, 0))
        assert poly.term_count() == 0
        assert report.selected_terms == 0

    def test_report_invariants(self):
        rng = random.Random(38)
        for _ in range(80):
            n = rng.randint(1, 8)
            t = TruthTable(n, rng.getrandbits(1 << n))
            for mode in (GENERALIZED, PAPER):
                poly, report = algorithm1(t, mode)
                assert mixed_to_table(poly) == t
                assert report.selected_terms == poly.term_count()
                assert report.selected_terms <= min(
                    report.after_merge_terms, report.after_substitution_terms
                )
                assert report.after_merge_terms <= report.initial_terms
                assert report.initial_terms <= 1 << (n - 1)

    def test_deterministic(self):
        rng = random.Random(39)
        for _ in range(20):
            n = rng.randint(1, 8)
            t = TruthTable(n, rng.getrandbits(1 << n))
            p1, r1 = algorithm1(t)
            p2, r2 = algorithm1(t)
            assert p1 == p2
            assert r1.merge_trace == r2.merge_trace

    def test_report_text(self):
        _, report = algorithm1(SUM2SQ, PAPER)
        text = report.to_text(include_trace=True)
        assert "initial_terms 8" in text
        assert "merge y1y2x3x4 + y1x2x3x4 -> y1x3x4" in text
        assert text.splitlines()[-1].startswith("elapsed_seconds")

    def test_pure_python_path_n_above_kernel_limit(self):
        rng = random.Random(40)
        t = TruthTable(13, rng.getrandbits(1 << 13))
        poly, report = algorithm1(t)
        assert mixed_to_table(poly) == t
        assert report.selected_terms <= 1 << 12
