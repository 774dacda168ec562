import random

import pytest

from boolpoly.truthtable import (
    TruthTable,
    emit_table,
    parse_table,
    split_support,
)


def is_prime(k):
    return k >= 2 and all(k % d for d in range(2, k))


class TestFromPredicate:
    def test_constant_zero(self):
        t = TruthTable.from_predicate(3, lambda k: 0)
        assert t.bits == (0,) * 8

    def test_prime_indicator(self):
        t = TruthTable.from_predicate(4, is_prime)
        assert {k for k in range(16) if t[k]} == {2, 3, 5, 7, 11, 13}

    def test_sum_of_two_squares(self):
        squares = [a * a for a in range(5)]
        pred = lambda k: any(k - s in squares for s in squares if s <= k)
        t = TruthTable.from_predicate(4, pred)
        assert {k for k in range(16) if t[k]} == {0, 1, 2, 4, 5, 8, 9, 10, 13}

    @pytest.mark.parametrize("n", [0, -1, 25, 100])
    def test_n_out_of_range(self, n):
        with pytest.raises(ValueError):
            TruthTable.from_predicate(n, lambda k: 0)

    def test_index_convention_x1_is_msb(self):
        # input word value == integer index
        t = TruthTable.from_predicate(4, is_prime)
        assert t[2] == 1
        assert t[4] == 0


class TestSplitSupport:
    def test_all_zero(self):
        s = split_support(TruthTable(3, 0))
        assert s.s1 == frozenset()
        assert s.s0 == frozenset(range(8))

    def test_indicator_of_zero(self):
        s = split_support(TruthTable.from_ones(3, [0]))
        assert s.s1 == {0}

    def test_sum_two_squares_split(self):
        squares = [a * a for a in range(5)]
        pred = lambda k: any(k - s in squares for s in squares if s <= k)
        s = split_support(TruthTable.from_predicate(4, pred))
        assert s.s1 == {0, 1, 2, 4, 5, 8, 9, 10, 13}
        assert s.s0 == {3, 6, 7, 11, 12, 14, 15}

    def test_partition(self):
        rng = random.Random(11)
        for _ in range(50):
            n = rng.randint(1, 8)
            t = TruthTable(n, rng.getrandbits(1 << n))
            s = split_support(t)
            assert s.s0 | s.s1 == frozenset(range(1 << n))
            assert not s.s0 & s.s1
            assert len(s.s0) + len(s.s1) == 1 << n


class TestTableFormat:
    def test_parse_and_gate(self):
        t = parse_table("n 2\n0001")
        assert t.n == 2
        assert t.bits == (0, 0, 0, 1)

    def test_emit_all_zero_n1(self):
        assert emit_table(TruthTable(1, 0)) == "n 1\n00\n"

    def test_round_trip_prime_table(self):
        t = TruthTable.from_predicate(4, is_prime)
        assert parse_table(emit_table(t)) == t

    def test_round_trip_random(self):
        rng = random.Random(5)
        for _ in range(30):
            n = rng.randint(1, 9)
            t = TruthTable(n, rng.getrandbits(1 << n))
            text = emit_table(t)
            assert parse_table(text) == t
            assert emit_table(parse_table(text)) == text

    @pytest.mark.parametrize(
        "text",
        [
            "",
            "n 2",
            "m 2\n0001",
            "n two\n0001",
            "n 2\n001",
            "n 2\n00011",
            "n 2\n00x1",
            "n 0\n",
        ],
    )
    def test_malformed(self, text):
        with pytest.raises(ValueError):
            parse_table(text)

    def test_n_above_limit_rejected(self):
        with pytest.raises(ValueError):
            parse_table("n 25\n" + "0" * (1 << 25))


def test_getitem_bounds():
    t = TruthTable(2, 0b0001)
    with pytest.raises(IndexError):
        t[4]
    with pytest.raises(IndexError):
        t[-1]
