"""Alphabet, Word, and Window basics."""

import pytest

from morsetoeplitz import Alphabet, BINARY, DomainError, RangeError, Word, parse_window
from morsetoeplitz.words import Window


class TestAlphabet:
    def test_binary_symbols(self):
        assert BINARY.symbols == ("0", "1")
        assert BINARY.size == 2
        assert len(BINARY) == 2
        assert str(BINARY) == "01"

    def test_from_names(self):
        a = Alphabet.from_names("abc")
        assert a.symbols == ("a", "b", "c")
        assert a.index("b") == 1
        assert a.name(2) == "c"

    def test_index_of_foreign_symbol(self):
        with pytest.raises(DomainError):
            BINARY.index("2")

    def test_name_of_foreign_letter(self):
        with pytest.raises(DomainError):
            BINARY.name(2)

    def test_too_small(self):
        with pytest.raises(DomainError):
            Alphabet(("0",))

    def test_duplicate_symbols(self):
        with pytest.raises(DomainError):
            Alphabet(("0", "0"))

    def test_multichar_symbol(self):
        with pytest.raises(DomainError):
            Alphabet(("ab", "c"))

    def test_dot_reserved_for_windows(self):
        with pytest.raises(DomainError):
            Alphabet((".", "x"))

    def test_word_parsing_round_trip(self):
        w = BINARY.word("0110")
        assert w.letters == b"\x00\x01\x01\x00"
        assert w.text == "0110"
        with pytest.raises(DomainError):
            BINARY.word("012")


class TestWord:
    def test_letters_validated(self):
        with pytest.raises(DomainError):
            Word(BINARY, b"\x02")

    def test_len_iter_getitem(self):
        w = BINARY.word("010")
        assert len(w) == 3
        assert list(w) == [0, 1, 0]
        assert w[1] == 1
        assert w[1:].text == "10"
        assert isinstance(w[1:], Word)

    def test_concatenation(self):
        assert (BINARY.word("01") + BINARY.word("10")).text == "0110"

    def test_concatenation_needs_one_alphabet(self):
        with pytest.raises(DomainError):
            BINARY.word("01") + Alphabet.from_names("012").word("2")

    def test_ordering_is_letterwise(self):
        words = [BINARY.word(t) for t in ("10", "00", "01")]
        assert [w.text for w in sorted(words)] == ["00", "01", "10"]

    def test_factors(self):
        w = BINARY.word("0110")
        assert {f.text for f in w.factors(2)} == {"01", "11", "10"}
        assert {f.text for f in w.factors(4)} == {"0110"}

    def test_factors_length_out_of_range(self):
        w = BINARY.word("01")
        with pytest.raises(RangeError):
            w.factors(0)
        with pytest.raises(RangeError):
            w.factors(3)

    def test_complement(self):
        assert BINARY.word("0110").complement().text == "1001"
        with pytest.raises(DomainError):
            Alphabet.from_names("012").word("012").complement()

    def test_count(self):
        w = BINARY.word("01101")
        assert w.count(0) == 2
        assert w.count(1) == 3
        with pytest.raises(DomainError):
            w.count(2)


class TestWindow:
    def test_bilateral_indexing(self):
        win = Window(BINARY.word("0110"), 2)
        assert win.start == -2
        assert win.stop == 2
        assert len(win) == 4
        assert [win.at(i) for i in range(-2, 2)] == [0, 1, 1, 0]

    def test_at_out_of_range(self):
        win = Window(BINARY.word("0110"), 2)
        with pytest.raises(RangeError):
            win.at(2)
        with pytest.raises(RangeError):
            win.at(-3)

    def test_origin_bounds(self):
        # origin == len(word) is legal: all letters sit left of the point
        assert Window(BINARY.word("01"), 2).text == "01."
        with pytest.raises(RangeError):
            Window(BINARY.word("01"), 3)

    def test_shift(self):
        win = Window(BINARY.word("0110"), 2)
        assert win.shift(1).at(0) == win.at(1)
        assert win.shift(-2).start == 0

    def test_restrict(self):
        win = Window(BINARY.word("011010"), 3)
        sub = win.restrict(-1, 2)
        assert sub.text == "1.01"
        assert sub.start == -1

    def test_restrict_must_stay_inside(self):
        win = Window(BINARY.word("0110"), 2)
        with pytest.raises(RangeError):
            win.restrict(-3, 1)

    def test_restrict_must_keep_the_origin(self):
        win = Window(BINARY.word("011010"), 3)
        with pytest.raises(RangeError):
            win.restrict(1, 3)

    def test_text_round_trip(self):
        win = parse_window("1001.0110", BINARY)
        assert win.origin == 4
        assert win.text == "1001.0110"
        assert parse_window(".01", BINARY).start == 0

    def test_parse_window_needs_one_dot(self):
        with pytest.raises(DomainError):
            parse_window("0110", BINARY)
        with pytest.raises(DomainError):
            parse_window("0.1.0", BINARY)
