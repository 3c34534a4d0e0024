"""Forbidden-pattern scanners against a brute-force oracle."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from morsetoeplitz import (
    Alphabet,
    BINARY,
    CapacityError,
    DomainError,
    EVEN_SQUARE_KIND,
    OVERLAP_KIND,
    PatternWitness,
    Seed,
    Word,
    classify_word,
    find_even_square,
    find_overlap,
)
from morsetoeplitz.patterns import (
    _VECTOR_MIN,
    _even_square_small,
    _even_square_vector,
    _overlap_small,
    _overlap_vector,
)


def brute_overlap(data):
    """Reference scan, written independently of the library's loop."""
    hits = []
    for i in range(len(data)):
        for n in range(1, len(data)):
            if i + 2 * n < len(data):
                if data[i : i + n] == data[i + n : i + 2 * n] and data[i + 2 * n] == data[i]:
                    hits.append((i, n))
    return min(hits) if hits else None


def brute_even_square(data, zero=0):
    hits = []
    for i in range(len(data)):
        for n in range(1, len(data)):
            if i + 2 * n <= len(data):
                half = data[i : i + n]
                if half == data[i + n : i + 2 * n] and half.count(zero) % 2 == 0:
                    hits.append((i, n))
    return min(hits) if hits else None


def all_binary(n):
    for x in range(1 << n):
        yield bytes((x >> i) & 1 for i in range(n))


def binary(data):
    return Word(BINARY, data)


def loc(witness):
    return None if witness is None else (witness.start, witness.period)


class TestFindOverlap:
    def test_squares_alone_are_not_overlaps(self):
        assert find_overlap(BINARY.word("0110")) is None
        assert find_overlap(BINARY.word("010011")) is None

    def test_simple_overlaps(self):
        w = find_overlap(BINARY.word("00011"))
        assert (w.start, w.period, w.kind) == (0, 1, OVERLAP_KIND)
        assert loc(find_overlap(BINARY.word("010101"))) == (0, 2)

    def test_reports_the_leftmost_shortest_witness(self):
        # the only overlap in 0110110 is the period-3 one at the start
        assert loc(find_overlap(BINARY.word("0110110"))) == (0, 3)

    def test_short_words(self):
        assert find_overlap(BINARY.word("")) is None
        assert find_overlap(BINARY.word("00")) is None
        assert loc(find_overlap(BINARY.word("000"))) == (0, 1)

    def test_works_over_larger_alphabets(self):
        abc = Alphabet.from_names("012")
        assert loc(find_overlap(abc.word("0120120"))) == (0, 3)

    def test_scan_cap(self):
        with pytest.raises(CapacityError):
            find_overlap(BINARY.word("0" * 20), max_len=10)

    def test_exhaustive_small_binary(self):
        for n in range(15):
            for data in all_binary(n):
                assert loc(find_overlap(binary(data))) == brute_overlap(data), data

    def test_morse_window_is_overlap_free(self, morse):
        win = morse.periodic_window(Seed(0, 0, 2), 256)
        assert find_overlap(win.word) is None


class TestFindEvenSquare:
    def test_examples(self):
        w = find_even_square(BINARY.word("0110"))
        assert (w.start, w.period, w.kind, w.zero) == (1, 1, EVEN_SQUARE_KIND, 0)
        assert loc(find_even_square(BINARY.word("00011"))) == (3, 1)
        assert loc(find_even_square(BINARY.word("010011"))) == (4, 1)

    def test_zero_count_of_zero_is_even(self):
        # a square over the other letter alone is already forbidden
        assert loc(find_even_square(BINARY.word("11"))) == (0, 1)

    def test_odd_zero_squares_are_allowed(self):
        assert find_even_square(BINARY.word("00")) is None
        assert find_even_square(BINARY.word("0101")) is None

    def test_marked_letter_selectable(self):
        assert find_even_square(BINARY.word("00"), zero=1) is not None
        assert find_even_square(BINARY.word("11"), zero=1) is None

    def test_marked_letter_validated(self):
        with pytest.raises(DomainError):
            find_even_square(BINARY.word("01"), zero=2)

    def test_short_words(self):
        assert find_even_square(BINARY.word("")) is None
        assert find_even_square(BINARY.word("1")) is None

    def test_exhaustive_small_binary(self):
        for n in range(15):
            for data in all_binary(n):
                assert loc(find_even_square(binary(data))) == brute_even_square(data), data

    def test_toeplitz_window_admits_no_even_square(self, toeplitz):
        win = toeplitz.periodic_window(Seed(0, 0, 2), 256)
        assert find_even_square(win.word) is None


class TestVectorizedAgreesWithLoop:
    """Same witnesses on both sides of the length threshold."""

    def test_random_words_around_the_threshold(self):
        rng = random.Random(20240817)
        for _ in range(150):
            n = rng.randrange(_VECTOR_MIN - 8, _VECTOR_MIN + 40)
            data = bytes(rng.randrange(2) for _ in range(n))
            assert loc(_overlap_small(data)) == loc(_overlap_vector(data))
            assert loc(_even_square_small(data, 0)) == loc(_even_square_vector(data, 0))

    def test_pattern_free_long_words(self, morse, toeplitz):
        m = morse.periodic_window(Seed(0, 0, 2), 64).word.letters
        t = toeplitz.periodic_window(Seed(0, 0, 2), 64).word.letters
        assert _overlap_small(m) is None and _overlap_vector(m) is None
        assert _even_square_small(t, 0) is None and _even_square_vector(t, 0) is None


class TestWitnessReplay:
    def test_found_witnesses_match(self):
        rng = random.Random(99)
        for _ in range(300):
            n = rng.randrange(0, 40)
            w = binary(bytes(rng.randrange(2) for _ in range(n)))
            for hit in (find_overlap(w), find_even_square(w)):
                if hit is not None:
                    assert hit.matches(w)

    def test_replay_rejects_wrong_locations(self):
        w = BINARY.word("00011")
        assert not PatternWitness(0, 1, EVEN_SQUARE_KIND, 0).matches(w)
        assert not PatternWitness(1, 1, OVERLAP_KIND).matches(w)
        assert not PatternWitness(-1, 1, OVERLAP_KIND).matches(w)
        assert not PatternWitness(0, 1, "unknown").matches(w)
        assert not PatternWitness(3, 1, EVEN_SQUARE_KIND, None).matches(w)


class TestClassifyWord:
    def test_examples(self):
        r = classify_word(BINARY.word("0110"))
        assert r.overlap is None and r.overlap_free
        assert loc(r.even_square) == (1, 1) and not r.toeplitz_admissible
        assert r.morse_factor is True
        assert r.toeplitz_factor is False

        r = classify_word(BINARY.word("00011"))
        assert loc(r.overlap) == (0, 1)
        assert r.morse_factor is False and r.toeplitz_factor is False

        r = classify_word(BINARY.word("010011"))
        assert r.overlap is None
        assert r.morse_factor is True and r.toeplitz_factor is False

    def test_empty_word_is_a_factor_of_both(self):
        r = classify_word(BINARY.word(""))
        assert r.morse_factor is True and r.toeplitz_factor is True

    def test_factor_fields_are_none_beyond_the_bound(self):
        r = classify_word(BINARY.word("01" * 10), factor_bound=8)
        assert r.morse_factor is None and r.toeplitz_factor is None

    def test_requires_the_binary_alphabet(self):
        with pytest.raises(DomainError):
            classify_word(Alphabet.from_names("012").word("01"))
        with pytest.raises(DomainError):
            classify_word(Alphabet.from_names("ab").word("ab"))

    def test_factor_flags_match_the_language(self, morse, toeplitz):
        for n in (3, 5):
            for data in all_binary(n):
                r = classify_word(binary(data))
                assert r.morse_factor == (r.word in morse.language(n))
                assert r.toeplitz_factor == (r.word in toeplitz.language(n))


class TestArbitraryWords:
    """Oracle agreement on words too long and too varied to enumerate."""

    sized = st.integers(2, 4).flatmap(
        lambda size: st.tuples(
            st.just(size), st.lists(st.integers(0, size - 1), max_size=60)
        )
    )

    @settings(derandomize=True, max_examples=300)
    @given(sized)
    def test_scanners_match_the_oracle(self, case):
        size, letters = case
        data = bytes(letters)
        word = Word(Alphabet.from_names("0123"[:size]), data)
        for hit, expected in (
            (find_overlap(word), brute_overlap(data)),
            (find_even_square(word, 0), brute_even_square(data, 0)),
        ):
            assert loc(hit) == expected
            if hit is not None:
                assert hit.matches(word)
