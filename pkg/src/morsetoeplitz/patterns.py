"""Forbidden-pattern scanners.

Two patterns are searched for:

* an overlap BBb, a square BB immediately followed by the first letter of B
  again; words avoiding it are exactly the factors of the Morse minimal set
  (over the binary alphabet);
* a square BB where B contains an even number of a marked letter, zero
  included; binary words avoiding it are exactly the factors of the
  Toeplitz minimal set.

Witnesses are reported deterministically: smallest start, then smallest
half length.  The scan is the naive quadratic sweep over (start, half
length); for long words the per-length equality tests are vectorized with
numpy, which changes constants but not the asymptotics or the tie-break.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import CapacityError, DomainError
from .substitution import MORSE, TOEPLITZ
from .words import Word

OVERLAP_KIND = "overlap_BBb"
EVEN_SQUARE_KIND = "even_square_BB"

#: Words longer than this are refused by the scanners.
DEFAULT_SCAN_CAP = 1 << 16

# below this length the plain double loop beats numpy's call overhead
_VECTOR_MIN = 96


@dataclass(frozen=True)
class PatternWitness:
    """Location of one forbidden pattern: B = w[start : start + period]."""

    start: int
    period: int
    kind: str
    zero: int | None = None

    def matches(self, w: Word) -> bool:
        """Replay the witness against a word."""
        i, n = self.start, self.period
        data = w.letters
        if i < 0 or n < 1:
            return False
        if data[i : i + n] != data[i + n : i + 2 * n]:
            return False
        if self.kind == OVERLAP_KIND:
            return i + 2 * n < len(data) and data[i + 2 * n] == data[i]
        if self.kind == EVEN_SQUARE_KIND:
            if i + 2 * n > len(data) or self.zero is None:
                return False
            return data[i : i + n].count(self.zero) % 2 == 0
        return False


def _check_scan_len(w: Word, max_len: int) -> None:
    if len(w) > max_len:
        raise CapacityError(f"word of length {len(w)} exceeds scan cap {max_len}")


def _overlap_small(data: bytes) -> PatternWitness | None:
    n = len(data)
    for i in range(n - 2):
        top = (n - 1 - i) // 2
        for ell in range(1, top + 1):
            if (
                data[i + 2 * ell] == data[i]
                and data[i : i + ell] == data[i + ell : i + 2 * ell]
            ):
                return PatternWitness(i, ell, OVERLAP_KIND)
    return None


def _overlap_vector(data: bytes) -> PatternWitness | None:
    a = np.frombuffer(data, dtype=np.uint8)
    n = len(a)
    best: tuple[int, int] | None = None
    for ell in range(1, (n - 1) // 2 + 1):
        eq = a[:-ell] == a[ell:]
        count = n - 2 * ell  # candidate starts 0 .. count-1
        if count <= 0:
            break
        c = np.concatenate(([0], np.cumsum(eq)))
        runs = (c[ell + 1 : ell + 1 + count] - c[:count]) == ell + 1
        hits = np.flatnonzero(runs)
        if hits.size:
            cand = (int(hits[0]), ell)
            if best is None or cand < best:
                best = cand
    if best is None:
        return None
    return PatternWitness(best[0], best[1], OVERLAP_KIND)


def find_overlap(w: Word, max_len: int = DEFAULT_SCAN_CAP) -> PatternWitness | None:
    """First overlap BBb in the word, or None; works over any alphabet."""
    _check_scan_len(w, max_len)
    if len(w) < 3:
        return None
    if len(w) < _VECTOR_MIN:
        return _overlap_small(w.letters)
    return _overlap_vector(w.letters)


def _even_square_small(data: bytes, zero: int) -> PatternWitness | None:
    n = len(data)
    for i in range(n - 1):
        top = (n - i) // 2
        for ell in range(1, top + 1):
            if (
                data[i : i + ell] == data[i + ell : i + 2 * ell]
                and data[i : i + ell].count(zero) % 2 == 0
            ):
                return PatternWitness(i, ell, EVEN_SQUARE_KIND, zero)
    return None


def _even_square_vector(data: bytes, zero: int) -> PatternWitness | None:
    a = np.frombuffer(data, dtype=np.uint8)
    n = len(a)
    z = np.concatenate(([0], np.cumsum(a == zero)))
    best: tuple[int, int] | None = None
    for ell in range(1, n // 2 + 1):
        eq = a[:-ell] == a[ell:]
        count = n - 2 * ell + 1
        if count <= 0:
            break
        c = np.concatenate(([0], np.cumsum(eq)))
        square = (c[ell : ell + count] - c[:count]) == ell
        even = (z[ell : ell + count] - z[:count]) % 2 == 0
        hits = np.flatnonzero(square & even)
        if hits.size:
            cand = (int(hits[0]), ell)
            if best is None or cand < best:
                best = cand
    if best is None:
        return None
    return PatternWitness(best[0], best[1], EVEN_SQUARE_KIND, zero)


def find_even_square(
    w: Word, zero: int = 0, max_len: int = DEFAULT_SCAN_CAP
) -> PatternWitness | None:
    """First square BB whose half contains evenly many ``zero`` letters.

    A count of zero occurrences counts as even, so any square over letters
    other than ``zero`` is already forbidden.
    """
    _check_scan_len(w, max_len)
    if not 0 <= zero < w.alphabet.size:
        raise DomainError(f"marked letter {zero} not in alphabet {w.alphabet}")
    if len(w) < 2:
        return None
    if len(w) < _VECTOR_MIN:
        return _even_square_small(w.letters, zero)
    return _even_square_vector(w.letters, zero)


@dataclass(frozen=True)
class WordReport:
    """Classification facts about one binary word, reported independently."""

    word: Word
    overlap: PatternWitness | None
    even_square: PatternWitness | None
    morse_factor: bool | None
    toeplitz_factor: bool | None

    @property
    def overlap_free(self) -> bool:
        return self.overlap is None

    @property
    def toeplitz_admissible(self) -> bool:
        return self.even_square is None


def classify_word(
    w: Word, factor_bound: int = 16, max_len: int = DEFAULT_SCAN_CAP
) -> WordReport:
    """Run both scanners and, when the word is short enough, both factor tests.

    Factor membership is decided against the Morse and Toeplitz languages
    for lengths up to ``factor_bound``; beyond that the factor fields are
    None, meaning unchecked.  The word must be over the binary alphabet 01.
    """
    if w.alphabet.size != 2 or w.alphabet.symbols != ("0", "1"):
        raise DomainError("classify_word expects a word over the alphabet 01")
    overlap = find_overlap(w, max_len)
    square = find_even_square(w, 0, max_len)
    morse: bool | None = None
    toeplitz: bool | None = None
    if len(w) == 0:
        morse = True
        toeplitz = True
    elif len(w) <= factor_bound:
        morse = w in MORSE.language(len(w))
        toeplitz = w in TOEPLITZ.language(len(w))
    return WordReport(w, overlap, square, morse, toeplitz)
