"""Alphabets, finite words, and origin-marked windows.

Letters are small integer indices into an :class:`Alphabet`.  A :class:`Word`
stores them packed in ``bytes``, so slicing, hashing, and comparison are
cheap and words of up to 255 distinct letters cost one byte per letter.

A :class:`Window` is a finite excerpt of a bilaterally infinite sequence:
the letter at position ``origin`` carries bilateral index 0, positions to
its left carry -1, -2, and so on.  Windows render with a decimal point
written immediately before index 0, as in ``"10010110.01101001"``.

All three types are immutable and safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, RangeError

MAX_ALPHABET_SIZE = 255


@dataclass(frozen=True)
class Alphabet:
    """An ordered tuple of at least two distinct single-character symbols."""

    symbols: tuple[str, ...]

    def __post_init__(self) -> None:
        if not 2 <= len(self.symbols) <= MAX_ALPHABET_SIZE:
            raise DomainError(
                f"alphabet needs between 2 and {MAX_ALPHABET_SIZE} letters, "
                f"got {len(self.symbols)}"
            )
        if len(set(self.symbols)) != len(self.symbols):
            raise DomainError("alphabet symbols must be distinct")
        for sym in self.symbols:
            if len(sym) != 1 or not sym.isprintable() or sym == ".":
                raise DomainError(f"bad alphabet symbol {sym!r}")

    @classmethod
    def from_names(cls, names: str) -> Alphabet:
        return cls(tuple(names))

    @property
    def size(self) -> int:
        return len(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def index(self, name: str) -> int:
        """Letter index of a symbol, or a domain error for foreign symbols."""
        try:
            return self.symbols.index(name)
        except ValueError:
            raise DomainError(f"symbol {name!r} is not in alphabet {self}") from None

    def name(self, letter: int) -> str:
        if not 0 <= letter < len(self.symbols):
            raise DomainError(f"letter {letter} is not in alphabet {self}")
        return self.symbols[letter]

    def word(self, text: str) -> Word:
        """Parse a word from its rendered text."""
        return Word(self, bytes(self.index(ch) for ch in text))

    def __str__(self) -> str:
        return "".join(self.symbols)


#: The two-letter alphabet 0, 1 used by the Morse and Toeplitz systems.
BINARY = Alphabet(("0", "1"))


@dataclass(frozen=True)
class Word:
    """An immutable finite word; letters are indices into ``alphabet``."""

    alphabet: Alphabet
    letters: bytes

    def __post_init__(self) -> None:
        if self.letters and max(self.letters) >= self.alphabet.size:
            raise DomainError(
                f"letter {max(self.letters)} out of range for alphabet {self.alphabet}"
            )

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word(self.alphabet, self.letters[item])
        return self.letters[item]

    def __add__(self, other: Word) -> Word:
        if other.alphabet != self.alphabet:
            raise DomainError("cannot concatenate words over different alphabets")
        return Word(self.alphabet, self.letters + other.letters)

    def __lt__(self, other: Word):
        if not isinstance(other, Word):
            return NotImplemented
        return self.letters < other.letters

    @property
    def text(self) -> str:
        return "".join(self.alphabet.symbols[a] for a in self.letters)

    def __str__(self) -> str:
        return self.text

    def __repr__(self) -> str:
        return f"Word({self.text!r})"

    def factors(self, n: int) -> set[Word]:
        """All length-n factors (contiguous subwords), as a set."""
        if not 1 <= n <= len(self.letters):
            raise RangeError(f"factor length {n} out of range 1..{len(self.letters)}")
        data = self.letters
        seen = {data[i : i + n] for i in range(len(data) - n + 1)}
        return {Word(self.alphabet, b) for b in seen}

    def complement(self) -> Word:
        """Swap the two letters of a binary word (the bar map)."""
        if self.alphabet.size != 2:
            raise DomainError("complement is only defined over a two-letter alphabet")
        return Word(self.alphabet, self.letters.translate(_SWAP01))

    def count(self, letter: int) -> int:
        """Number of occurrences of a single letter."""
        if not 0 <= letter < self.alphabet.size:
            raise DomainError(f"letter {letter} not in alphabet {self.alphabet}")
        return self.letters.count(letter)


_SWAP01 = bytes.maketrans(b"\x00\x01", b"\x01\x00")


@dataclass(frozen=True)
class Window:
    """A word plus the position that carries bilateral index 0.

    ``origin`` may equal ``len(word)``: then every letter sits at a negative
    bilateral index and the decimal point renders at the far right.
    """

    word: Word
    origin: int

    def __post_init__(self) -> None:
        if not 0 <= self.origin <= len(self.word):
            raise RangeError(
                f"origin {self.origin} outside window of length {len(self.word)}"
            )

    def __len__(self) -> int:
        return len(self.word)

    @property
    def start(self) -> int:
        """Bilateral index of the first letter."""
        return -self.origin

    @property
    def stop(self) -> int:
        """Bilateral index one past the last letter."""
        return len(self.word) - self.origin

    def at(self, i: int) -> int:
        """Letter at bilateral index i."""
        pos = self.origin + i
        if not 0 <= pos < len(self.word):
            raise RangeError(f"bilateral index {i} outside [{self.start}, {self.stop})")
        return self.word.letters[pos]

    def shift(self, j: int) -> Window:
        """Move the origin by j: the letter formerly at index j now sits at 0."""
        return Window(self.word, self.origin + j)

    def restrict(self, lo: int, hi: int) -> Window:
        """Sub-window covering bilateral indices [lo, hi); needs lo <= 0 <= hi."""
        if not (self.start <= lo <= hi <= self.stop):
            raise RangeError(f"[{lo}, {hi}) is not inside [{self.start}, {self.stop})")
        if not lo <= 0 <= hi:
            raise RangeError("a window must keep bilateral index 0 in range")
        return Window(self.word[self.origin + lo : self.origin + hi], -lo)

    @property
    def text(self) -> str:
        body = self.word.text
        return body[: self.origin] + "." + body[self.origin :]

    def __str__(self) -> str:
        return self.text

    def __repr__(self) -> str:
        return f"Window({self.text!r})"


def parse_window(text: str, alphabet: Alphabet) -> Window:
    """Parse a rendered window such as ``"1001.0110"``."""
    if text.count(".") != 1:
        raise DomainError("a window needs exactly one '.' marking the origin")
    left, right = text.split(".")
    return Window(alphabet.word(left + right), len(left))
