"""Constant-length substitutions and the words they generate.

A substitution of length r sends every letter to a word of r letters over
the same alphabet.  Applied letterwise it maps words to words; iterated
from a periodic seed it fills a bilateral window coherently.

Conventions used throughout:

* A seed (a, b, p) asks for the two-sided point of the p-th iterate whose
  letter at bilateral index -1 is a and whose letter at index 0 is b.  It
  is admissible when the p-th image of a ends with a and the p-th image of
  b begins with b; then the leftward iterates of a and the rightward
  iterates of b grow coherently and any finite radius can be filled.
* Parse phases are residues of bilateral indices.  A window tiles at phase
  j in [0, r**k) when the blocks starting at bilateral indices congruent
  to j modulo r**k all belong to the prescribed block set.

``language`` computes the n-block language of a primitive substitution by
closing the set of 2-blocks under the substitution and then reading factors
of high iterates; ``language_brute`` is the slow iterate-and-collect oracle
kept for cross-validation and must agree with it.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass

from . import graphs
from .errors import (
    CapacityError,
    DegenerateError,
    DomainError,
    InsufficientWindowError,
    PrimitivityError,
    RangeError,
    SeedError,
)
from .words import Alphabet, Window, Word

#: Cap on the length of any materialized word.
DEFAULT_MAX_LEN = 1 << 20


@dataclass(frozen=True, order=True)
class Seed:
    """Periodic seed: letter ``left`` at index -1, ``right`` at index 0."""

    left: int
    right: int
    period: int

    def __str__(self) -> str:
        return f"({self.left}.{self.right}, p={self.period})"


@dataclass(frozen=True)
class Substitution:
    """A constant-length substitution; ``images[a]`` is the image of letter a."""

    alphabet: Alphabet
    images: tuple[Word, ...]

    def __post_init__(self) -> None:
        if len(self.images) != self.alphabet.size:
            raise DomainError("need exactly one image per letter")
        lengths = {len(im) for im in self.images}
        if lengths != {len(self.images[0])} or len(self.images[0]) < 2:
            raise DomainError("images must share one length r >= 2")
        for im in self.images:
            if im.alphabet != self.alphabet:
                raise DomainError("images must be words over the same alphabet")

    @property
    def length(self) -> int:
        """The constant image length r."""
        return len(self.images[0])

    def image(self, letter: int) -> Word:
        if not 0 <= letter < self.alphabet.size:
            raise DomainError(f"letter {letter} not in alphabet {self.alphabet}")
        return self.images[letter]

    def spec(self) -> str:
        """Render in the ``a->w;b->w`` rule format accepted by parse_substitution."""
        return ";".join(
            f"{self.alphabet.symbols[a]}->{self.images[a].text}"
            for a in range(self.alphabet.size)
        )

    def __str__(self) -> str:
        return self.spec()

    # -- application ------------------------------------------------------

    def apply(self, w: Word) -> Word:
        """Image of a word, letterwise concatenation; length multiplies by r."""
        if w.alphabet != self.alphabet:
            raise DomainError("word is over a different alphabet")
        imgs = [im.letters for im in self.images]
        return Word(self.alphabet, b"".join(imgs[a] for a in w.letters))

    def power(self, k: int, max_len: int = DEFAULT_MAX_LEN) -> Substitution:
        """The k-th iterate as a substitution of length r**k."""
        if k < 1:
            raise RangeError("power needs k >= 1")
        if self.length**k > max_len:
            raise CapacityError(f"r**k = {self.length}**{k} exceeds cap {max_len}")
        base = [im.letters for im in self.images]
        cur = list(base)
        for _ in range(k - 1):
            cur = [b"".join(base[a] for a in w) for w in cur]
        return Substitution(
            self.alphabet, tuple(Word(self.alphabet, w) for w in cur)
        )

    # -- periodic points --------------------------------------------------

    def _last_letter_map(self) -> list[int]:
        return [im.letters[-1] for im in self.images]

    def _first_letter_map(self) -> list[int]:
        return [im.letters[0] for im in self.images]

    def periodic_seeds(self, p: int) -> list[Seed]:
        """All admissible seeds for the p-th iterate, sorted by (a, b).

        Only boundary letters matter: the p-th image of a ends with a iff
        the p-fold composition of the last-letter map fixes a, and dually
        for first letters, so no image word is materialized here.
        """
        if p < 1:
            raise RangeError("period must be >= 1")
        last = self._last_letter_map()
        first = self._first_letter_map()
        n = self.alphabet.size
        fp = list(range(n))
        gp = list(range(n))
        for _ in range(p):
            fp = [last[a] for a in fp]
            gp = [first[a] for a in gp]
        return [
            Seed(a, b, p)
            for a in range(n)
            if fp[a] == a
            for b in range(n)
            if gp[b] == b
        ]

    def periodic_window(
        self, seed: Seed, radius: int, max_len: int = DEFAULT_MAX_LEN
    ) -> Window:
        """Central window of the periodic point fixed by the seed.

        Covers bilateral indices [-radius, radius); the origin letter is the
        seed's right letter.
        """
        if radius < 1:
            raise RangeError("radius must be >= 1")
        n = self.alphabet.size
        if not (0 <= seed.left < n and 0 <= seed.right < n) or seed.period < 1:
            raise SeedError(f"seed {seed} is malformed for {self}")
        if seed not in set(self.periodic_seeds(seed.period)):
            raise SeedError(f"seed {seed} is not admissible for {self}")
        sp = self.power(seed.period, max_len)
        imgs = [im.letters for im in sp.images]
        left = bytes([seed.left])
        right = bytes([seed.right])
        while len(left) < radius:
            left = b"".join(imgs[a] for a in left)
            if len(left) > max_len:
                raise CapacityError(f"window growth exceeds cap {max_len}")
        while len(right) < radius:
            right = b"".join(imgs[a] for a in right)
            if len(right) > max_len:
                raise CapacityError(f"window growth exceeds cap {max_len}")
        body = left[-radius:] + right[:radius]
        return Window(Word(self.alphabet, body), radius)

    # -- language ---------------------------------------------------------

    def language(self, n: int) -> frozenset[Word]:
        """The set of n-blocks of the minimal system of a primitive substitution."""
        if n < 1:
            raise RangeError("language needs n >= 1")
        if not graphs.build_graph(self).is_primitive():
            raise PrimitivityError(
                "language is defined for primitive substitutions only; analyze the "
                "graph, or collapse equal images with identify_equal_images first"
            )
        return _language(self, n)

    # -- structure --------------------------------------------------------

    def is_injective(self) -> bool:
        """Whether all letter images are distinct words."""
        return len({im.letters for im in self.images}) == len(self.images)

    def identify_equal_images(self) -> tuple[Substitution, tuple[int, ...]]:
        """Quotient letters with identical images until injective.

        Returns the quotient substitution and the letter map from the
        original alphabet onto the quotient alphabet.  Each class is named
        after its smallest member's symbol.  Collapsing to a single letter
        raises DegenerateError.
        """
        current = self
        mapping = list(range(self.alphabet.size))
        while True:
            groups: dict[bytes, list[int]] = {}
            for a, im in enumerate(current.images):
                groups.setdefault(im.letters, []).append(a)
            if all(len(g) == 1 for g in groups.values()):
                return current, tuple(mapping)
            classes = sorted(groups.values(), key=min)
            if len(classes) < 2:
                raise DegenerateError("all letters share one image word")
            cls_of = [0] * current.alphabet.size
            for ci, members in enumerate(classes):
                for a in members:
                    cls_of[a] = ci
            alph = Alphabet(
                tuple(current.alphabet.symbols[min(m)] for m in classes)
            )
            images = tuple(
                Word(alph, bytes(cls_of[b] for b in current.images[min(m)].letters))
                for m in classes
            )
            current = Substitution(alph, images)
            mapping = [cls_of[x] for x in mapping]

    # -- desubstitution ---------------------------------------------------

    def desubstitute(
        self, k: int, win: Window, max_len: int = DEFAULT_MAX_LEN
    ) -> list[tuple[int, Word]]:
        """Phases at which the window tiles by k-th-iterate images.

        For each bilateral residue j in [0, r**k) the maximal aligned run of
        full r**k-blocks inside the window is checked; a phase is reported
        only when the run has at least 3 tiles and every tile is a letter
        image.  When two letters share an image the smaller letter is
        recovered.
        """
        if k < 0:
            raise RangeError("desubstitute needs k >= 0")
        if win.word.alphabet != self.alphabet:
            raise DomainError("window is over a different alphabet")
        span = self.length**k
        if len(win) < 3 * span:
            raise InsufficientWindowError(
                f"window of length {len(win)} is shorter than 3 tiles of {span}"
            )
        if k == 0:
            return [(0, win.word)]
        sp = self.power(k, max_len)
        block_of: dict[bytes, int] = {}
        for a in reversed(range(self.alphabet.size)):
            block_of[sp.images[a].letters] = a
        data = win.word.letters
        lo = win.start
        out: list[tuple[int, Word]] = []
        for j in range(span):
            t0 = lo + ((j - lo) % span)
            count = (win.stop - t0) // span
            if count < 3:
                continue
            off = t0 - lo
            recovered = bytearray()
            for i in range(count):
                letter = block_of.get(data[off + i * span : off + (i + 1) * span])
                if letter is None:
                    break
                recovered.append(letter)
            else:
                out.append((j, Word(self.alphabet, bytes(recovered))))
        return out


@functools.lru_cache(maxsize=None)
def _language(sub: Substitution, n: int) -> frozenset[Word]:
    """2-block closure, then factors of an iterate that covers length n."""
    r = sub.length
    imgs = [im.letters for im in sub.images]
    w0 = imgs[0]
    pairs = {w0[i : i + 2] for i in range(len(w0) - 1)}
    changed = True
    while changed:
        changed = False
        for uv in list(pairs):
            x = imgs[uv[0]] + imgs[uv[1]]
            for i in range(len(x) - 1):
                p = x[i : i + 2]
                if p not in pairs:
                    pairs.add(p)
                    changed = True
    if n == 1:
        letters = {a for uv in pairs for a in uv}
        return frozenset(Word(sub.alphabet, bytes([a])) for a in letters)
    m = 0
    cover = 1
    while cover < n:
        cover *= r
        m += 1
    pm = sub.power(m)
    pimgs = [im.letters for im in pm.images]
    blocks: set[bytes] = set()
    for uv in pairs:
        x = pimgs[uv[0]] + pimgs[uv[1]]
        blocks.update(x[i : i + n] for i in range(len(x) - n + 1))
    return frozenset(Word(sub.alphabet, b) for b in blocks)


def language_brute(
    sub: Substitution,
    n: int,
    letter: int = 0,
    blowup: int = 64,
    max_len: int = DEFAULT_MAX_LEN,
) -> frozenset[Word]:
    """Slow oracle for ``language``: iterate on one letter, collect factors.

    The letter is iterated until its image is at least ``blowup * n`` long;
    the n-factors of that single word are returned.  Kept deliberately
    independent of the closure algorithm.
    """
    if n < 1:
        raise RangeError("language needs n >= 1")
    if not 0 <= letter < sub.alphabet.size:
        raise DomainError(f"letter {letter} not in alphabet {sub.alphabet}")
    imgs = [im.letters for im in sub.images]
    w = bytes([letter])
    target = blowup * n
    while len(w) < target:
        w = b"".join(imgs[a] for a in w)
        if len(w) > max_len:
            raise CapacityError(f"brute-force iterate exceeds cap {max_len}")
    return frozenset(
        Word(sub.alphabet, w[i : i + n]) for i in range(len(w) - n + 1)
    )


def minimal_seed_period(sub: Substitution, limit: int | None = None) -> int:
    """Smallest p for which the substitution has an admissible seed."""
    if limit is None:
        limit = max(64, sub.alphabet.size**2)
    last = sub._last_letter_map()
    first = sub._first_letter_map()
    n = sub.alphabet.size
    fp = list(range(n))
    gp = list(range(n))
    for p in range(1, limit + 1):
        fp = [last[a] for a in fp]
        gp = [first[a] for a in gp]
        if any(fp[a] == a for a in range(n)) and any(gp[b] == b for b in range(n)):
            return p
    raise SeedError(f"no admissible seed with period <= {limit}")


def system_seeds(sub: Substitution, limit: int | None = None) -> list[Seed]:
    """Least-period seeds whose fixed points lie in the minimal system.

    An admissible seed (a, b) yields a point of the substitution's minimal
    set exactly when the center block ab is in the language; other seeds
    still fix two-sided points, but of the full shift only.  Requires a
    primitive substitution.
    """
    if limit is None:
        limit = max(64, sub.alphabet.size**2)
    lang2 = sub.language(2)
    for p in range(1, limit + 1):
        good = [
            s
            for s in sub.periodic_seeds(p)
            if Word(sub.alphabet, bytes((s.left, s.right))) in lang2
        ]
        if good:
            return good
    raise SeedError(f"no system seed with period <= {limit} for {sub}")


_RULE = re.compile(r"^(.)->(.+)$")


def parse_substitution(text: str) -> Substitution:
    """Parse the rule format ``a->w;b->w``; letters appear in rule order."""
    rules = []
    for part in text.split(";"):
        part = part.strip()
        m = _RULE.match(part)
        if m is None:
            raise DomainError(f"bad substitution rule {part!r}, expected 'a->word'")
        rules.append((m.group(1), m.group(2)))
    names = [lhs for lhs, _ in rules]
    if len(set(names)) != len(names):
        raise DomainError("duplicate letter on the left-hand side")
    alphabet = Alphabet(tuple(names))
    images = tuple(alphabet.word(rhs) for _, rhs in rules)
    return Substitution(alphabet, images)


#: The Morse substitution 0 -> 01, 1 -> 10.
MORSE = parse_substitution("0->01;1->10")

#: The Toeplitz substitution 0 -> 01, 1 -> 00.
TOEPLITZ = parse_substitution("0->01;1->00")
