"""Block certificates for conjugacy with the Toeplitz and Morse systems.

A system is handed to the verifiers as a language source: either a
primitive substitution (windows come from its periodic seeds and blocks
from its language) or an explicit provider of windows and block sets.  All
checks are finite: they test every sampled window out to a radius plus
every language block of matching length.

A Toeplitz certificate (k, C0, C1) asserts that every point of the system
splits at exactly one bilateral phase into the 2**k-blocks C0 and C1, and
that the resulting token sequence, read over the token letters C0 = 0 and
C1 = 1, never contains a square BB in which B holds an even number of C0
tokens.  Accepted certificates recode token words into genuine Toeplitz
windows by C0 -> tau**k(0), C1 -> tau**k(1).

A Morse certificate (k, C0, C1, C0', C1') asserts a unique phase and, for
one parity of token positions, that the carrier tokens are C0/C1 with no
overlap BBb, while each token in between equals its value under the
nearest-neighbor table: C1,C1 -> C0; C0,C0 -> C1; C1,C0 -> C0'; C0,C1 ->
C1'.  Gap tokens are recoded by their neighbor-table identity rather than
by raw block value, since C0' or C1' may coincide with C0 or C1.

The searches enumerate candidate block tuples over language blocks in
lexicographic order and return the first certificate that verifies, hence
the least one.  ``derive_substitution`` runs the constructive direction:
from a block rule realizing a conjugacy onto an r-fold self-similar image
it builds the induced substitution on higher-block letters.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Mapping, Protocol, runtime_checkable

from .errors import (
    CapacityError,
    ConsistencyError,
    DomainError,
    InsufficientWindowError,
    PreconditionError,
    RangeError,
    StateError,
)
from .graphs import build_graph
from .patterns import find_even_square, find_overlap
from .sliding import LocalRule
from .substitution import (
    MORSE,
    Substitution,
    TOEPLITZ,
    system_seeds,
)
from .words import Alphabet, BINARY, Window, Word

# failure reasons reported by the verifiers
NO_PHASE = "no_phase"
MULTIPLE_PHASES = "multiple_phases"
TOKEN_PATTERN = "token_pattern"
GAP_RULE = "gap_rule"
BLOCKS_EQUAL = "blocks_equal"

_TOKEN_SYMBOLS = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz"

#: Token alphabet of Morse parses: 0 = C0, 1 = C1, a = C0', b = C1'.
MORSE_TOKENS = Alphabet(("0", "1", "a", "b"))
MORSE_TOKEN_NAMES = ("C0", "C1", "C0'", "C1'")

#: The six ordered token pairs that may appear in an accepted Morse parse,
#: as identity indices: C0C1, C0C1', C1C0, C1C0', C0'C0, C1'C1.
MORSE_ALLOWED_PAIRS = frozenset(
    {(0, 1), (0, 3), (1, 0), (1, 2), (2, 0), (3, 1)}
)

# nearest neighbor table: (left carrier, right carrier) -> (identity, block attr)
_GAP_TABLE = {
    (1, 1): (0, "c0"),
    (0, 0): (1, "c1"),
    (1, 0): (2, "c0p"),
    (0, 1): (3, "c1p"),
}


# -- certificates ---------------------------------------------------------


@dataclass(frozen=True)
class ToeplitzCertificate:
    k: int
    c0: Word
    c1: Word

    def __post_init__(self) -> None:
        if self.k < 0:
            raise DomainError("certificate scale k must be >= 0")
        span = 1 << self.k
        if len(self.c0) != span or len(self.c1) != span:
            raise DomainError(f"certificate blocks must have length 2**k = {span}")
        if self.c0.alphabet != self.c1.alphabet:
            raise DomainError("certificate blocks must share one alphabet")

    @property
    def span(self) -> int:
        return 1 << self.k


@dataclass(frozen=True)
class MorseCertificate:
    k: int
    c0: Word
    c1: Word
    c0p: Word
    c1p: Word

    def __post_init__(self) -> None:
        if self.k < 0:
            raise DomainError("certificate scale k must be >= 0")
        span = 1 << self.k
        for block in (self.c0, self.c1, self.c0p, self.c1p):
            if len(block) != span:
                raise DomainError(f"certificate blocks must have length 2**k = {span}")
            if block.alphabet != self.c0.alphabet:
                raise DomainError("certificate blocks must share one alphabet")

    @property
    def span(self) -> int:
        return 1 << self.k


def certificate_to_json(cert: ToeplitzCertificate | MorseCertificate) -> dict:
    if isinstance(cert, ToeplitzCertificate):
        return {
            "kind": "toeplitz",
            "k": cert.k,
            "C0": cert.c0.text,
            "C1": cert.c1.text,
        }
    return {
        "kind": "morse",
        "k": cert.k,
        "C0": cert.c0.text,
        "C1": cert.c1.text,
        "C0p": cert.c0p.text,
        "C1p": cert.c1p.text,
    }


def certificate_from_json(
    payload: dict, alphabet: Alphabet
) -> ToeplitzCertificate | MorseCertificate:
    try:
        kind = payload["kind"]
        k = int(payload["k"])
        c0 = alphabet.word(str(payload["C0"]))
        c1 = alphabet.word(str(payload["C1"]))
        if kind == "toeplitz":
            return ToeplitzCertificate(k, c0, c1)
        if kind == "morse":
            c0p = alphabet.word(str(payload["C0p"]))
            c1p = alphabet.word(str(payload["C1p"]))
            return MorseCertificate(k, c0, c1, c0p, c1p)
    except (KeyError, TypeError, ValueError) as exc:
        raise DomainError(f"malformed certificate payload: {exc}") from None
    raise DomainError(f"unknown certificate kind {kind!r}")


# -- parse results --------------------------------------------------------


@dataclass(frozen=True)
class PhaseParse:
    """One window parsed at one phase; ``start`` is the bilateral index of
    the first tile, and for Morse parses ``parity`` marks the carrier
    positions while ``tokens`` records neighbor-table identities."""

    phase: int
    start: int
    tokens: Word
    parity: int | None = None
    window: str = ""


@dataclass(frozen=True)
class ParseVerdict:
    """Outcome of a certificate verification.

    When accepted, ``phases`` holds one entry per sampled seed window (the
    language blocks checked alongside are not echoed).  Each sampled
    window must parse at exactly one eligible phase; any violation is
    recorded in ``failure_reason`` with the offending window in
    ``detail``."""

    accepted: bool
    phases: tuple[PhaseParse, ...]
    failure_reason: str | None
    kind: str
    radius: int
    detail: str = ""


# -- language sources -----------------------------------------------------


@runtime_checkable
class LanguageSource(Protocol):
    @property
    def alphabet(self) -> Alphabet: ...

    def blocks(self, n: int) -> frozenset[Word] | None: ...

    def sample_windows(self, radius: int) -> list[tuple[str, Window]]: ...


class SubstitutionSource:
    """Windows and blocks of the minimal system of a primitive substitution."""

    def __init__(self, substitution: Substitution) -> None:
        self.substitution = substitution

    @property
    def alphabet(self) -> Alphabet:
        return self.substitution.alphabet

    def blocks(self, n: int) -> frozenset[Word] | None:
        return self.substitution.language(n)

    def sample_windows(self, radius: int) -> list[tuple[str, Window]]:
        sub = self.substitution
        return [
            (f"seed {seed}", sub.periodic_window(seed, radius))
            for seed in system_seeds(sub)
        ]


@dataclass
class ExplicitSource:
    """Hand-supplied windows and block sets for systems without a substitution."""

    alphabet: Alphabet
    windows: tuple[Window, ...]
    blocks_by_length: Mapping[int, frozenset[Word]] = field(default_factory=dict)

    def blocks(self, n: int) -> frozenset[Word] | None:
        return self.blocks_by_length.get(n)

    def sample_windows(self, radius: int) -> list[tuple[str, Window]]:
        return [(f"window[{i}]", w) for i, w in enumerate(self.windows)]


def as_source(lang) -> LanguageSource:
    if isinstance(lang, Substitution):
        return SubstitutionSource(lang)
    if isinstance(lang, LanguageSource):
        return lang
    raise DomainError("expected a Substitution or a window/block provider")


# -- tiling ---------------------------------------------------------------


def _tile_runs(win: Window, span: int):
    """Yield (phase, start, tiles) for every bilateral residue with a run
    of at least 3 full tiles inside the window."""
    data = win.word.letters
    lo, hi = win.start, win.stop
    for j in range(span):
        t0 = lo + ((j - lo) % span)
        count = (hi - t0) // span
        if count < 3:
            continue
        off = t0 - lo
        tiles = [data[off + i * span : off + (i + 1) * span] for i in range(count)]
        yield j, t0, tiles


def parse_phases(
    win: Window, blocks: Iterable[Word], span: int
) -> list[PhaseParse]:
    """Phases at which the window tiles by the given blocks.

    Returns one entry per admissible bilateral residue; tokens are letters
    into the deduplicated block list, in the order given (sets are sorted
    first).  At least 3 full tiles are required to report a phase.
    """
    if isinstance(blocks, (set, frozenset)):
        blocks = sorted(blocks)
    ordered: list[Word] = []
    for b in blocks:
        if b not in ordered:
            ordered.append(b)
    if len(ordered) < 2:
        raise DomainError("need at least two distinct blocks")
    if any(len(b) != span for b in ordered):
        raise DomainError(f"all blocks must have length {span}")
    if len(ordered) > len(_TOKEN_SYMBOLS):
        raise CapacityError("too many distinct blocks to name tokens")
    if len(win) < 3 * span:
        raise InsufficientWindowError(
            f"window of length {len(win)} cannot hold 3 tiles of {span}"
        )
    token_alphabet = Alphabet(tuple(_TOKEN_SYMBOLS[: len(ordered)]))
    index = {b.letters: i for i, b in enumerate(ordered)}
    out = []
    for j, t0, tiles in _tile_runs(win, span):
        toks = bytearray()
        for t in tiles:
            letter = index.get(t)
            if letter is None:
                break
            toks.append(letter)
        else:
            out.append(PhaseParse(j, t0, Word(token_alphabet, bytes(toks))))
    return out


# -- Toeplitz verification ------------------------------------------------


def _toeplitz_eval_window(
    label: str, win: Window, cert: ToeplitzCertificate
) -> tuple[str | None, PhaseParse | None]:
    span = cert.span
    index = {cert.c0.letters: 0, cert.c1.letters: 1}
    parses = []
    for j, t0, tiles in _tile_runs(win, span):
        toks = bytearray()
        for t in tiles:
            letter = index.get(t)
            if letter is None:
                break
            toks.append(letter)
        else:
            parses.append(PhaseParse(j, t0, Word(BINARY, bytes(toks)), window=label))
    if not parses:
        return NO_PHASE, None
    long_parses = [p for p in parses if len(p.tokens) >= 4]
    if len(long_parses) > 1:
        return MULTIPLE_PHASES, None
    for p in parses:
        if find_even_square(p.tokens, 0) is not None:
            return TOKEN_PATTERN, None
    chosen = long_parses[0] if long_parses else parses[0]
    return None, chosen


def verify_toeplitz_certificate(
    lang, cert: ToeplitzCertificate, radius: int | None = None
) -> ParseVerdict:
    """Check a Toeplitz certificate on every sampled window and every
    language block of matching length."""
    source = as_source(lang)
    span = cert.span
    if radius is None:
        radius = 32 * span
    if radius < 3 * span:
        raise RangeError(f"radius {radius} below 3 tiles of {span}")
    if cert.c0 == cert.c1:
        return ParseVerdict(
            False, (), BLOCKS_EQUAL, "toeplitz", radius, "C0 and C1 coincide"
        )
    entries = []
    for label, win in _test_windows(source, radius):
        reason, entry = _toeplitz_eval_window(label, win, cert)
        if reason is not None:
            return ParseVerdict(False, (), reason, "toeplitz", radius, label)
        if entry is not None and not label.startswith("block"):
            entries.append(entry)
    return ParseVerdict(True, tuple(entries), None, "toeplitz", radius)


def _test_windows(source: LanguageSource, radius: int):
    yield from source.sample_windows(radius)
    blocks = source.blocks(2 * radius)
    if blocks:
        for i, b in enumerate(sorted(blocks)):
            yield f"block[{i}]:{b.text}", Window(b, len(b) // 2)


# -- Morse verification ---------------------------------------------------

_DEPTH_NONE = 0
_DEPTH_MEMBER = 1
_DEPTH_OVERLAP = 2
_DEPTH_GAP = 3

_DEPTH_REASON = {
    _DEPTH_NONE: NO_PHASE,
    _DEPTH_MEMBER: TOKEN_PATTERN,
    _DEPTH_OVERLAP: TOKEN_PATTERN,
    _DEPTH_GAP: GAP_RULE,
}


def _morse_conditions(
    cert: MorseCertificate,
    j: int,
    t0: int,
    tiles: list[bytes],
    parity: int,
    span: int,
    label: str,
) -> tuple[int, PhaseParse | None]:
    """Evaluate the parity and gap conditions on one raw parse.

    Trims the run so it starts and ends on a carrier position, so every
    gap has both neighbors.  Returns the depth the check reached and, when
    everything holds, the phase entry with identity tokens."""
    c0b, c1b = cert.c0.letters, cert.c1.letters
    abs0 = (t0 - j) // span
    i0 = 0 if abs0 % 2 == parity else 1
    i1 = len(tiles) - 1
    if (abs0 + i1) % 2 != parity:
        i1 -= 1
    if i1 - i0 + 1 < 3:
        return _DEPTH_NONE, None
    run = tiles[i0 : i1 + 1]
    start = t0 + i0 * span
    carriers = run[0::2]
    letters = []
    for t in carriers:
        if t == c0b:
            letters.append(0)
        elif t == c1b:
            letters.append(1)
        else:
            return _DEPTH_MEMBER, None
    if find_overlap(Word(BINARY, bytes(letters))) is not None:
        return _DEPTH_OVERLAP, None
    identities = bytearray(len(run))
    for i, letter in enumerate(letters):
        identities[2 * i] = letter
    for i in range(len(letters) - 1):
        left, right = letters[i], letters[i + 1]
        identity, attr = _GAP_TABLE[(left, right)]
        expected: Word = getattr(cert, attr)
        if run[2 * i + 1] != expected.letters:
            return _DEPTH_GAP, None
        identities[2 * i + 1] = identity
    entry = PhaseParse(
        j, start, Word(MORSE_TOKENS, bytes(identities)), parity=parity, window=label
    )
    return _DEPTH_GAP + 1, entry


def _morse_eval_window(
    label: str, win: Window, cert: MorseCertificate
) -> tuple[str | None, PhaseParse | None]:
    span = cert.span
    block_set = {cert.c0.letters, cert.c1.letters, cert.c0p.letters, cert.c1p.letters}
    depth = _DEPTH_NONE
    eligible: list[PhaseParse] = []
    for j, t0, tiles in _tile_runs(win, span):
        if any(t not in block_set for t in tiles):
            continue
        for parity in (0, 1):
            d, entry = _morse_conditions(cert, j, t0, tiles, parity, span, label)
            depth = max(depth, d)
            if entry is not None:
                eligible.append(entry)
    if not eligible:
        return _DEPTH_REASON[min(depth, _DEPTH_GAP)], None
    long_entries = [e for e in eligible if len(e.tokens) >= 4]
    if len(long_entries) > 1:
        return MULTIPLE_PHASES, None
    return None, long_entries[0] if long_entries else eligible[0]


def verify_morse_certificate(
    lang, cert: MorseCertificate, radius: int | None = None
) -> ParseVerdict:
    """Check a Morse certificate: unique phase, carrier parity with no
    overlap among C0/C1 tokens, and the nearest-neighbor gap rule."""
    source = as_source(lang)
    span = cert.span
    if radius is None:
        radius = 32 * span
    if radius < 3 * span:
        raise RangeError(f"radius {radius} below 3 tiles of {span}")
    if cert.c0 == cert.c1:
        return ParseVerdict(
            False, (), BLOCKS_EQUAL, "morse", radius, "C0 and C1 coincide"
        )
    entries = []
    for label, win in _test_windows(source, radius):
        reason, entry = _morse_eval_window(label, win, cert)
        if reason is not None:
            return ParseVerdict(False, (), reason, "morse", radius, label)
        if entry is not None and not label.startswith("block"):
            entries.append(entry)
    return ParseVerdict(True, tuple(entries), None, "morse", radius)


def morse_identity_pairs(verdict: ParseVerdict) -> frozenset[tuple[int, int]]:
    """All ordered adjacent identity pairs across the verdict's parses."""
    pairs = set()
    for entry in verdict.phases:
        toks = entry.tokens.letters
        pairs.update(zip(toks, toks[1:]))
    return frozenset(pairs)


# -- recoding -------------------------------------------------------------


def _power_images(sub: Substitution, k: int) -> list[Word]:
    if k == 0:
        return [Word(sub.alphabet, bytes([a])) for a in range(sub.alphabet.size)]
    return list(sub.power(k).images)


def _recode(
    verdict: ParseVerdict,
    index: int,
    k: int,
    target: Substitution,
    letter_of_token,
) -> Window:
    if not verdict.accepted:
        raise StateError("recode needs tokens from an accepted verdict")
    try:
        entry = verdict.phases[index]
    except IndexError:
        raise RangeError(f"verdict has no phase entry {index}") from None
    images = _power_images(target, k)
    out = b"".join(images[letter_of_token(t)].letters for t in entry.tokens.letters)
    origin = min(max(-entry.start, 0), len(out))
    window = Window(Word(target.alphabet, out), origin)
    depth = (1 << k) + 2
    good = target.language(depth)
    for piece in window.word.factors(min(depth, len(out))):
        if piece not in good and len(piece) == depth:
            raise ConsistencyError(
                f"recoded block {piece.text!r} is not a {target.spec()} factor"
            )
    return window


def recode_toeplitz(
    cert: ToeplitzCertificate, verdict: ParseVerdict, index: int = 0
) -> Window:
    """Recode an accepted token parse: C0 -> tau**k(0), C1 -> tau**k(1)."""
    if verdict.kind != "toeplitz":
        raise DomainError("expected a toeplitz verdict")
    return _recode(verdict, index, cert.k, TOEPLITZ, lambda t: t)


def recode_morse(
    cert: MorseCertificate, verdict: ParseVerdict, index: int = 0
) -> Window:
    """Recode an accepted Morse parse by identity: C0, C0' -> mu**k(0) and
    C1, C1' -> mu**k(1); gap identities come from the neighbor table."""
    if verdict.kind != "morse":
        raise DomainError("expected a morse verdict")
    return _recode(verdict, index, cert.k, MORSE, lambda t: t & 1)


# -- searches -------------------------------------------------------------


def search_toeplitz_certificate(
    lang, kmax: int, max_span: int = 1 << 16
) -> ToeplitzCertificate | None:
    """Least certificate in (k, C0, C1) lexicographic order, or None."""
    if kmax < 0:
        raise RangeError("kmax must be >= 0")
    source = as_source(lang)
    for k in range(kmax + 1):
        span = 1 << k
        if span > max_span:
            raise CapacityError(f"2**{k} exceeds block cap {max_span}")
        radius = 32 * span
        blocks = sorted(source.blocks(span) or ())
        ref = source.sample_windows(radius)
        ref_window = ref[0][1] if ref else None
        for c0, c1 in product(blocks, repeat=2):
            if c0 == c1:
                continue
            cert = ToeplitzCertificate(k, c0, c1)
            if ref_window is not None:
                reason, _ = _toeplitz_eval_window("ref", ref_window, cert)
                if reason is not None:
                    continue
            verdict = verify_toeplitz_certificate(source, cert, radius)
            if verdict.accepted:
                return cert
    return None


def search_morse_certificate(
    lang, kmax: int, max_span: int = 1 << 16
) -> MorseCertificate | None:
    """Least certificate in (k, C0, C1, C0', C1') lexicographic order."""
    if kmax < 0:
        raise RangeError("kmax must be >= 0")
    source = as_source(lang)
    for k in range(kmax + 1):
        span = 1 << k
        if span > max_span:
            raise CapacityError(f"2**{k} exceeds block cap {max_span}")
        radius = 32 * span
        blocks = sorted(source.blocks(span) or ())
        ref = source.sample_windows(radius)
        ref_window = ref[0][1] if ref else None
        for c0, c1, c0p, c1p in product(blocks, repeat=4):
            if c0 == c1:
                continue
            cert = MorseCertificate(k, c0, c1, c0p, c1p)
            if ref_window is not None:
                reason, _ = _morse_eval_window("ref", ref_window, cert)
                if reason is not None:
                    continue
            verdict = verify_morse_certificate(source, cert, radius)
            if verdict.accepted:
                return cert
    return None


# -- necessary conditions -------------------------------------------------


@dataclass(frozen=True)
class NecessaryReport:
    """Cheap necessary conditions for conjugacy with Toeplitz or Morse."""

    kind: str
    injective: bool
    primitive: bool
    length: int
    length_power_of_two: bool
    alphabet_size: int
    alphabet_bound: int

    @property
    def alphabet_bound_ok(self) -> bool:
        return self.alphabet_size <= self.alphabet_bound

    @property
    def all_pass(self) -> bool:
        return (
            self.injective
            and self.primitive
            and self.length_power_of_two
            and self.alphabet_bound_ok
        )


def necessary_conditions(kind: str, sub: Substitution) -> NecessaryReport:
    if kind not in ("toeplitz", "morse"):
        raise DomainError(f"unknown certificate kind {kind!r}")
    r = sub.length
    return NecessaryReport(
        kind=kind,
        injective=sub.is_injective(),
        primitive=build_graph(sub).is_primitive(),
        length=r,
        length_power_of_two=r & (r - 1) == 0,
        alphabet_size=sub.alphabet.size,
        alphabet_bound=3 if kind == "toeplitz" else 6,
    )


# -- induced substitutions ------------------------------------------------


@dataclass(frozen=True)
class DerivedSubstitution:
    """Induced substitution on higher-block letters; ``blocks[a]`` is the
    source-language block that the derived letter a stands for."""

    substitution: Substitution
    blocks: tuple[Word, ...]
    primitive: bool


def derive_substitution(lang, rule: LocalRule, r: int) -> DerivedSubstitution:
    """Build the substitution induced by a conjugacy onto an r-fold image.

    The rule must have no memory and emit r-blocks: one window of
    anticipation m yields the r output letters of one tile.  Sliding it
    over an (m*r + 1)-block produces the (m*r + r)-block whose r
    overlapping (m*r + 1)-blocks are the images of the derived letter.
    """
    source = as_source(lang)
    if r < 2:
        raise RangeError("r must be >= 2")
    if rule.memory != 0:
        raise DomainError("the rule must have no memory")
    if rule.out_len != r:
        raise DomainError(f"the rule must emit r-blocks, emits {rule.out_len}")
    if rule.input_alphabet != source.alphabet or rule.output_alphabet != source.alphabet:
        raise DomainError("rule alphabets must match the language source")
    m = rule.anticipation
    span = m * r + 1
    lang_blocks = source.blocks(span)
    if lang_blocks is None:
        raise DomainError(f"language source provides no blocks of length {span}")
    blocks = sorted(lang_blocks)
    if len(blocks) > len(_TOKEN_SYMBOLS):
        raise CapacityError("too many block letters to name")
    if all(len(b) == 1 for b in blocks):
        symbols = tuple(b.text for b in blocks)
    else:
        symbols = tuple(_TOKEN_SYMBOLS[: len(blocks)])
    alphabet = Alphabet(symbols)
    index = {b.letters: i for i, b in enumerate(blocks)}
    width = m + 1
    images = []
    for b in blocks:
        data = b.letters
        image = b"".join(rule.lookup(data[t : t + width]) for t in range(m + 1))
        letters = bytearray()
        for t in range(r):
            piece = image[t : t + span]
            li = index.get(piece)
            if li is None:
                raise ConsistencyError(
                    f"rule image block {Word(source.alphabet, piece).text!r} "
                    "is not in the language"
                )
            letters.append(li)
        images.append(Word(alphabet, bytes(letters)))
    derived = Substitution(alphabet, tuple(images))
    return DerivedSubstitution(
        derived, tuple(blocks), build_graph(derived).is_primitive()
    )


# -- self-similarity ------------------------------------------------------


@dataclass(frozen=True)
class SelfSimilarityReport:
    """Evidence that a substitution maps its own language properly inside
    itself: image blocks versus all blocks, and phase-uniqueness of
    desubstitution on sample windows."""

    n: int
    image_count: int
    block_count: int
    contained: bool
    proper: bool
    unique_phase: bool


def self_similarity_witness(
    sub: Substitution, n: int, radius: int | None = None
) -> SelfSimilarityReport:
    if not sub.is_injective():
        raise PreconditionError("self-similarity witness needs an injective substitution")
    r = sub.length
    lang_n = sub.language(n)
    images = {sub.apply(w) for w in lang_n}
    lang_rn = sub.language(r * n)
    contained = images <= lang_rn
    if radius is None:
        radius = max(16, 4 * r)
    unique = True
    for seed in system_seeds(sub):
        phases = sub.desubstitute(1, sub.periodic_window(seed, radius))
        if len(phases) != 1:
            unique = False
    return SelfSimilarityReport(
        n=n,
        image_count=len(images),
        block_count=len(lang_rn),
        contained=contained,
        proper=contained and len(images) < len(lang_rn),
        unique_phase=unique,
    )
