"""Sliding block codes given by explicit finite local rules.

A local rule with memory m and anticipation a reads the input letters at
bilateral indices i - m .. i + a to produce the output at index i, so rules
are plain tables from (m + a + 1)-words to outputs and serialize to JSON.
Applying a rule to a window trims m letters on the left and a on the
right; the origin moves so that bilateral indices are preserved.

Table values are words.  Every sliding-code operation in this module needs
letter-valued tables (output length 1); longer values exist so that the
same type and file format can carry the block-to-block rules consumed by
the conjugacy constructions, where one input window emits a whole r-block.

The Oxtoby rule u, v -> u + v + 1 mod 2 (memory 0, anticipation 1) is the
built-in two-to-one code from the Morse onto the Toeplitz minimal set.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from types import MappingProxyType
from typing import Iterable, Mapping

from .errors import CapacityError, DomainError, RangeError
from .words import Alphabet, BINARY, Window, Word

#: Cap on candidate expansions while enumerating preimages.
DEFAULT_PREIMAGE_CAP = 1 << 22

_MAX_WIDTH = 16


@dataclass(frozen=True)
class LocalRule:
    """An explicit finite table from input windows to output words.

    The table must cover exactly the declared domain: all input words of
    the window width when ``domain`` is None, otherwise exactly the words
    in ``domain``.
    """

    input_alphabet: Alphabet
    output_alphabet: Alphabet
    memory: int
    anticipation: int
    table: Mapping[bytes, bytes]
    domain: frozenset[bytes] | None = None

    def __post_init__(self) -> None:
        if self.memory < 0 or self.anticipation < 0:
            raise DomainError("memory and anticipation must be >= 0")
        width = self.width
        if width > _MAX_WIDTH:
            raise CapacityError(f"window width {width} exceeds {_MAX_WIDTH}")
        if not self.table:
            raise DomainError("a rule needs a nonempty table")
        out_lens = set()
        for key, value in self.table.items():
            if len(key) != width:
                raise DomainError(f"table key of length {len(key)}, expected {width}")
            if key and max(key) >= self.input_alphabet.size:
                raise DomainError("table key uses a letter outside the input alphabet")
            if value and max(value) >= self.output_alphabet.size:
                raise DomainError("table value uses a letter outside the output alphabet")
            out_lens.add(len(value))
        if len(out_lens) != 1 or 0 in out_lens:
            raise DomainError("table values must share one positive length")
        if self.domain is None:
            expected = self.input_alphabet.size**width
            if len(self.table) != expected:
                raise DomainError(
                    f"total rule must cover all {expected} windows, has {len(self.table)}"
                )
        else:
            if set(self.table.keys()) != set(self.domain):
                raise DomainError("table keys must cover exactly the declared domain")
        object.__setattr__(self, "table", MappingProxyType(dict(self.table)))

    @property
    def width(self) -> int:
        return self.memory + self.anticipation + 1

    @property
    def out_len(self) -> int:
        return len(next(iter(self.table.values())))

    def lookup(self, window: bytes) -> bytes:
        value = self.table.get(window)
        if value is None:
            word = Word(self.input_alphabet, window)
            raise DomainError(f"rule is undefined on window {word.text!r}")
        return value


def oxtoby_rule() -> LocalRule:
    """u, v -> u + v + 1 mod 2 with memory 0 and anticipation 1."""
    table = {
        bytes((u, v)): bytes([(u + v + 1) % 2]) for u in (0, 1) for v in (0, 1)
    }
    return LocalRule(BINARY, BINARY, 0, 1, table)


def identity_rule(alphabet: Alphabet) -> LocalRule:
    table = {bytes([a]): bytes([a]) for a in range(alphabet.size)}
    return LocalRule(alphabet, alphabet, 0, 0, table)


def projection_rule(
    alphabet: Alphabet, memory: int, anticipation: int, offset: int = 0
) -> LocalRule:
    """Rule that outputs the window letter ``offset`` steps into the window."""
    width = memory + anticipation + 1
    if not 0 <= offset < width:
        raise RangeError(f"offset {offset} outside window of width {width}")
    from itertools import product

    table = {
        bytes(win): bytes([win[offset]])
        for win in product(range(alphabet.size), repeat=width)
    }
    return LocalRule(alphabet, alphabet, memory, anticipation, table)


def _require_letter_valued(rule: LocalRule) -> None:
    if rule.out_len != 1:
        raise DomainError("sliding application needs a letter-valued rule")


def apply_to_word(rule: LocalRule, w: Word) -> Word:
    """Slide the rule along a word; output is m + a letters shorter."""
    _require_letter_valued(rule)
    if w.alphabet != rule.input_alphabet:
        raise DomainError("word is over a different alphabet than the rule input")
    width = rule.width
    if len(w) < width:
        raise RangeError(f"word of length {len(w)} shorter than window width {width}")
    data = w.letters
    out = b"".join(rule.lookup(data[i : i + width]) for i in range(len(data) - width + 1))
    return Word(rule.output_alphabet, out)


def apply_code(rule: LocalRule, win: Window) -> Window:
    """Apply the code to a window, preserving bilateral indices.

    The output letter at bilateral index i is computed from input indices
    i - m .. i + a, so the output origin is the input origin minus the
    memory; it must stay inside the output window.
    """
    word = apply_to_word(rule, win.word)
    origin = win.origin - rule.memory
    if not 0 <= origin <= len(word):
        raise RangeError("origin leaves the window after coding")
    return Window(word, origin)


def preimage_blocks(
    rule: LocalRule, w: Word, cap: int = DEFAULT_PREIMAGE_CAP
) -> set[Word]:
    """All input words of length len(w) + m + a that map onto w.

    Exhaustive depth-first enumeration with early filtering; each letter
    extension counts against ``cap``.
    """
    _require_letter_valued(rule)
    if w.alphabet != rule.output_alphabet:
        raise DomainError("word is over a different alphabet than the rule output")
    width = rule.width
    size = rule.input_alphabet.size
    target = w.letters
    results: set[Word] = set()
    budget = cap

    def extend(prefix: bytes) -> None:
        nonlocal budget
        pos = len(prefix) - width + 1
        if pos == len(target):
            results.add(Word(rule.input_alphabet, prefix))
            return
        for c in range(size):
            budget -= 1
            if budget < 0:
                raise CapacityError(f"preimage enumeration exceeded cap {cap}")
            cand = prefix + bytes([c])
            if pos >= 0:
                window = cand[pos : pos + width]
                value = rule.table.get(window)
                if value is None or value[0] != target[pos]:
                    continue
            extend(cand)

    # grow the leading m + a letters first, then one output letter per step
    def seed(prefix: bytes) -> None:
        nonlocal budget
        if len(prefix) == width - 1:
            extend(prefix)
            return
        for c in range(size):
            budget -= 1
            if budget < 0:
                raise CapacityError(f"preimage enumeration exceeded cap {cap}")
            seed(prefix + bytes([c]))

    if width == 1:
        extend(b"")
    else:
        seed(b"")
    return results


def image_language(rule: LocalRule, lang: Iterable[Word]) -> set[Word]:
    """Image of a set of equal-length words under the sliding code."""
    words = list(lang)
    if not words:
        return set()
    lengths = {len(w) for w in words}
    if len(lengths) != 1:
        raise DomainError("image_language needs words of one common length")
    return {apply_to_word(rule, w) for w in words}


# -- serialization --------------------------------------------------------


def rule_to_json(rule: LocalRule) -> dict:
    payload = {
        "memory": rule.memory,
        "anticipation": rule.anticipation,
        "input": str(rule.input_alphabet),
        "output": str(rule.output_alphabet),
        "table": {
            Word(rule.input_alphabet, k).text: Word(rule.output_alphabet, v).text
            for k, v in sorted(rule.table.items())
        },
    }
    if rule.domain is not None:
        payload["domain"] = sorted(
            Word(rule.input_alphabet, d).text for d in rule.domain
        )
    return payload


def rule_from_json(payload: dict) -> LocalRule:
    try:
        memory = int(payload["memory"])
        anticipation = int(payload["anticipation"])
        input_alphabet = Alphabet.from_names(str(payload["input"]))
        output_alphabet = Alphabet.from_names(str(payload["output"]))
        raw_table = payload["table"]
    except (KeyError, TypeError) as exc:
        raise DomainError(f"malformed rule payload: {exc}") from None
    if not isinstance(raw_table, dict):
        raise DomainError("rule table must be an object")
    table = {
        input_alphabet.word(str(k)).letters: output_alphabet.word(str(v)).letters
        for k, v in raw_table.items()
    }
    domain = None
    if "domain" in payload:
        domain = frozenset(
            input_alphabet.word(str(d)).letters for d in payload["domain"]
        )
    return LocalRule(input_alphabet, output_alphabet, memory, anticipation, table, domain)


def load_rule(source: str | Path) -> LocalRule:
    """Load a rule from a JSON file; the builtin name "oxtoby" is accepted."""
    if str(source) == "oxtoby":
        return oxtoby_rule()
    path = Path(source)
    try:
        payload = json.loads(path.read_text())
    except OSError as exc:
        raise DomainError(f"cannot read rule file {source}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise DomainError(f"rule file {source} is not valid JSON: {exc}") from None
    return rule_from_json(payload)
