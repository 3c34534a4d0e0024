import pytest

from morsetoeplitz import MORSE, TOEPLITZ, oxtoby_rule, parse_substitution


@pytest.fixture(scope="session")
def morse():
    return MORSE


@pytest.fixture(scope="session")
def toeplitz():
    return TOEPLITZ


@pytest.fixture(scope="session")
def three_letter():
    """The injective length-2 substitution on three letters used throughout."""
    return parse_substitution("0->12;1->02;2->10")


@pytest.fixture(scope="session")
def oxtoby():
    return oxtoby_rule()
