"""Binary words and the single-error maps that act on them.

A word is a plain Python string over the characters '0' and '1', most
significant position first; the empty string is the empty word.  Positions
are 1-based throughout the package.  Every function returns a new string,
so words behave as immutable values and can be shared freely across
threads.
"""

from __future__ import annotations

from enum import Enum

Word = str

_FLIP = str.maketrans("01", "10")


class PartialMapError(ValueError):
    """A balanced-adjacent map was applied where its two symbols are equal."""


def parse_word(text: str) -> Word:
    """Check that text contains only '0' and '1' and return it.

    The empty string is accepted and denotes the empty word.
    """
    if any(c not in "01" for c in text):
        raise ValueError(f"not a binary word: {text!r}")
    return text


def delete(x: Word, i: int) -> Word:
    """Remove the i-th symbol."""
    if not 1 <= i <= len(x):
        raise IndexError(f"delete: position {i} out of range [1, {len(x)}]")
    return x[: i - 1] + x[i:]


def insert(x: Word, i: int, b: Word) -> Word:
    """Insert the non-empty word b so that it starts at position i.

    i may be len(x) + 1, which appends b at the end.
    """
    if not b:
        raise ValueError("insert: inserted word must be non-empty")
    if not 1 <= i <= len(x) + 1:
        raise IndexError(f"insert: position {i} out of range [1, {len(x) + 1}]")
    return x[: i - 1] + b + x[i - 1 :]


def flip(x: Word, i: int) -> Word:
    """Complement the i-th symbol (a single substitution, a.k.a. reversal)."""
    if not 1 <= i <= len(x):
        raise IndexError(f"flip: position {i} out of range [1, {len(x)}]")
    return x[: i - 1] + ("1" if x[i - 1] == "0" else "0") + x[i:]


def bad(x: Word, i: int) -> Word:
    """Balanced adjacent deletion: drop symbols i and i+1, which must differ."""
    if not 1 <= i <= len(x) - 1:
        raise IndexError(f"bad: position {i} out of range [1, {len(x) - 1}]")
    if x[i - 1] == x[i]:
        raise PartialMapError(f"bad: symbols {i} and {i + 1} are equal")
    return x[: i - 1] + x[i + 1 :]


def bar(x: Word, i: int) -> Word:
    """Balanced adjacent reversal: complement symbols i and i+1, which must
    differ (so the pair 01/10 is swapped in place)."""
    if not 1 <= i <= len(x) - 1:
        raise IndexError(f"bar: position {i} out of range [1, {len(x) - 1}]")
    if x[i - 1] == x[i]:
        raise PartialMapError(f"bar: symbols {i} and {i + 1} are equal")
    return x[: i - 1] + x[i] + x[i - 1] + x[i + 1 :]


def flip_even(y: Word) -> Word:
    """Complement the symbols at even positions, leaving odd positions alone."""
    if len(y) < 2:
        return y
    out = list(y)
    out[1::2] = y[1::2].translate(_FLIP)
    return "".join(out)


def subrange(y: Word, i: int, j: int) -> Word:
    """The subword from position i through j inclusive (empty when i > j)."""
    if i < 1 or j > len(y):
        raise IndexError(f"subrange: [{i}, {j}] not within [1, {len(y)}]")
    return y[i - 1 : j]


class ErrorClass(Enum):
    """The four single-error channels handled by the decoders."""

    DELETION = "Del"
    REVERSAL = "Rev"
    BAD = "BAD"
    BAR = "BAR"

    def __str__(self) -> str:
        return self.value

    @classmethod
    def parse(cls, name: str) -> "ErrorClass":
        for member in cls:
            if name.lower() in (member.value.lower(), member.name.lower()):
                return member
        raise ValueError(f"unknown error class: {name!r}")


def error_positions(x: Word, error_class: ErrorClass) -> list[int]:
    """All 1-based positions where the error map is defined on x.

    Deletions and substitutions act anywhere; the balanced adjacent maps act
    only where two neighbouring symbols differ.
    """
    if error_class in (ErrorClass.DELETION, ErrorClass.REVERSAL):
        return list(range(1, len(x) + 1))
    return [i for i in range(1, len(x)) if x[i - 1] != x[i]]


def apply_error(x: Word, error_class: ErrorClass, i: int) -> Word:
    """Apply one error of the given class at position i."""
    if error_class is ErrorClass.DELETION:
        return delete(x, i)
    if error_class is ErrorClass.REVERSAL:
        return flip(x, i)
    if error_class is ErrorClass.BAD:
        return bad(x, i)
    if error_class is ErrorClass.BAR:
        return bar(x, i)
    raise TypeError(f"not an error class: {error_class!r}")
