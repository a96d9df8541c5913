"""Brute-force ground truth at small block lengths.

Everything here works by full enumeration: codebooks, single-error balls,
disjointness certificates, and an independent ball-intersection decoder.
None of it shares arithmetic with the fast decoders, which is the point;
the two paths cross-check each other in the test suite and in the CLI's
verify command.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator, Union

from . import azinv, monotone, words
from .words import ErrorClass, Word

CodeParams = Union[monotone.MonotoneParams, azinv.AzinvParams]

DEFAULT_LIMIT = 24


class EnumerationLimitError(RuntimeError):
    """Block length too large to enumerate exhaustively."""


def is_codeword(x: Word, params: CodeParams) -> bool:
    """Membership dispatch over both code families."""
    if isinstance(params, monotone.MonotoneParams):
        return monotone.is_codeword(x, params)
    if isinstance(params, azinv.AzinvParams):
        return azinv.is_codeword(x, params)
    raise TypeError(f"not code parameters: {params!r}")


def fast_decode(y: Word, params: CodeParams):
    """Fast-decoder dispatch over both code families."""
    if isinstance(params, monotone.MonotoneParams):
        return monotone.decode(y, params)
    if isinstance(params, azinv.AzinvParams):
        return azinv.decode(y, params)
    raise TypeError(f"not code parameters: {params!r}")


def all_words(n: int) -> Iterator[Word]:
    """All binary words of length n, in lexicographic order."""
    for bits in product("01", repeat=n):
        yield "".join(bits)


@dataclass(frozen=True)
class Codebook:
    """A fully enumerated code: its parameters and the sorted codewords."""

    params: CodeParams
    words: tuple[Word, ...]


@dataclass(frozen=True)
class BallReport:
    """Result of an error-ball disjointness check over one codebook.

    When two codewords share a corrupted image, witness carries the pair
    (in codebook order) and image the shared word.
    """

    error_class: ErrorClass
    disjoint: bool
    witness: tuple[Word, Word] | None = None
    image: Word | None = None


@dataclass(frozen=True)
class OracleDecision:
    """All codewords that could have produced a received word."""

    candidates: tuple[Word, ...]

    @property
    def unique(self) -> bool:
        return len(self.candidates) == 1

    @property
    def ambiguous(self) -> bool:
        return len(self.candidates) >= 2

    @property
    def no_preimage(self) -> bool:
        return not self.candidates

    @property
    def word(self) -> Word | None:
        return self.candidates[0] if self.unique else None


def enumerate_codebook(params: CodeParams, limit: int = DEFAULT_LIMIT) -> Codebook:
    """Scan all of {0,1}^n for members; guarded so a runaway n fails fast."""
    if params.n > limit:
        raise EnumerationLimitError(
            f"n={params.n} exceeds the enumeration limit {limit}"
        )
    members = tuple(w for w in all_words(params.n) if is_codeword(w, params))
    return Codebook(params=params, words=members)


def error_ball(x: Word, error_class: ErrorClass) -> frozenset[Word]:
    """Every word reachable from x by one error of the given class."""
    return frozenset(
        words.apply_error(x, error_class, i)
        for i in words.error_positions(x, error_class)
    )


def preimage_index(
    codebook: Codebook, error_class: ErrorClass
) -> dict[Word, tuple[Word, ...]]:
    """Map each corrupted image to the codewords whose ball contains it.

    Owner tuples keep codebook (lexicographic) order, so the result is
    deterministic.
    """
    index: dict[Word, list[Word]] = {}
    for x in codebook.words:
        for image in sorted(error_ball(x, error_class)):
            index.setdefault(image, []).append(x)
    return {image: tuple(owners) for image, owners in index.items()}


def certify_codebook(codebook: Codebook, error_class: ErrorClass) -> BallReport:
    """Disjointness check over an already enumerated codebook."""
    owners_by_image = preimage_index(codebook, error_class)
    for image in sorted(owners_by_image):
        owners = owners_by_image[image]
        if len(owners) > 1:
            return BallReport(
                error_class=error_class,
                disjoint=False,
                witness=(owners[0], owners[1]),
                image=image,
            )
    return BallReport(error_class=error_class, disjoint=True)


def certify(
    params: CodeParams, error_class: ErrorClass, limit: int = DEFAULT_LIMIT
) -> BallReport:
    """Check that distinct codewords never share a corrupted image."""
    return certify_codebook(enumerate_codebook(params, limit), error_class)


@lru_cache(maxsize=32)
def _cached_index(params: CodeParams, error_class: ErrorClass, limit: int):
    codebook = enumerate_codebook(params, limit)
    return codebook, preimage_index(codebook, error_class)


def oracle_decode(
    y: Word, params: CodeParams, error_class: ErrorClass, limit: int = DEFAULT_LIMIT
) -> OracleDecision:
    """Decode by exhaustive ball intersection.

    The candidates are all codewords whose error ball contains y, plus y
    itself when y already is a codeword of full length.  No candidate means
    y is not reachable; two or more mean y is inherently ambiguous under
    this error class.
    """
    codebook, index = _cached_index(params, error_class, limit)
    candidates = set(index.get(y, ()))
    if len(y) == params.n and is_codeword(y, params):
        candidates.add(y)
    return OracleDecision(candidates=tuple(sorted(candidates)))
