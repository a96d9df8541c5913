"""Weighted-modular binary codes and their single deletion/substitution decoder.

For a strictly increasing sequence of positive weights k = (k_1, ..., k_n),
a modulus m and a residue a, the code is the set of length-n words x with

    sum_i k_i x_i  ==  a  (mod m).

These are the monotone codes; with k = (1, ..., n) they are the Levenshtein
single-deletion codes, and additionally m = n + 1 gives the classic
Varshamov-Tenengolts construction.  Decoding repairs one deletion whenever
k_n < m, and also one substitution (reversal) whenever 2 k_n <= m.  The
decoder recognizes intact codewords and answers with an explicit failure on
anything it cannot repair, so it is total over arbitrary received words.

All of the arithmetic lives in this module; the control flow is the shared
engine in monazinv.unified.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from functools import lru_cache
from itertools import islice
from typing import Sequence

from . import words
from .unified import DecodeOutcome, DeletionBinding, ReversalBinding, decode_received
from .words import ErrorClass, Word


@dataclass(frozen=True)
class MonotoneParams:
    """Parameters (n, m, a, k) of one weighted-modular code.

    n is the block length, m the modulus (at least 2), a the target residue
    (normalized into [0, m)), and k the strictly increasing sequence of
    positive integer weights, one per position.  Which single errors the
    code is guaranteed to correct depends on how k_n compares with m; the
    capability properties surface that, and decode runs either way.
    """

    n: int
    m: int
    a: int
    k: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("block length n must be at least 1")
        if self.m < 2:
            raise ValueError("modulus m must be at least 2")
        k = tuple(int(v) for v in self.k)
        if len(k) != self.n:
            raise ValueError(f"need exactly n={self.n} weights, got {len(k)}")
        if k[0] < 1:
            raise ValueError("weights must be positive")
        if any(hi <= lo for lo, hi in zip(k, k[1:])):
            raise ValueError("weights must be strictly increasing")
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "a", self.a % self.m)

    @property
    def deletion_capable(self) -> bool:
        """True when one deletion is always repaired (k_n < m)."""
        return self.k[-1] < self.m

    @property
    def reversal_capable(self) -> bool:
        """True when one substitution is also always repaired (2 k_n <= m)."""
        return 2 * self.k[-1] <= self.m

    def corrects(self, error_class: ErrorClass) -> bool:
        if error_class is ErrorClass.DELETION:
            return self.deletion_capable
        if error_class is ErrorClass.REVERSAL:
            return self.reversal_capable
        return False


def levenshtein_params(n: int, m: int, a: int) -> MonotoneParams:
    """The k = (1, ..., n) member of the family."""
    return MonotoneParams(n=n, m=m, a=a, k=tuple(range(1, n + 1)))


def weighted_sum(x: Word, k: Sequence[int]) -> int:
    """Sum of the weights at the positions holding a 1 (needs |k| >= |x|)."""
    if len(k) < len(x):
        raise ValueError("weight sequence shorter than the word")
    return sum(ki for ki, c in zip(k, x) if c == "1")


def gap_weight(y: Word, k: Sequence[int]) -> int:
    """Weight of y under consecutive weight gaps: sum of y_j (k_{j+1} - k_j).

    Requires |k| = |y| + 1.  Equals the Hamming weight when the k_i are
    consecutive integers.
    """
    if len(k) != len(y) + 1:
        raise ValueError("need exactly |y| + 1 weights")
    return sum(hi - lo for lo, hi, c in zip(k, islice(k, 1, None), y) if c == "1")


_SIDE_KINDS = ("L0", "L1", "R0", "R1")


def side_sum(kind: str, i: int, y: Word, k: Sequence[int]) -> int:
    """Gap-weighted count of 0s or 1s on one side of position i.

    "L0"/"L1" count the 0s/1s strictly left of i, "R0"/"R1" count them from
    i rightward.  Positions run over [1, |k|] with |k| = |y| + 1; the left
    sums are 0 at i = 1 and the right sums are 0 at i = |k|.  Each symbol
    y_j is weighted by the gap k_{j+1} - k_j.
    """
    n = len(k)
    if len(y) + 1 != n:
        raise ValueError("need exactly |y| + 1 weights")
    if kind not in _SIDE_KINDS:
        raise ValueError(f"kind must be one of {_SIDE_KINDS}")
    if not 1 <= i <= n:
        raise IndexError(f"position {i} out of range [1, {n}]")
    bit = kind[1]
    rng = range(0, i - 1) if kind[0] == "L" else range(i - 1, n - 1)
    return sum(k[j + 1] - k[j] for j in rng if y[j] == bit)


def is_codeword(x: Word, params: MonotoneParams) -> bool:
    """Membership test: right length and weighted sum congruent to a mod m."""
    return (
        len(x) == params.n
        and weighted_sum(x, params.k) % params.m == params.a
    )


@lru_cache(maxsize=128)
def bindings(params: MonotoneParams) -> tuple[DeletionBinding, ReversalBinding]:
    """Engine function tables realizing this family's decoder.

    The position searches are the single-pass equivalents of "largest j with
    right 1-sum equal to r" and "smallest j with left 0-sum equal to
    r - w - k_1"; both sums are monotone in j, so each scan stops as soon as
    it overshoots.
    """
    n, m, a, k = params.n, params.m, params.a, params.k
    gaps = tuple(k[j + 1] - k[j] for j in range(n - 1))

    def remainder(y: Word) -> int:
        return (a - weighted_sum(y, k)) % m

    def weight(y: Word) -> int:
        return gap_weight(y, k)

    def position1(r: int, y: Word) -> int | None:
        # The right 1-sum is 0 at j = n and grows as j moves left, and its
        # largest preimage of a positive value sits where y_j = 1.
        if r == 0:
            return n
        acc = 0
        for j in range(n - 1, 0, -1):
            if y[j - 1] == "1":
                acc += gaps[j - 1]
                if acc == r:
                    return j
                if acc > r:
                    return None
        return None

    def position2(r: int, w: int, y: Word) -> int | None:
        target = r - w - k[0]
        if target < 0:
            return None
        acc = 0  # left 0-sum at j = 1
        for j in range(1, n + 1):
            if acc == target:
                return j
            if acc > target:
                return None
            if j <= n - 1 and y[j - 1] == "0":
                acc += gaps[j - 1]
        return None

    def membership(x: Word) -> bool:
        return is_codeword(x, params)

    deletion = DeletionBinding(
        code_length=n,
        received_length=n - 1,
        remainder=remainder,
        weight=weight,
        position1=position1,
        position2=position2,
        sequence1=lambda p: "0",
        sequence2=lambda p: "1",
        inserted=lambda p, b, y: words.insert(y, p, b),
        membership=membership,
    )

    def rev_position(r: int, y: Word) -> int | None:
        # min(r, m - r) either is some weight k_j (then j is unique, the
        # weights strictly increase) or no repair position exists.
        target = min(r, m - r)
        j = bisect.bisect_left(k, target)
        if j < n and k[j] == target:
            return j + 1
        return None

    reversal = ReversalBinding(
        code_length=n,
        remainder=remainder,
        position=rev_position,
        reversed=lambda p, y: words.flip(y, p),
        membership=membership,
    )
    return deletion, reversal


def decode(y: Word, params: MonotoneParams) -> DecodeOutcome:
    """Decode a received word against one monotone code.

    Full-length words pass through when intact or get one substitution
    repaired; words one symbol short get one deletion repaired; every other
    length is rejected.  Within the parameters' capability tier the result
    of corrupting any codeword decodes back to that codeword.
    """
    deletion, reversal = bindings(params)
    return decode_received(y, deletion, reversal)
