"""Inversion-based binary codes and their balanced-adjacent-error decoder.

Codewords are the non-constant length-n words whose de-interleaved
inversion count hits a fixed residue:

    tau(x) = inversions(deinterleave(x))  ==  a  (mod m),

where deinterleave reads the odd positions left to right and then the even
positions right to left, and inversions counts the pairs i < j with
y_i > y_j.  The channel errors handled here touch a pair of adjacent,
unequal symbols: a balanced adjacent deletion (BAD) removes the pair and a
balanced adjacent reversal (BAR) complements it, i.e. swaps 01 and 10 in
place.  Decoding repairs one BAD whenever n <= m and also one BAR whenever
2 (n - 1) <= m.

All of the arithmetic lives in this module; the control flow is the shared
engine in monazinv.unified.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import words
from .unified import DecodeOutcome, DeletionBinding, ReversalBinding, decode_received
from .words import ErrorClass, Word


@dataclass(frozen=True)
class AzinvParams:
    """Parameters (n, m, a) of one azinv code.

    n is the block length (at least 2), m the modulus (at least 2), a the
    target residue (normalized into [0, m)).  The all-zero and all-one
    words are never codewords.
    """

    n: int
    m: int
    a: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError("block length n must be at least 2")
        if self.m < 2:
            raise ValueError("modulus m must be at least 2")
        object.__setattr__(self, "a", self.a % self.m)

    @property
    def bad_capable(self) -> bool:
        """True when one balanced adjacent deletion is always repaired (n <= m)."""
        return self.n <= self.m

    @property
    def bar_capable(self) -> bool:
        """True when one balanced adjacent reversal is also always repaired
        (2 (n - 1) <= m)."""
        return 2 * (self.n - 1) <= self.m

    def corrects(self, error_class: ErrorClass) -> bool:
        if error_class is ErrorClass.BAD:
            return self.bad_capable
        if error_class is ErrorClass.BAR:
            return self.bar_capable
        return False


def deinterleave(y: Word) -> Word:
    """Odd-position symbols in order, then the even-position symbols reversed.

    Satisfies deinterleave(y) = y_1 + deinterleave(y_3 .. y_n) + y_2; the
    slice expression below is that recursion fully unrolled, which keeps it
    safe for very long words.  Words of length at most 2 are fixed.
    """
    return y[::2] + y[1::2][::-1]


def interleave(x: Word) -> Word:
    """Inverse of deinterleave: the first half of x goes to the odd
    positions in order, the rest to the even positions in reverse."""
    h = (len(x) + 1) // 2
    out = list(x)
    out[::2] = x[:h]
    out[1::2] = x[h:][::-1]
    return "".join(out)


def inversion_count_naive(y: Word) -> int:
    """Number of pairs i < j with y_i > y_j, counted pair by pair.

    Quadratic; kept as an independent cross-check for inversion_count and
    never called by the decoders.
    """
    total = 0
    for i in range(len(y)):
        if y[i] == "1":
            total += y[i + 1 :].count("0")
    return total


def inversion_count(y: Word) -> int:
    """Number of pairs i < j with y_i > y_j, in one linear pass.

    Weighting position i (1-based) by n - i + 1 and summing over the ones
    counts every inversion once plus one triangle's worth of (1, 1) pairs,
    so the count is that sum minus C(w + 1, 2) for Hamming weight w.
    """
    n = len(y)
    total = 0
    weight = 0
    for i, c in enumerate(y):
        if c == "1":
            total += n - i
            weight += 1
    return total - weight * (weight + 1) // 2


def deinterleaved_inversions(y: Word) -> int:
    """The residue statistic of the family: inversions of deinterleave(y)."""
    return inversion_count(deinterleave(y))


def is_codeword(x: Word, params: AzinvParams) -> bool:
    """Membership test: right length, not constant, statistic == a (mod m)."""
    n = params.n
    if len(x) != n:
        return False
    ones = x.count("1")
    if ones == 0 or ones == n:
        return False
    return deinterleaved_inversions(x) % params.m == params.a


@lru_cache(maxsize=128)
def bindings(params: AzinvParams) -> tuple[DeletionBinding, ReversalBinding]:
    """Engine function tables realizing this family's decoder.

    The deletion-branch searches run over the received word with its even
    positions complemented (call it t): "largest j in [1, n-1] whose count
    of 1s among t_1 .. t_{j-1} equals r" and "smallest j in [1, n-1] whose
    count of 0s among t_j .. t_{n-2} equals r - w - 1".  Both counts are
    monotone in j, so each scan stops once it overshoots.  The repair
    inserts a 01 or 10 pair whose order depends on the parity of j.
    """
    n, m, a = params.n, params.m, params.a

    def remainder(y: Word) -> int:
        return (a - deinterleaved_inversions(y)) % m

    def weight(y: Word) -> int:
        return words.flip_even(y).count("1")

    def position1(r: int, y: Word) -> int | None:
        t = words.flip_even(y)
        best = None
        acc = 0  # count of 1s among t_1 .. t_{j-1}
        for j in range(1, n):
            if acc == r:
                best = j
            elif acc > r:
                break
            if j <= len(t) and t[j - 1] == "1":
                acc += 1
        return best

    def position2(r: int, w: int, y: Word) -> int | None:
        target = r - w - 1
        if target < 0:
            return None
        t = words.flip_even(y)
        acc = t.count("0")  # count of 0s among t_j .. t_{n-2}, at j = 1
        for j in range(1, n):
            if acc == target:
                return j
            if acc < target:
                return None
            if j <= len(t) and t[j - 1] == "0":
                acc -= 1
        return None

    def membership(x: Word) -> bool:
        return is_codeword(x, params)

    deletion = DeletionBinding(
        code_length=n,
        received_length=n - 2,
        remainder=remainder,
        weight=weight,
        position1=position1,
        position2=position2,
        sequence1=lambda p: "10" if p % 2 == 0 else "01",
        sequence2=lambda p: "01" if p % 2 == 0 else "10",
        inserted=lambda p, b, y: words.insert(y, p, b),
        membership=membership,
    )

    def rev_position(r: int, y: Word) -> int | None:
        p = n - min(r, m - r)
        return p if 1 <= p <= n - 1 else None

    def rev_reversed(p: int, y: Word) -> Word | None:
        if y[p - 1] == y[p]:
            return None  # the swap is undefined on an equal pair
        return words.bar(y, p)

    reversal = ReversalBinding(
        code_length=n,
        remainder=remainder,
        position=rev_position,
        reversed=rev_reversed,
        membership=membership,
    )
    return deletion, reversal


def decode(y: Word, params: AzinvParams) -> DecodeOutcome:
    """Decode a received word against one azinv code.

    Full-length words pass through when intact or get one balanced adjacent
    reversal repaired; words two symbols short get one balanced adjacent
    deletion repaired; every other length is rejected.  Within the
    parameters' capability tier the result of corrupting any codeword
    decodes back to that codeword.
    """
    deletion, reversal = bindings(params)
    return decode_received(y, deletion, reversal)
