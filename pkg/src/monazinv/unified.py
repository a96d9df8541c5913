"""Generic single-error decoding engine and the function tables that drive it.

Both code families in this package (weighted-modular "monotone" codes and
inversion-based "azinv" codes) decode with the same control flow.  The
engine owns that flow: dispatch on the received length, the zero-residue
shortcut, the branch on r <= w, and the final membership gate.  Everything
family specific lives in a small table of functions (a "binding"), one
table for deletion-type repair and one for reversal-type repair.

A decode never raises on strange input; it answers with a DecodeOutcome
that either carries the repaired codeword or names the reason no repair
exists.  The trace records the internal values (residue r, weight w,
repair position p, inserted word b) of the run.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional

from .words import Word


class Branch(Enum):
    """Which path a decode took."""

    PASSTHROUGH = "Passthrough"
    REVERSAL_REPAIR = "ReversalRepair"
    DELETION_REPAIR = "DeletionRepair"
    REJECTED = "Rejected"


class FailureReason(Enum):
    """Why a decode produced no codeword."""

    WRONG_LENGTH = "WrongLength"
    POSITION_NOT_FOUND = "PositionNotFound"
    MEMBERSHIP_CHECK_FAILED = "MembershipCheckFailed"


@dataclass(frozen=True)
class DecodeTrace:
    """Internal values of one decode run.

    residue and weight are absent on rejected (wrong-length) inputs; weight
    and inserted belong to the deletion branch only.
    """

    branch: Branch
    residue: int | None = None
    weight: int | None = None
    position: int | None = None
    inserted: Word | None = None


@dataclass(frozen=True)
class DecodeOutcome:
    """Either a decoded codeword or a failure marker, plus the trace."""

    word: Word | None
    failure: FailureReason | None
    trace: DecodeTrace

    @property
    def ok(self) -> bool:
        return self.failure is None

    @classmethod
    def success(cls, word: Word, trace: DecodeTrace) -> "DecodeOutcome":
        return cls(word=word, failure=None, trace=trace)

    @classmethod
    def failed(cls, reason: FailureReason, trace: DecodeTrace) -> "DecodeOutcome":
        return cls(word=None, failure=reason, trace=trace)


@dataclass(frozen=True)
class DeletionBinding:
    """Function table driving the deletion-repair flowchart for one code.

    received_length is the only length the flowchart accepts (one or two
    symbols short of code_length, depending on the family).  position1 and
    sequence1 serve the r <= w branch, position2 and sequence2 the other;
    inserted(p, b, y) builds the repair candidate and membership gates it.
    """

    code_length: int
    received_length: int
    remainder: Callable[[Word], int]
    weight: Callable[[Word], int]
    position1: Callable[[int, Word], Optional[int]]
    position2: Callable[[int, int, Word], Optional[int]]
    sequence1: Callable[[int], Word]
    sequence2: Callable[[int], Word]
    inserted: Callable[[int, Word, Word], Word]
    membership: Callable[[Word], bool]


@dataclass(frozen=True)
class ReversalBinding:
    """Function table driving the reversal-repair flowchart for one code.

    position may decline (None) when the residue points nowhere; reversed
    may decline when the repair map is undefined at p.
    """

    code_length: int
    remainder: Callable[[Word], int]
    position: Callable[[int, Word], Optional[int]]
    reversed: Callable[[int, Word], Optional[Word]]
    membership: Callable[[Word], bool]


def run_deletion_flowchart(y: Word, binding: DeletionBinding) -> DecodeOutcome:
    """Repair a received word that is short by one deletion-type error."""
    if len(y) != binding.received_length:
        return DecodeOutcome.failed(
            FailureReason.WRONG_LENGTH, DecodeTrace(Branch.REJECTED)
        )
    r = binding.remainder(y)
    w = binding.weight(y)
    if r <= w:
        p = binding.position1(r, y)
        b = binding.sequence1(p) if p is not None else None
    else:
        p = binding.position2(r, w, y)
        b = binding.sequence2(p) if p is not None else None
    trace = DecodeTrace(
        Branch.DELETION_REPAIR, residue=r, weight=w, position=p, inserted=b
    )
    if p is None:
        return DecodeOutcome.failed(FailureReason.POSITION_NOT_FOUND, trace)
    candidate = binding.inserted(p, b, y)
    if not binding.membership(candidate):
        return DecodeOutcome.failed(FailureReason.MEMBERSHIP_CHECK_FAILED, trace)
    return DecodeOutcome.success(candidate, trace)


def run_reversal_flowchart(y: Word, binding: ReversalBinding) -> DecodeOutcome:
    """Repair a received word of full length (zero or one reversal-type error)."""
    if len(y) != binding.code_length:
        return DecodeOutcome.failed(
            FailureReason.WRONG_LENGTH, DecodeTrace(Branch.REJECTED)
        )
    r = binding.remainder(y)
    if r == 0:
        trace = DecodeTrace(Branch.PASSTHROUGH, residue=0)
        # The residue alone does not prove membership for every family (some
        # exclude a handful of words outright), so gate the passthrough too.
        if not binding.membership(y):
            return DecodeOutcome.failed(FailureReason.MEMBERSHIP_CHECK_FAILED, trace)
        return DecodeOutcome.success(y, trace)
    p = binding.position(r, y)
    trace = DecodeTrace(Branch.REVERSAL_REPAIR, residue=r, position=p)
    if p is None:
        return DecodeOutcome.failed(FailureReason.POSITION_NOT_FOUND, trace)
    candidate = binding.reversed(p, y)
    if candidate is None:
        return DecodeOutcome.failed(FailureReason.POSITION_NOT_FOUND, trace)
    if not binding.membership(candidate):
        return DecodeOutcome.failed(FailureReason.MEMBERSHIP_CHECK_FAILED, trace)
    return DecodeOutcome.success(candidate, trace)


def decode_received(
    y: Word, deletion: DeletionBinding, reversal: ReversalBinding
) -> DecodeOutcome:
    """Full decode of an arbitrary received word.

    Dispatch on length: full-length words go through the reversal flowchart,
    short ones through the deletion flowchart, anything else is rejected.
    """
    if len(y) == reversal.code_length:
        return run_reversal_flowchart(y, reversal)
    if len(y) == deletion.received_length:
        return run_deletion_flowchart(y, deletion)
    return DecodeOutcome.failed(FailureReason.WRONG_LENGTH, DecodeTrace(Branch.REJECTED))


def monotone_binding(params) -> tuple[DeletionBinding, ReversalBinding]:
    """Function tables for a weighted-modular (monotone) code."""
    from .monotone import bindings  # local import, the family modules build on this one

    return bindings(params)


def azinv_binding(params) -> tuple[DeletionBinding, ReversalBinding]:
    """Function tables for an inversion-based (azinv) code."""
    from .azinv import bindings  # local import, the family modules build on this one

    return bindings(params)
