"""Linear-time decoders for two families of single-error binary codes.

The monotone family fixes a weighted bit-sum modulo m (strictly increasing
positive weights) and corrects one deletion, or one deletion or bit
reversal at the stronger parameter tier.  The azinv family fixes, modulo
m, the inversion number of the received word after deinterleaving, and
corrects one adjacent-transposition-style error: a bit duplication that
absorbs a neighbour (BAD) or a swap of two unequal adjacent bits (BAR).

Both decoders run through one shared flowchart engine; a brute-force
oracle enumerates small codebooks and certifies error-ball disjointness
independently.
"""

from .azinv import AzinvParams
from .monotone import MonotoneParams, levenshtein_params
from .unified import (
    Branch,
    DecodeOutcome,
    DecodeTrace,
    FailureReason,
    decode_received,
)
from .words import ErrorClass, PartialMapError, Word, parse_word

__version__ = "0.1.0"

__all__ = [
    "AzinvParams",
    "Branch",
    "DecodeOutcome",
    "DecodeTrace",
    "ErrorClass",
    "FailureReason",
    "MonotoneParams",
    "PartialMapError",
    "Word",
    "decode",
    "decode_received",
    "levenshtein_params",
    "parse_word",
]


def decode(received: Word, params) -> DecodeOutcome:
    """Decode with whichever family the params belong to."""
    from . import azinv, monotone

    if isinstance(params, MonotoneParams):
        return monotone.decode(received, params)
    if isinstance(params, AzinvParams):
        return azinv.decode(received, params)
    raise TypeError(f"unsupported params type: {type(params).__name__}")
