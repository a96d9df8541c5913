import pytest

from monazinv import monotone, oracle, unified, words
from monazinv.monotone import MonotoneParams, levenshtein_params
from monazinv.unified import Branch, FailureReason

from helpers import all_words, monotone_k_families, triangular_k, unit_k


def test_params_validation():
    p = MonotoneParams(n=3, m=7, a=9, k=(1, 2, 5))
    assert p.a == 2  # residue is normalized
    with pytest.raises(ValueError):
        MonotoneParams(n=0, m=7, a=0, k=())
    with pytest.raises(ValueError):
        MonotoneParams(n=3, m=1, a=0, k=(1, 2, 3))
    with pytest.raises(ValueError):
        MonotoneParams(n=3, m=7, a=0, k=(1, 2))
    with pytest.raises(ValueError):
        MonotoneParams(n=3, m=7, a=0, k=(0, 1, 2))
    with pytest.raises(ValueError):
        MonotoneParams(n=3, m=7, a=0, k=(1, 3, 3))
    with pytest.raises(ValueError):
        MonotoneParams(n=3, m=7, a=0, k=(1, 3, 2))


def test_tier_flags():
    deletion_only = MonotoneParams(n=3, m=4, a=0, k=(1, 2, 3))
    assert deletion_only.deletion_capable
    assert not deletion_only.reversal_capable
    assert deletion_only.corrects(words.ErrorClass.DELETION)
    assert not deletion_only.corrects(words.ErrorClass.REVERSAL)
    both = MonotoneParams(n=3, m=6, a=0, k=(1, 2, 3))
    assert both.deletion_capable and both.reversal_capable
    neither = MonotoneParams(n=3, m=3, a=0, k=(1, 2, 3))
    assert not neither.deletion_capable


def test_levenshtein_params():
    p = levenshtein_params(n=5, m=6, a=2)
    assert p.k == (1, 2, 3, 4, 5)
    assert p.n == 5 and p.m == 6 and p.a == 2


def test_weighted_sum():
    assert monotone.weighted_sum("", ()) == 0
    assert monotone.weighted_sum("101", (1, 3, 6)) == 7
    assert monotone.weighted_sum("111", (1, 3, 6)) == 10
    # k may be longer than the word (the received word is short by one)
    assert monotone.weighted_sum("10", (1, 3, 6)) == 1
    with pytest.raises(ValueError):
        monotone.weighted_sum("101", (1, 3))


def test_gap_weight():
    # gaps of (1,3,6,8) are (2,3,2); ones of 101 sit under gaps 1 and 3
    assert monotone.gap_weight("101", (1, 3, 6, 8)) == 4
    assert monotone.gap_weight("000", (1, 3, 6, 8)) == 0
    assert monotone.gap_weight("111", (1, 2, 3, 4)) == 3
    with pytest.raises(ValueError):
        monotone.gap_weight("101", (1, 3, 6))


def test_side_sum_examples():
    k = (1, 3, 6, 8)
    y = "101"
    # L sums run over received positions below i, R sums from i upward
    assert monotone.side_sum("L1", 1, y, k) == 0
    assert monotone.side_sum("L1", 2, y, k) == 2
    assert monotone.side_sum("L1", 4, y, k) == 4
    assert monotone.side_sum("L0", 3, y, k) == 3
    assert monotone.side_sum("R1", 1, y, k) == 4
    assert monotone.side_sum("R1", 3, y, k) == 2
    assert monotone.side_sum("R1", 4, y, k) == 0
    assert monotone.side_sum("R0", 2, y, k) == 3
    with pytest.raises(ValueError):
        monotone.side_sum("X1", 1, y, k)
    with pytest.raises(IndexError):
        monotone.side_sum("L1", 0, y, k)
    with pytest.raises(IndexError):
        monotone.side_sum("L1", 5, y, k)


@pytest.mark.parametrize("n", range(2, 7))
def test_side_sum_identities(n):
    """Telescoping and weight-splitting identities, exhaustively for small n."""
    for k in monotone_k_families(n):
        for y in all_words(n - 1):
            w = monotone.gap_weight(y, k)
            for i in range(1, n + 1):
                l0 = monotone.side_sum("L0", i, y, k)
                l1 = monotone.side_sum("L1", i, y, k)
                r1 = monotone.side_sum("R1", i, y, k)
                assert k[i - 1] == k[0] + l0 + l1
                assert w == l1 + r1
                assert 0 <= r1 <= w
                assert k[0] + w + l0 == k[i - 1] + r1
                assert k[0] + w + l0 <= k[-1]


@pytest.mark.parametrize("n", range(2, 7))
def test_position_scans_match_brute_force(n):
    """The two linear scans find exactly the max/min side-sum matches."""
    for k in (unit_k(n), triangular_k(n)):
        params = MonotoneParams(n=n, m=2 * k[-1], a=0, k=k)
        deletion, _ = unified.monotone_binding(params)
        for y in all_words(n - 1):
            w = monotone.gap_weight(y, k)
            for r in range(0, k[-1] + 2):
                matches1 = [
                    j for j in range(1, n + 1) if monotone.side_sum("R1", j, y, k) == r
                ]
                assert deletion.position1(r, y) == (max(matches1) if matches1 else None)
                target = r - w - k[0]
                matches2 = [
                    j
                    for j in range(1, n + 1)
                    if monotone.side_sum("L0", j, y, k) == target
                ]
                expected = min(matches2) if target >= 0 and matches2 else None
                assert deletion.position2(r, w, y) == expected


def test_is_codeword():
    p = MonotoneParams(n=4, m=9, a=0, k=(1, 3, 6, 8))
    assert monotone.is_codeword("1001", p)
    assert monotone.is_codeword("0000", p)
    assert not monotone.is_codeword("1000", p)
    assert not monotone.is_codeword("100", p)
    assert not monotone.is_codeword("10011", p)


def test_decode_golden_deletion_trace():
    p = MonotoneParams(n=4, m=9, a=0, k=(1, 3, 6, 8))
    out = monotone.decode("101", p)
    assert out.ok and out.word == "1001"
    assert out.trace.branch is Branch.DELETION_REPAIR
    assert out.trace.residue == 2
    assert out.trace.weight == 4
    assert out.trace.position == 3
    assert out.trace.inserted == "0"


def test_decode_golden_reversal_trace():
    p = MonotoneParams(n=6, m=20, a=0, k=(1, 2, 3, 8, 9, 10))
    out = monotone.decode("111110", p)
    assert out.ok and out.word == "110110"
    assert out.trace.branch is Branch.REVERSAL_REPAIR
    assert out.trace.residue == 17
    assert out.trace.weight is None
    assert out.trace.position == 3
    assert out.trace.inserted is None


def test_decode_passthrough():
    p = MonotoneParams(n=4, m=9, a=0, k=(1, 3, 6, 8))
    out = monotone.decode("1001", p)
    assert out.ok and out.word == "1001"
    assert out.trace.branch is Branch.PASSTHROUGH
    assert out.trace.residue == 0


def test_decode_wrong_length():
    p = MonotoneParams(n=4, m=9, a=0, k=(1, 3, 6, 8))
    for y in ("10", "10011", ""):
        out = monotone.decode(y, p)
        assert not out.ok
        assert out.failure is FailureReason.WRONG_LENGTH
        assert out.trace.branch is Branch.REJECTED


def test_decode_reversal_membership_gate():
    # r=6 points at weight 3 = k_3, but flipping there misses the code
    p = MonotoneParams(n=3, m=9, a=0, k=(1, 2, 3))
    out = monotone.decode("110", p)
    assert not out.ok
    assert out.failure is FailureReason.MEMBERSHIP_CHECK_FAILED
    assert out.trace.position == 3


def test_decode_reversal_position_not_found():
    # residue 3 is not a weight of this code
    p = MonotoneParams(n=3, m=9, a=0, k=(1, 2, 4))
    out = monotone.decode("011", p)
    assert not out.ok
    assert out.failure is FailureReason.POSITION_NOT_FOUND
    assert out.trace.residue == 3
    assert out.trace.position is None


def test_decode_deletion_position_not_found():
    p = MonotoneParams(n=2, m=9, a=5, k=(1, 2))
    out = monotone.decode("0", p)
    assert not out.ok
    assert out.failure is FailureReason.POSITION_NOT_FOUND
    assert out.trace.branch is Branch.DELETION_REPAIR


@pytest.mark.parametrize("n", range(2, 7))
def test_round_trips_small(n):
    """Every deletion and reversal of every codeword comes back, small n."""
    params = levenshtein_params(n=n, m=2 * n, a=1)
    book = oracle.enumerate_codebook(params)
    assert book.words  # the sweep must not be vacuous
    for x in book.words:
        for i in range(1, n + 1):
            out = monotone.decode(words.delete(x, i), params)
            assert out.ok and out.word == x
            out = monotone.decode(words.flip(x, i), params)
            assert out.ok and out.word == x


def test_decode_never_fabricates():
    """On arbitrary short words the decoder answers a codeword or declines."""
    params = MonotoneParams(n=5, m=6, a=3, k=(1, 2, 3, 4, 5))
    for y in all_words(4):
        out = monotone.decode(y, params)
        if out.ok:
            assert monotone.is_codeword(out.word, params)
