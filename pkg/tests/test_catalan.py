import itertools
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from compocode.catalan import (
    cb_count,
    cb_rank,
    cb_total,
    cb_unrank,
    is_catalan_bertrand,
    is_member,
    partition_rank,
    partition_unrank,
    sr_decode,
    sr_encode,
    sr_params,
    sr_size,
)


def brute_cb(m):
    """Oracle: enumerate all CB strings of length m."""
    out = []
    for tup in itertools.product("01", repeat=m):
        s = "".join(tup)
        if is_catalan_bertrand(s):
            out.append(s)
    return out


def test_cb_count_small_oracle():
    for m in range(1, 13):
        strings = brute_cb(m)
        by_ones = {}
        for s in strings:
            by_ones[s.count("1")] = by_ones.get(s.count("1"), 0) + 1
        for i in range(m + 2):
            assert cb_count(m, i) == by_ones.get(i, 0), (m, i)
        assert cb_total(m) == len(strings)


def test_cb_count_examples():
    assert cb_count(4, 0) == 1
    assert cb_count(4, 1) == 2
    assert cb_total(4) == 3 == comb(4, 2) // 2
    assert all(cb_count(m, 0) == 1 for m in range(1, 20))
    # Catalan number C_3 = C(6,3)/4 = 5: balanced prefix-dominated strings
    assert comb(6, 3) // 4 == 5


def test_cb_total_closed_forms():
    # the even-length total matches the half-central-binomial form
    for m in range(2, 31, 2):
        assert cb_total(m) == comb(m, m // 2) // 2
    for m in range(1, 31):
        assert cb_total(m) == comb(m - 1, (m - 1) // 2)
        assert cb_total(m) == sum(cb_count(m, i) for i in range(m + 1))


def test_cb_rank_bijection_exhaustive():
    for m in range(1, 13):
        strings = brute_cb(m)
        ranks = sorted(cb_rank(s) for s in strings)
        assert ranks == list(range(len(strings)))
        for s in strings:
            assert cb_unrank(m, cb_rank(s)) == s


def test_cb_rank_block_structure():
    # m=4: image is {0,1,2}; 0000 is the i=0 block, 0001/0010 fill i=1
    assert cb_rank("0000") == 0
    assert {cb_rank("0001"), cb_rank("0010")} == {1, 2}
    for m in range(1, 16):
        assert cb_rank("0" * m) == 0


def test_cb_rank_rejects_non_cb():
    with pytest.raises(ValueError):
        cb_rank("01")
    with pytest.raises(ValueError):
        cb_unrank(4, 3)


def test_partition_rank_round_trip():
    for m in range(0, 9):
        seen = []
        for r in range(2 ** m):
            subset = [j + 1 for j in range(m) if (r >> j) & 1]
            rank = partition_rank(m, subset)
            seen.append(rank)
            i = len(subset)
            block = sum(comb(m, j) for j in range(i))
            assert partition_unrank(m, i, rank - block) == sorted(subset)
        assert sorted(seen) == list(range(2 ** m))


def test_partition_blocks_contiguous():
    m = 8
    ranks = sorted(
        partition_rank(m, list(c)) for c in itertools.combinations(range(1, m + 1), 3))
    lo = sum(comb(m, j) for j in range(3))
    assert ranks == list(range(lo, lo + comb(m, 3)))
    assert partition_rank(6, []) == 0


def brute_members(n, t=0):
    return [s for s in ("".join(p) for p in itertools.product("01", repeat=n))
            if is_member(s, t)]


def test_size_matches_membership_count():
    for n in range(2, 15):
        assert sr_size(n, 0) == len(brute_members(n, 0)), n
    for t in (1, 2):
        for n in range(2 * t + 2, 13, 2):
            assert sr_size(n, t) == len(brute_members(n, t)), (n, t)


def test_size_lower_bound():
    import math
    for n in range(4, 40):
        assert sr_size(n, 0) >= 2 ** (n - 3) / math.sqrt(math.pi * n)


def test_redundancy_bound():
    import math
    for k in range(8, 65):
        n = sr_params(k)
        assert n - k <= math.ceil(0.5 * math.log2(k)) + 5, (k, n)


@settings(max_examples=40)
@given(st.integers(min_value=1, max_value=16), st.integers(min_value=0, max_value=2))
def test_encode_decode_round_trip(k, t):
    import random
    rng = random.Random(k * 31 + t)
    for _ in range(20):
        info = "".join(rng.choice("01") for _ in range(k))
        cw = sr_encode(info, t)
        assert is_member(cw, t)
        assert sr_decode(cw, k, t) == info


def test_encode_decode_exhaustive_small_k():
    for k in (1, 2, 3, 4, 6, 8):
        for v in range(2 ** k):
            info = format(v, f"0{k}b")
            cw = sr_encode(info, 0)
            assert sr_decode(cw, k, 0) == info


def test_encode_is_injective():
    k = 10
    seen = set()
    for v in range(2 ** k):
        cw = sr_encode(format(v, f"0{k}b"), 0)
        assert cw not in seen
        seen.add(cw)


def prefix_suffix_gap(s, j):
    n = len(s)
    return s[:j].count("1") - s[n - j:].count("1")


def test_codeword_prefix_suffix_weight_gap():
    import random
    rng = random.Random(5)
    for t in (0, 1, 2):
        for _ in range(60):
            k = rng.randint(1, 14)
            cw = sr_encode("".join(rng.choice("01") for _ in range(k)), t)
            n = len(cw)
            for j in range(1, n // 2 + 1):
                assert prefix_suffix_gap(cw, j) != 0
            # shifted codebooks: the 0-surplus of the prefix over the mirrored
            # suffix is at least t+1 from position t+1 onwards
            for j in range(t + 1, n // 2 + 1):
                zeros_gap = cw[:j].count("0") - cw[n - j:].count("0")
                assert zeros_gap >= t + 1


def test_membership_basics():
    assert is_member("01")
    assert not is_member("11")
    assert all(not is_member("1" + s) for s in ("0", "01", "001"))
    # balanced 0..01..1 strings are members for suitable t
    assert is_member("000111", 2)
    assert is_member("0011", 1)
