"""Catalan-Bertrand strings, ranking/unranking, and the reconstruction codebooks.

A Catalan-Bertrand (CB) string has strictly more 0s than 1s in every prefix
(so its first bit is 0).  cb_count(m, i) counts CB strings of length m with i
ones; the closed form is C(m-1, i) - C(m-1, i-1) and the total over i is
C(m-1, floor((m-1)/2)).

The reconstruction codebook of shift t >= 0 and even length n consists of the
strings with a 0^t prefix, a 1^t suffix, and a partition of the remaining
first-half positions {t+1 .. n/2} into a set I (mirror bit differs) carrying a
CB string and its complement (mirror bit equal) carrying free bits.  Position
t+1 always belongs to I, which is what gives every prefix of length
j in [t+1, n/2] at least t+1 more 0s than its mirrored suffix.  For t = 0 this
is exactly the codebook with s_1 = 0, s_n = 1; odd lengths (t = 0 only) are
obtained by doubling: a free middle bit is inserted into an even codeword.

All ranks are 0-based.  The encoder is a bijection obtained by mixed-radix
composition of (1-count block, partition rank, free bits, CB rank, middle bit).
"""

from __future__ import annotations

from functools import lru_cache
from math import comb


def cb_count(m: int, i: int) -> int:
    """Number of CB strings of length m containing i ones (f_m(i))."""
    if i < 0 or m < 0:
        return 0
    if m == 0:
        return 1 if i == 0 else 0
    if 2 * i >= m:
        return 0
    return comb(m - 1, i) - (comb(m - 1, i - 1) if i >= 1 else 0)


@lru_cache(maxsize=None)
def cb_total(m: int) -> int:
    """Number of CB strings of length m: C(m-1, floor((m-1)/2))."""
    if m == 0:
        return 1
    return comb(m - 1, (m - 1) // 2)


def is_catalan_bertrand(s: str) -> bool:
    zeros = ones = 0
    for ch in s:
        if ch == "0":
            zeros += 1
        else:
            ones += 1
        if zeros <= ones:
            return False
    return True


def cb_rank(s: str) -> int:
    """0-based rank of a CB string; blocks ordered by 1-count ascending.

    Scanning s_m down to s_1 with l ones still unplaced, a 0 at position p is
    preceded (within the block, from the top) by the cb_count(p-1, l-1)
    strings that place a 1 there instead.
    """
    if not is_catalan_bertrand(s):
        raise ValueError("not a Catalan-Bertrand string")
    m = len(s)
    i = s.count("1")
    ind = cb_count(m, i)
    l = i
    for p in range(m, 0, -1):
        if s[p - 1] == "0":
            ind -= cb_count(p - 1, l - 1)
        else:
            l -= 1
    return sum(cb_count(m, j) for j in range(i)) + (ind - 1)


def cb_unrank(m: int, rank: int) -> str:
    if not (0 <= rank < cb_total(m)):
        raise ValueError(f"rank {rank} out of range for length {m}")
    i = 0
    while rank >= cb_count(m, i):
        rank -= cb_count(m, i)
        i += 1
    target = rank + 1  # 1-based index within the block
    ind = cb_count(m, i)
    l = i
    bits = []
    for p in range(m, 0, -1):
        c = cb_count(p - 1, l - 1) if l > 0 else 0
        if l > 0 and target > ind - c:
            bits.append("1")
            l -= 1
        else:
            bits.append("0")
            ind -= c
    return "".join(reversed(bits))


# -- partitions (subsets of [m]) in combinatorial-number-system order -------


def partition_rank(m: int, subset) -> int:
    """0-based rank of subset of {1..m}; blocks by cardinality ascending,
    combinatorial number system within a block."""
    ell = sorted(subset)
    i = len(ell)
    if ell and (ell[0] < 1 or ell[-1] > m):
        raise ValueError("subset out of range")
    if len(set(ell)) != i:
        raise ValueError("subset has repeats")
    block = sum(comb(m, j) for j in range(i))
    within = sum(comb(ell[j] - 1, j + 1) for j in range(i))
    return block + within


def partition_unrank(m: int, i: int, within: int):
    """Inverse of the within-block part: the rank-`within` i-subset of {1..m}."""
    if not (0 <= within < comb(m, i)):
        raise ValueError("rank out of range")
    out = []
    r = within
    for j in range(i, 0, -1):
        ell = j
        while comb(ell, j) <= r:
            ell += 1
        # now comb(ell-1+1, j) > r >= comb(ell-1, j): position is ell
        r -= comb(ell - 1, j)
        out.append(ell)
    return sorted(out)


# -- codebook sizes and parameters -----------------------------------------


def sr_size(n: int, t: int = 0) -> int:
    """Codebook size for shift t and length n (odd n allowed only for t=0)."""
    if t < 0:
        raise ValueError("shift must be >= 0")
    if n % 2 == 1:
        if t != 0:
            raise ValueError("odd lengths only supported for shift 0")
        if n < 3:
            raise ValueError("length too short")
        return 2 * sr_size(n - 1, 0)
    if n < 2 * t + 2:
        raise ValueError("length too short for the requested shift")
    half_free = n // 2 - t - 1  # positions t+2 .. n/2
    return sum(
        comb(half_free, i) * 2 ** (half_free - i) * cb_total(i + 1)
        for i in range(half_free + 1))


def sr_params(k: int, t: int = 0):
    """Smallest codeword length n with codebook size >= 2^k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    n = 2 * t + 2
    while sr_size(n, t) < 2 ** k:
        n += 1 if t == 0 else 2
    return n


# -- the bijective encoder --------------------------------------------------


def _encode_even(ind: int, n: int, t: int):
    half = n // 2
    hf = half - t - 1
    i = 0
    while True:
        block = comb(hf, i) * 2 ** (hf - i) * cb_total(i + 1)
        if ind < block:
            break
        ind -= block
        i += 1
        if i > hf:
            raise ValueError("info rank exceeds codebook size")
    cbt = cb_total(i + 1)
    nfree = hf - i
    p, rem = divmod(ind, (2 ** nfree) * cbt)
    v, rc = divmod(rem, cbt)
    extra = partition_unrank(hf, i, p)  # subset of {1..hf} -> positions t+2..half
    i_half = [t + 1] + [t + 1 + e for e in extra]
    cb = cb_unrank(i + 1, rc)
    free_pos = [j for j in range(t + 1, half + 1) if j not in set(i_half)]
    free_bits = format(v, f"0{nfree}b") if nfree else ""
    s = ["?"] * n
    for j in range(1, t + 1):
        s[j - 1] = "0"
        s[n - j] = "1"
    for pos, bit in zip(i_half, cb):
        s[pos - 1] = bit
        s[n - pos] = "1" if bit == "0" else "0"
    for pos, bit in zip(free_pos, free_bits):
        s[pos - 1] = bit
        s[n - pos] = bit
    return "".join(s)


def _decode_even(s: str, t: int) -> int:
    n = len(s)
    half = n // 2
    hf = half - t - 1
    if any(s[j - 1] != "0" or s[n - j] != "1" for j in range(1, t + 1)):
        raise ValueError("not a codeword")
    i_half = [j for j in range(t + 1, half + 1) if s[j - 1] != s[n - j]]
    if (t + 1) not in i_half:
        raise ValueError("not a codeword")
    extra = [j - (t + 1) for j in i_half if j > t + 1]
    i = len(extra)
    cb = "".join(s[j - 1] for j in i_half)
    free_pos = [j for j in range(t + 1, half + 1) if j not in set(i_half)]
    free_bits = "".join(s[j - 1] for j in free_pos)
    cbt = cb_total(i + 1)
    nfree = hf - i
    p = partition_rank(hf, extra) - sum(comb(hf, j) for j in range(i))
    v = int(free_bits, 2) if free_bits else 0
    rc = cb_rank(cb)  # global rank: the radix slot spans cb_total(i+1)
    ind = (p * 2 ** nfree + v) * cbt + rc
    return sum(
        comb(hf, j) * 2 ** (hf - j) * cb_total(j + 1) for j in range(i)) + ind


def sr_encode(info: str, t: int = 0, n: int | None = None) -> str:
    """Map a k-bit info string bijectively into the shift-t codebook."""
    k = len(info)
    if set(info) - {"0", "1"}:
        raise ValueError("info must be a bit string")
    if n is None:
        n = sr_params(k, t)
    if sr_size(n, t) < 2 ** k:
        raise ValueError("info rank exceeds codebook size")
    ind = int(info, 2) if info else 0
    if n % 2 == 1:
        mid = ind & 1
        inner = _encode_even(ind >> 1, n - 1, 0)
        half = (n - 1) // 2
        return inner[:half] + str(mid) + inner[half:]
    return _encode_even(ind, n, t)


def sr_decode(codeword: str, k: int, t: int = 0) -> str:
    """Inverse of sr_encode; raises ValueError on non-codewords."""
    if not is_member(codeword, t):
        raise ValueError("membership violation: not a codeword")
    n = len(codeword)
    if n % 2 == 1:
        half = (n - 1) // 2
        mid = int(codeword[half])
        inner = codeword[:half] + codeword[half + 1:]
        ind = (_decode_even(inner, 0) << 1) | mid
    else:
        ind = _decode_even(codeword, t)
    if ind >= 2 ** k:
        raise ValueError("codeword outside the 2^k information range")
    return format(ind, f"0{k}b")


def is_member(s: str, t: int = 0) -> bool:
    n = len(s)
    if set(s) - {"0", "1"}:
        return False
    if n % 2 == 1:
        if t != 0 or n < 3:
            return False
        half = (n - 1) // 2
        return is_member(s[:half] + s[half + 1:], 0)
    if n < 2 * t + 2:
        return False
    half = n // 2
    for j in range(1, t + 1):
        if s[j - 1] != "0" or s[n - j] != "1":
            return False
    diff = [j for j in range(1, half + 1) if s[j - 1] != s[n - j]]
    cb_positions = [j for j in diff if j > t]
    if len(cb_positions) != len(diff) - t or (t + 1) not in cb_positions:
        return False
    return is_catalan_bertrand("".join(s[j - 1] for j in cb_positions))
