"""Codes correcting asymmetric composition errors.

Two constructions share the same skeleton: protect the sigma sequence with
number-theoretic (single error) or Reed-Solomon (t errors) redundancy, recover
sigma from the corrupted multiset, then run the tolerant backtracking
reconstruction and strip the redundancy.

Single-error code, odd length n with ceil(n/2) divisible by 3:
  * deleting positions 2 and n-1 leaves a reconstruction codeword of length
    n-2 (odd, so its middle bit is free);
  * (s_2, s_{n-1}) with s_2 <= s_{n-1} makes sum_{i<=ceil(n/2)} w_i = 0 mod 3
    (each of the two bits joins 2*ceil(n/2)-1 = -1 mod 3 of those
    compositions, so the three admissible pairs hit all three residues);
  * the free middle bit makes wt(s) even; it joins a multiple-of-3 count of
    the checksummed compositions, so the flip leaves the mod-3 state alone.

t-error code, even inner length m: the inner codeword is t-shifted, its
sigma prefix is extended by 3t ternary-code check symbols, and the check
digits are realized as bit pairs (0->00, 1->01, 2->11) forming a block b
spliced between the inner halves: s = s'_1..s'_{m/2}  b  s'_{m/2+1}..s'_m.
Pair k of b sits at mirrored positions of s, so sigma_{m/2+k}(s) is exactly
check digit k, and sigma_i(s) = sigma_i(s') for i <= m/2.
"""

from __future__ import annotations

from .backtrack import ReconstructionFailure, ToleranceBudget, tolerant_reconstruct
from .catalan import sr_decode, sr_encode, sr_size
from .compositions import (
    CompositionMultiset,
    CorruptedInput,
    cumulative_weights,
    sigma_of_string,
    sigma_partial,
)
from .fields import ternary_erasure_decode, ternary_erasure_encode, ternary_field_params


# -- single composition error ----------------------------------------------


def s1_params(k: int) -> int:
    """Smallest odd n with ceil(n/2) = 0 mod 3 whose inner codebook fits k bits."""
    n = 5
    while True:
        if (n + 1) // 2 % 3 == 0 and sr_size(n - 3, 0) >= 2 ** k:
            return n
        n += 2


def _checksum(s: str) -> int:
    """sum of w_i over levels i <= ceil(n/2), mod 3."""
    w = cumulative_weights(CompositionMultiset.of_string(s))
    h = (len(s) + 1) // 2
    return sum(w[:h]) % 3


def s1_encode(info: str, n: int | None = None) -> str:
    """Map info into the single-error code of length n."""
    k = len(info)
    if n is None:
        n = s1_params(k)
    h = (n + 1) // 2
    if n % 2 == 0 or h % 3 != 0:
        raise ValueError("length must be odd with ceil(n/2) divisible by 3")
    ev = sr_encode(info, 0, n - 3)
    inner_mid = (n - 3) // 2  # insertion point of the free middle bit
    for pair in ("00", "01", "11"):
        inner = ev[:inner_mid] + "0" + ev[inner_mid:]
        s = inner[0] + pair[0] + inner[1:-1] + pair[1] + inner[-1]
        if _checksum(s) == 0:
            break
    else:
        raise AssertionError("no admissible (s_2, s_{n-1}) pair")  # unreachable
    if s.count("1") % 2 == 1:
        s = s[:h - 1] + ("1" if s[h - 1] == "0" else "0") + s[h:]
    assert _checksum(s) == 0 and s.count("1") % 2 == 0
    return s


def recover_w1(w1_obs: int, wn_obs: int, parity: int = 0) -> int:
    """True w_1 when at most one of levels 1, n is corrupted.

    A corrupted level-1 or level-n element shifts the level weight by exactly
    one, flipping its parity, so the value with the codeword's weight parity
    is the clean one.
    """
    if w1_obs == wn_obs or w1_obs % 2 == parity:
        return w1_obs
    return wn_obs


def s1_recover_sigma(c: CompositionMultiset, parity: int = 0):
    """Exact sigma sequence from a multiset with at most one bad element.

    A corrupted level j != ceil(n/2) betrays itself by w_j != w_{n+1-j};
    level ceil(n/2) is its own mirror, so an undetected error is attributed
    there.  Either way one cumulative weight is unknown; it is pinned by
    w_j = base - sigma_{j-1} with sigma_{j-1} in {0,1,2} (a width-3 window)
    plus the mod-3 checksum over levels <= ceil(n/2).
    """
    c.validate_shape()
    n = c.n
    h = (n + 1) // 2
    w_obs = cumulative_weights(c)
    mism = sorted(
        j for j in range(1, h) if w_obs[j - 1] != w_obs[n - j])
    if len(mism) > 1:
        raise CorruptedInput("more than one corrupted level: outside the model")
    w1 = recover_w1(w_obs[0], w_obs[n - 1], parity)
    j = mism[0] if mism else h
    # trusted profile: for i < j both mirror copies agree (or i=1 was repaired)
    w = [0] * (h + 1)  # 1-indexed, levels 1..h
    w[1] = w1
    for i in range(2, h + 1):
        w[i] = w_obs[i - 1]
    # sigma_1 .. sigma_{j-2} from trusted levels, then pin w_j
    sigma = [0] * (h + 1)
    for i in range(1, j - 1):
        sigma[i] = 2 * w[i] - w[i - 1] - w[i + 1]
        if not 0 <= sigma[i] <= 2:
            raise CorruptedInput(f"sigma_{i} out of range: outside the model")
    if j >= 2:
        base = j * w1 - sum(i * sigma[j - i] for i in range(2, j))
        target = -(sum(w[1:j]) + sum(w[j + 1:h + 1])) % 3
        cands = [v for v in range(base - 2, base + 1) if v % 3 == target]
        if len(cands) != 1:
            raise CorruptedInput("checksum fails to pin the corrupted level")
        w[j] = cands[0]
    # full profile now trusted; difference out the remaining sigma entries
    for i in range(max(1, j - 1), h):
        sigma[i] = 2 * w[i] - w[i - 1] - w[i + 1]
    sigma[h] = w[h] - w[h - 1]
    out = tuple(sigma[1:h + 1])
    top = 1 if n % 2 == 1 else 2
    for i, v in enumerate(out):
        hi = top if i == h - 1 else 2
        if not 0 <= v <= hi:
            raise CorruptedInput(f"sigma_{i+1} = {v} out of range")
    return out


def s1_reconstruct(c: CompositionMultiset, parity: int = 0) -> str:
    """The codeword string behind a multiset with at most one bad element."""
    sigma = s1_recover_sigma(c, parity)
    budget = ToleranceBudget(1, model="symmetric-single")
    s, _ = tolerant_reconstruct(c, sigma, budget)
    return s


def s1_decode(c: CompositionMultiset, k: int) -> str:
    s = s1_reconstruct(c)
    n = len(s)
    h = (n + 1) // 2
    inner = s[0] + s[2:n - 2] + s[n - 1]  # drop positions 2 and n-1
    mid = (n - 2 + 1) // 2  # middle of the inner string, 1-based
    ev = inner[:mid - 1] + inner[mid:]
    return sr_decode(ev, k, 0)


# -- t asymmetric composition errors ---------------------------------------


def st_params(k: int, t: int):
    """(m, n) for the t-error code: inner length and total length."""
    if t < 1:
        raise ValueError("t must be >= 1")
    m = 2 * t + 2
    while sr_size(m, t) < 2 ** k:
        m += 2
    e = ternary_field_params(m // 2, 3 * t)
    n = m + 6 * t * e
    return m, n


def _digit_pair(d: int) -> str:
    return {0: "00", 1: "01", 2: "11"}[d]


def st_encode(info: str, t: int) -> str:
    k = len(info)
    m, n = st_params(k, t)
    inner = sr_encode(info, t, m)
    sig = list(sigma_of_string(inner))
    word = ternary_erasure_encode(sig, 3 * t)
    parity = word[m // 2:]
    D = len(parity)
    assert n == m + 2 * D
    b = [""] * (2 * D)
    for idx, d in enumerate(parity):  # pair idx+1 at positions idx, 2D-1-idx
        pair = _digit_pair(d)
        b[idx] = pair[0]
        b[2 * D - 1 - idx] = pair[1]
    return inner[:m // 2] + "".join(b) + inner[m // 2:]


def st_decode(c: CompositionMultiset, k: int, t: int) -> str:
    c.validate_shape()
    n = c.n
    m, n_expected = st_params(k, t)
    if n != n_expected:
        raise ValueError(f"length {n} does not match parameters ({n_expected})")
    w_obs = cumulative_weights(c)
    sigma_vals, known = sigma_partial(w_obs, n)
    word = [v if ok else None for v, ok in zip(sigma_vals, known)]
    try:
        sig = ternary_erasure_decode(word, m // 2, 3 * t)
    except ValueError as e:
        raise ReconstructionFailure(f"sigma recovery failed: {e}") from e
    full_sigma = tuple(ternary_erasure_encode(sig, 3 * t))
    s, _ = tolerant_reconstruct(c, full_sigma, ToleranceBudget(t, "asymmetric"))
    inner = s[:m // 2] + s[n - m // 2:]
    return sr_decode(inner, k, t)


def st_redundancy(k: int, t: int) -> int:
    m, n = st_params(k, t)
    return n - k
