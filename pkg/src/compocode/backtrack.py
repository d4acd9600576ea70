"""String reconstruction from composition multisets by inward backtracking.

The search places bit pairs (s_{k}, s_{n+1-k}) outside-in.  After k pairs the
compositions of every length-(n-k) substring are determined by the known
prefix/suffix weights and the total weight W = sum(sigma):

    wt(s_i .. s_{i+n-k-1}) = W - wt(s_1^{i-1}) - wt(s_{i+n-k}^n),  i = 1..k+1

so each extension is validated by comparing these k+1 values against the
observed level n-k.  The sigma value of the next pair leaves zero (sigma in
{0,2}) or two (sigma = 1) branch choices; when sigma = 1 and the prefix and
suffix have equal weight the two choices are indistinguishable at this level
(a guess) and the search explores both depth-first, rolling back on the first
inconsistency.

Reconstruction is inherently two-sided: C(s) = C(s^r), so the first sigma = 1
pair is fixed canonically to (0, 1) and reversals are restored afterwards.

The tolerant mode accepts a multiset with up to t corrupted levels (one
element swapped per level).  Given the exact sigma sequence, the corrupted
levels are exactly those whose observed cumulative weight disagrees with the
sigma-derived profile, and at such a level a single swapped element (a
symmetric difference of 2) is tolerated; everywhere else exact agreement is
required.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .compositions import (
    CompositionMultiset,
    CorruptedInput,
    compose_all,
    cumulative_weights,
    sigma_from_weights,
    weights_from_sigma,
)


class ReconstructionFailure(ValueError):
    """No string consistent with the multiset within the allowed tolerance."""


@dataclass
class BacktrackStats:
    guesses: int = 0      # weight-tie branch points
    backtracks: int = 0   # rollbacks of an accepted extension
    levels: int = 0       # deepest pair index reached


@dataclass
class ToleranceBudget:
    """How much multiset corruption the search absorbs.

    t corrupted levels at most, each holding a single swapped element (so at
    most 2 mismatches per level).  Under the asymmetric model a level and its
    mirror are never both corrupted.
    """

    t: int = 0
    model: str = "asymmetric"  # or "symmetric-single"
    per_level_cap: int = 2

    def __post_init__(self):
        if self.t < 0:
            raise ValueError("tolerance must be >= 0")
        if self.model not in ("asymmetric", "symmetric-single"):
            raise ValueError(f"unknown error model {self.model!r}")


def build_T(prefix: str, suffix: str, sigma, n: int) -> CompositionMultiset:
    """Multiset of all substring compositions determined by a partial state.

    With |prefix| = |suffix| = L these are: substrings inside the prefix,
    substrings inside the suffix, center-spanning substrings s_i^j with
    i <= L+1 and j >= n-L, and the symmetric centers s_i^{n+1-i} for i > L+1
    (their weight is a sigma tail sum).
    """
    L = len(prefix)
    if len(suffix) != L or 2 * L > n:
        raise ValueError("prefix/suffix lengths invalid")
    h = (n + 1) // 2
    if len(sigma) != h:
        raise ValueError("sigma length must be ceil(n/2)")
    W = sum(sigma)
    pw = [0]
    for ch in prefix:
        pw.append(pw[-1] + (ch == "1"))
    swr = [0]  # swr[b] = weight of the last b characters
    for ch in reversed(suffix):
        swr.append(swr[-1] + (ch == "1"))
    levels: dict[int, Counter] = {l: Counter() for l in range(1, n + 1)}
    seen: set[tuple[int, int]] = set()

    def add(i, j, w):
        if (i, j) not in seen:
            seen.add((i, j))
            levels[j - i + 1][w] += 1

    for i in range(1, L + 1):
        for j in range(i, L + 1):
            add(i, j, pw[j] - pw[i - 1])
            add(n - L + i, n - L + j, swr[L + 1 - i] - swr[L - j])
    for i in range(1, L + 2):
        for j in range(max(i, n - L), n + 1):
            add(i, j, W - pw[i - 1] - swr[n - j])
    tail = 0
    for i in range(h, L + 1, -1):
        tail += sigma[i - 1]
        length = n + 2 - 2 * i
        if length >= 1:
            levels[length][tail] += 1
    return CompositionMultiset(n, levels)


def _pair_choices(sv: int):
    if sv == 0:
        return (("0", "0"),)
    if sv == 2:
        return (("1", "1"),)
    return (("0", "1"), ("1", "0"))


def _search(c, sigma, bad_levels, stats, *, collect_all, canonical_first=True,
            max_solutions=None):
    """Depth-first pair placement.  Returns the list of consistent strings."""
    n = c.n
    h = (n + 1) // 2
    W = sum(sigma)
    steps = n // 2
    prefix: list[str] = []
    suffix: list[str] = []  # suffix[k-1] = s_{n+1-k}
    pw = [0]
    sw = [0]
    solutions: list[str] = []
    first_one = next((i for i in range(steps) if sigma[i] == 1), None)

    def level_ok(k):
        # expected compositions at level n-k after k placed pairs
        m = n - k
        expected = Counter()
        for i in range(1, k + 2):
            expected[W - pw[i - 1] - sw[k + 1 - i]] += 1
        obs = c.levels[m]
        d = 0
        for w in expected.keys() | obs.keys():
            d += abs(expected[w] - obs.get(w, 0))
        if d == 0:
            return True
        return d == 2 and m in bad_levels

    def order_choices(k, choices):
        # try first the branch matching the largest composition left at the
        # next level after the already-determined ones are taken out
        rem = Counter(c.levels[n - k - 1])
        for i in range(2, k + 2):
            rem[W - pw[i - 1] - sw[k + 2 - i]] -= 1
        positives = [w for w, cnt in rem.items() if cnt > 0]
        if not positives:
            return choices
        wmax = max(positives)

        def score(pair):
            a, b = pair
            new = (W - sw[k] - (b == "1"), W - pw[k] - (a == "1"))
            return 0 if wmax in new else 1

        return tuple(sorted(choices, key=score))

    def finalize(s):
        cc = compose_all(s)
        for l in range(1, n + 1):
            a, b = cc.levels[l], c.levels[l]
            d = sum(abs(a[w] - b.get(w, 0)) for w in a.keys() | b.keys())
            if d == 0:
                continue
            if d == 2 and l in bad_levels:
                continue
            return False
        solutions.append(s)
        return True

    def extend(k):
        stats.levels = max(stats.levels, k)
        if k == steps:
            mid = str(sigma[h - 1]) if n % 2 else ""
            return finalize("".join(prefix) + mid + "".join(reversed(suffix)))
        choices = _pair_choices(sigma[k])
        if sigma[k] == 1:
            if canonical_first and k == first_one:
                choices = (("0", "1"),)
            else:
                if pw[k] == sw[k]:
                    stats.guesses += 1
                choices = order_choices(k, choices)
        found = False
        for a, b in choices:
            prefix.append(a)
            suffix.append(b)
            pw.append(pw[-1] + (a == "1"))
            sw.append(sw[-1] + (b == "1"))
            if level_ok(k + 1):
                sub = extend(k + 1)
                if not sub:
                    stats.backtracks += 1
                found = found or sub
            prefix.pop()
            suffix.pop()
            pw.pop()
            sw.pop()
            if found and not collect_all:
                break
            if max_solutions is not None and len(solutions) >= max_solutions:
                break
        return found

    extend(0)
    return solutions


def reconstruct(c: CompositionMultiset) -> set[str]:
    """All strings v with C(v) = C: the confusable set, closed under reversal."""
    c.validate_shape()
    try:
        sigma = sigma_from_weights(cumulative_weights(c), c.n)
    except CorruptedInput as e:
        raise ReconstructionFailure(f"inconsistent multiset: {e}") from e
    stats = BacktrackStats()
    sols = _search(c, sigma, frozenset(), stats, collect_all=True)
    if not sols:
        raise ReconstructionFailure("inconsistent multiset: no consistent string")
    return set(sols) | {s[::-1] for s in sols}


def reconstruct_unique(c: CompositionMultiset, strict: bool = True):
    """Reconstruct a codeword multiset; the 0-heavy branch is canonical.

    Returns (string, stats).  With strict=True a rollback is an error, since
    codewords with the prefix/suffix weight-gap guarantee never need one.
    """
    c.validate_shape()
    try:
        sigma = sigma_from_weights(cumulative_weights(c), c.n)
    except CorruptedInput as e:
        raise ReconstructionFailure(f"inconsistent multiset: {e}") from e
    stats = BacktrackStats()
    sols = _search(c, sigma, frozenset(), stats, collect_all=False)
    if not sols:
        raise ReconstructionFailure("inconsistent multiset: no consistent string")
    if strict and stats.backtracks:
        raise ReconstructionFailure(
            "backtracking occurred: input is not a codeword multiset")
    return sols[0], stats


def tolerant_reconstruct(c: CompositionMultiset, sigma, budget: ToleranceBudget):
    """Reconstruct from a multiset with up to budget.t corrupted levels.

    sigma must be exact (recovered upstream).  Corrupted levels are identified
    by their cumulative-weight disagreement with the sigma-derived profile;
    each absorbs one swapped element.  Returns (string, stats).
    """
    c.validate_shape()
    n = c.n
    h = (n + 1) // 2
    if len(sigma) != h:
        raise ValueError("sigma length must be ceil(n/2)")
    w_true = weights_from_sigma(sigma, sum(sigma), n)
    w_obs = cumulative_weights(c)
    bad = frozenset(l for l in range(1, n + 1) if w_obs[l - 1] != w_true[l - 1])
    if len(bad) > budget.t:
        raise ReconstructionFailure(
            f"{len(bad)} corrupted levels exceed the tolerance of {budget.t}")
    if budget.model == "asymmetric":
        for l in bad:
            if n + 1 - l in bad and n + 1 - l != l:
                raise ReconstructionFailure(
                    "mirror levels both corrupted: outside the asymmetric model")
    stats = BacktrackStats()
    sols = _search(c, tuple(sigma), bad, stats, collect_all=False)
    if not sols:
        raise ReconstructionFailure("tolerance budget exhausted on all branches")
    return sols[0], stats


def _ell(s: str) -> int:
    """Number of guess points: prefix/suffix weight ties followed by sigma=1."""
    n = len(s)
    count = 0
    for i in range(1, (n + 1) // 2):
        if s[:i].count("1") == s[n - i:].count("1") and s[i] != s[n - 1 - i]:
            count += 1
    return count


def confusable_oracle(n: int) -> dict[str, tuple[frozenset, int, int]]:
    """Brute force: s -> (E_s, ell_s, ell_s*) over all 2^n strings.

    E_s groups strings by composition multiset; ell_s counts the guess points
    of s and ell_s* is the maximum over E_s.
    """
    import itertools

    groups: dict[tuple, list[str]] = {}
    for tup in itertools.product("01", repeat=n):
        s = "".join(tup)
        key = tuple(
            tuple(sorted(compose_all(s).levels[l].items())) for l in range(1, n + 1))
        groups.setdefault(key, []).append(s)
    out = {}
    for members in groups.values():
        es = frozenset(members)
        ells = {s: _ell(s) for s in members}
        star = max(ells.values())
        for s in members:
            out[s] = (es, ells[s], star)
    return out
