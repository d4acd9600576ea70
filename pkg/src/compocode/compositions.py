"""Composition multisets of binary strings and the pairwise-weight linear system.

Conventions used throughout the package:

  * A bit string is a Python str over {'0','1'}; indices in documentation and
    error messages are 1-based (s = s_1 ... s_n).
  * A composition is the unordered content of a substring: the pair
    (zeros, ones).  Since the length is zeros + ones, a composition of known
    length is fully described by its 1-count ("weight"), and that is how
    per-level multisets are stored: level l is a Counter mapping weight -> how
    many length-l substrings have that weight.
  * The cumulative weight w_l is the total number of 1s over all compositions
    of length l.  For an uncorrupted multiset w_l = w_{n-l+1}.
  * The sigma sequence is sigma_i = s_i + s_{n+1-i} for i = 1..ceil(n/2)
    (for odd n the middle entry is the middle bit itself, counted once).

Solving for sigma from the cumulative weights uses the triangular system
relating w and sigma.  Writing W = w_1 and S_l = sigma_1 + ... + sigma_l,
one has  w_{l+1} - w_l = W - S_l  for l < ceil(n/2), which gives

    sigma_l = 2*w_l - w_{l-1} - w_{l+1}   (w_0 = 0, l < ceil(n/2))
    sigma_h = w_h - w_{h-1}               (h = ceil(n/2))

i.e. plain successive differencing with exact integer arithmetic.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass


class CorruptedInput(ValueError):
    """Raised when an input multiset/profile is inconsistent with any string."""


def check_bits(s: str) -> str:
    if not s:
        raise ValueError("empty string rejected")
    if set(s) - {"0", "1"}:
        raise ValueError("bit strings must consist of '0'/'1' characters")
    return s


def reverse_bits(s: str) -> str:
    return s[::-1]


def weight(s: str) -> int:
    return s.count("1")


def sigma_of_string(s: str) -> tuple[int, ...]:
    """sigma_i = s_i + s_{n+1-i} for i = 1..ceil(n/2), middle counted once."""
    check_bits(s)
    n = len(s)
    h = (n + 1) // 2
    out = []
    for i in range(h):
        j = n - 1 - i
        if i == j:
            out.append(int(s[i]))
        else:
            out.append(int(s[i]) + int(s[j]))
    return tuple(out)


@dataclass(frozen=True)
class Composition:
    """Unordered substring content 0^zeros 1^ones."""

    zeros: int
    ones: int

    def __post_init__(self):
        if self.zeros < 0 or self.ones < 0 or self.zeros + self.ones < 1:
            raise ValueError("composition length must be >= 1")

    @property
    def length(self) -> int:
        return self.zeros + self.ones

    def __str__(self) -> str:
        return f"0^{self.zeros}1^{self.ones}"


class CompositionMultiset:
    """Per-length multisets of substring compositions.

    levels[l] is a Counter weight -> multiplicity for l in 1..n.  A valid
    (possibly corrupted) channel output has exactly n-l+1 elements at level l.
    """

    __slots__ = ("n", "levels")

    def __init__(self, n: int, levels: dict[int, Counter]):
        self.n = n
        self.levels = levels

    # -- construction -----------------------------------------------------

    @classmethod
    def of_string(cls, s: str) -> "CompositionMultiset":
        check_bits(s)
        n = len(s)
        prefix = [0] * (n + 1)
        for i, ch in enumerate(s):
            prefix[i + 1] = prefix[i] + (ch == "1")
        levels: dict[int, Counter] = {}
        for l in range(1, n + 1):
            c: Counter = Counter()
            for i in range(n - l + 1):
                c[prefix[i + l] - prefix[i]] += 1
            levels[l] = c
        return cls(n, levels)

    def copy(self) -> "CompositionMultiset":
        return CompositionMultiset(self.n, {l: Counter(c) for l, c in self.levels.items()})

    # -- basic queries ----------------------------------------------------

    def level(self, l: int) -> Counter:
        return self.levels[l]

    def level_size(self, l: int) -> int:
        return sum(self.levels[l].values())

    def validate_shape(self) -> None:
        for l in range(1, self.n + 1):
            if l not in self.levels:
                raise CorruptedInput(f"level {l} missing")
            got = self.level_size(l)
            if got != self.n - l + 1:
                raise CorruptedInput(
                    f"level {l} has {got} elements, expected {self.n - l + 1}")
            for w in self.levels[l]:
                if w < 0 or w > l:
                    raise CorruptedInput(f"level {l} contains weight {w} out of range")

    def __eq__(self, other) -> bool:
        if not isinstance(other, CompositionMultiset):
            return NotImplemented
        return self.n == other.n and all(
            self.levels[l] == other.levels[l] for l in range(1, self.n + 1))

    def replace(self, l: int, old_w: int, new_w: int) -> None:
        """Swap one level-l element of weight old_w for one of weight new_w."""
        if self.levels[l][old_w] <= 0:
            raise CorruptedInput(f"no composition of weight {old_w} at level {l}")
        if not (0 <= new_w <= l):
            raise ValueError(f"weight {new_w} invalid at level {l}")
        self.levels[l][old_w] -= 1
        if self.levels[l][old_w] == 0:
            del self.levels[l][old_w]
        self.levels[l][new_w] += 1


def compose_all(s: str) -> CompositionMultiset:
    return CompositionMultiset.of_string(s)


def cumulative_weights(c: CompositionMultiset) -> tuple[int, ...]:
    """w_l = sum of 1-counts at level l; returned 0-indexed (entry l-1 = w_l)."""
    return tuple(
        sum(w * cnt for w, cnt in c.levels[l].items()) for l in range(1, c.n + 1))


def sigma_from_weights(wp, n: int) -> tuple[int, ...]:
    """Solve the triangular pairwise-weight system by successive differencing.

    wp holds w_1..w_n (or at least w_1..w_{ceil(n/2)}), 0-indexed.
    Raises CorruptedInput if the solution leaves {0,1,2} (or {0,1} for the
    middle entry of odd n).
    """
    h = (n + 1) // 2
    if len(wp) < h:
        raise ValueError("weight profile too short")
    sigma = []
    for l in range(1, h):
        prev = wp[l - 2] if l >= 2 else 0
        sigma.append(2 * wp[l - 1] - prev - wp[l])
    # middle entry
    prev = wp[h - 2] if h >= 2 else 0
    sigma.append(wp[h - 1] - prev)
    top = 1 if (n % 2 == 1) else 2
    for i, v in enumerate(sigma):
        hi = top if i == len(sigma) - 1 else 2
        if not (0 <= v <= hi):
            raise CorruptedInput(f"sigma_{i+1} = {v} out of range: corrupted input")
    if sum(sigma) != wp[0]:
        raise CorruptedInput("sigma sum does not match w_1: corrupted input")
    return tuple(sigma)


def weights_from_sigma(sigma, w1: int, n: int) -> tuple[int, ...]:
    """Full profile w_1..w_n from sigma and w_1: w_j = j*w_1 - sum i*sigma_{j-i}."""
    h = (n + 1) // 2
    if len(sigma) != h:
        raise ValueError("sigma length must be ceil(n/2)")
    w = [0] * n
    for j in range(1, h + 1):
        w[j - 1] = j * w1 - sum(i * sigma[j - i - 1] for i in range(1, j))
    for j in range(h + 1, n + 1):
        w[j - 1] = w[n - j]
    return tuple(w)


def sigma_partial(wp, n: int) -> tuple[tuple[int, ...], tuple[bool, ...]]:
    """Erasure view of the sigma recovery under per-level corruption.

    A level weight is trusted iff it matches its mirror (a same-length
    composition error always changes the level weight, because equal-length
    distinct compositions have distinct 1-counts).  On mismatch both sides are
    erased: the observer cannot tell which one erred.

    sigma_i is computable iff w_{i-1}, w_i, w_{i+1} are all trusted (w_0 is the
    constant 0; the middle entry needs only the last two levels).

    Returns (sigma_values, known_mask); erased entries carry value 0.
    """
    h = (n + 1) // 2
    trusted = [False] * (h + 2)  # 1-indexed levels 1..h+1; index 0 = w_0, always good
    trusted[0] = True
    for l in range(1, min(h + 1, n) + 1):
        mirror = n + 1 - l
        if mirror < 1 or mirror > n:
            continue
        trusted[l] = wp[l - 1] == wp[mirror - 1]
    sigma = [0] * h
    known = [False] * h
    for i in range(1, h + 1):
        if i < h:
            ok = trusted[i - 1] and trusted[i] and trusted[i + 1]
        else:
            ok = trusted[h - 1] and trusted[h]
        if not ok:
            continue
        prev = wp[i - 2] if i >= 2 else 0
        if i < h:
            v = 2 * wp[i - 1] - prev - wp[i]
        else:
            v = wp[h - 1] - prev
        top = 1 if (n % 2 == 1 and i == h) else 2
        if 0 <= v <= top:
            sigma[i - 1] = v
            known[i - 1] = True
    return tuple(sigma), tuple(known)


def multiset_symmetric_difference(c1: CompositionMultiset, c2: CompositionMultiset):
    """Total count and per-level detail of (C1 \\ C2) u (C2 \\ C1)."""
    if c1.n != c2.n:
        raise ValueError("multisets describe strings of different lengths")
    count = 0
    detail: dict[int, list[tuple[int, int]]] = {}
    for l in range(1, c1.n + 1):
        a, b = c1.levels[l], c2.levels[l]
        diffs = []
        for w in set(a) | set(b):
            d = a[w] - b[w]
            if d:
                diffs.append((w, d))
                count += abs(d)
        if diffs:
            detail[l] = sorted(diffs)
    return count, detail


# -- text format ----------------------------------------------------------
#
# First line `n=<int>`; then one line per level, descending l:
#     `l: w1 w2 ... w_{n-l+1}`  with weights ascending.


def serialize(c: CompositionMultiset) -> str:
    lines = [f"n={c.n}"]
    for l in range(c.n, 0, -1):
        ws = sorted(c.levels[l].elements())
        lines.append(f"{l}: " + " ".join(map(str, ws)))
    return "\n".join(lines) + "\n"


def parse(text: str) -> CompositionMultiset:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("n="):
        raise CorruptedInput("first line must be n=<int>")
    try:
        n = int(lines[0][2:])
    except ValueError as e:
        raise CorruptedInput("malformed n= line") from e
    if n < 1 or len(lines) != n + 1:
        raise CorruptedInput(f"expected {n} level lines")
    levels: dict[int, Counter] = {}
    for ln in lines[1:]:
        head, _, rest = ln.partition(":")
        try:
            l = int(head)
            ws = [int(tok) for tok in rest.split()]
        except ValueError as e:
            raise CorruptedInput(f"malformed line: {ln!r}") from e
        if l in levels:
            raise CorruptedInput(f"level {l} repeated")
        levels[l] = Counter(ws)
    c = CompositionMultiset(n, levels)
    c.validate_shape()
    return c
