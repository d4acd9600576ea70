"""Finite-field machinery: prime fields with a primitive element, sparse
polynomial recovery from consecutive power evaluations, a systematic erasure
code over the ternary alphabet (built on GF(3^e)), and systematic binary block
codes of minimum distance 2t+1.

All prime-field elements are plain ints in [0, q); extension-field elements of
GF(3^e) are ints whose base-3 digits are the polynomial coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
import sympy


class SparsityExceeded(ValueError):
    """The evaluations are not explained by any polynomial within the bound."""


class EraseBudgetExceeded(ValueError):
    """Too many erased symbols for the designed redundancy."""


# -- prime fields ----------------------------------------------------------


@dataclass(frozen=True)
class PrimeField:
    q: int
    alpha: int

    def __post_init__(self):
        if not sympy.isprime(self.q):
            raise ValueError(f"{self.q} is not prime")
        for p in sympy.factorint(self.q - 1):
            if pow(self.alpha, (self.q - 1) // p, self.q) == 1:
                raise ValueError(f"{self.alpha} does not generate GF({self.q})*")

    def inv(self, a: int) -> int:
        return pow(a, self.q - 2, self.q)


@lru_cache(maxsize=None)
def alpha_power_table(field: PrimeField) -> np.ndarray:
    """alpha^i mod q for i = 0..q-2, as an int64 array for bulk evaluation."""
    q, alpha = field.q, field.alpha
    out = np.empty(q - 1, dtype=np.int64)
    v = 1
    for i in range(q - 1):
        out[i] = v
        v = v * alpha % q
    return out


@lru_cache(maxsize=None)
def field_setup(n: int) -> PrimeField:
    """Smallest prime q with q - 1 > 2n, and a primitive element.

    The strict inequality keeps the exponents 0..2n distinct mod q-1, so a
    degree-2n polynomial's terms cannot alias under x^(q-1) = 1.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    q = sympy.nextprime(2 * n + 1)
    return PrimeField(q, sympy.primitive_root(q))


# -- sparse recovery from power evaluations --------------------------------


def _berlekamp_massey(seq, q):
    """Shortest LFSR [1, c_1, .., c_L] with s_i = -sum c_j s_{i-j} over GF(q)."""
    C = [1]
    B = [1]
    L, m, b = 0, 1, 1
    for i, s in enumerate(seq):
        d = s
        for j in range(1, L + 1):
            d = (d + C[j] * seq[i - j]) % q
        if d == 0:
            m += 1
        elif 2 * L <= i:
            T = C[:]
            coef = d * pow(b, q - 2, q) % q
            C = C + [0] * (len(B) + m - len(C))
            for j, bj in enumerate(B):
                C[j + m] = (C[j + m] - coef * bj) % q
            L, B, b, m = i + 1 - L, T, d, 1
        else:
            coef = d * pow(b, q - 2, q) % q
            C = C + [0] * max(0, len(B) + m - len(C))
            for j, bj in enumerate(B):
                C[j + m] = (C[j + m] - coef * bj) % q
            m += 1
    return C[:L + 1], L


def _solve_linear(mat, rhs, q):
    """Gaussian elimination over GF(q); mat is square and expected invertible."""
    k = len(rhs)
    a = [row[:] + [rhs[i]] for i, row in enumerate(mat)]
    for col in range(k):
        piv = next((r for r in range(col, k) if a[r][col] % q), None)
        if piv is None:
            raise SparsityExceeded("locator roots are not distinct")
        a[col], a[piv] = a[piv], a[col]
        inv = pow(a[col][col], q - 2, q)
        a[col] = [v * inv % q for v in a[col]]
        for r in range(k):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [(v - f * w) % q for v, w in zip(a[r], a[col])]
    return [a[r][k] for r in range(k)]


@lru_cache(maxsize=64)
def _scan_table(field: PrimeField, j: int) -> np.ndarray:
    """alpha^(-e*j) for e = 0..q-2, the j-th column of the full root scan."""
    es = np.arange(field.q - 1, dtype=np.int64)
    return alpha_power_table(field)[(-es * j) % (field.q - 1)]


def sparse_interpolate(evals, T: int, field: PrimeField,
                       exponents=None) -> dict[int, int]:
    """Recover a polynomial with <= T nonzero terms from its values at
    alpha^l, l = -T..T (evals[i] = E(alpha^(i-T))).

    Returns {exponent: coefficient}.  exponents optionally restricts the root
    search (default: all of 0..q-2).  Raises SparsityExceeded when no such
    polynomial reproduces the evaluations.
    """
    q, alpha = field.q, field.alpha
    if len(evals) != 2 * T + 1:
        raise ValueError("need exactly 2T+1 evaluations")
    seq = [v % q for v in evals]
    if all(v == 0 for v in seq):
        return {}
    lam, L = _berlekamp_massey(seq, q)
    if L > T:
        raise SparsityExceeded(f"locator degree {L} exceeds the bound {T}")
    search = range(q - 1) if exponents is None else exponents
    if len(search) >= 1024:
        # bulk scan: Lambda(alpha^-e) for every candidate via the power table
        acc = None
        if exponents is None:
            # full-circle scan reuses cached per-degree lookup tables
            es = np.arange(q - 1, dtype=np.int64)
            acc = np.zeros(q - 1, dtype=np.int64)
            for j, c in enumerate(lam):
                if c:
                    acc = (acc + c * _scan_table(field, j)) % q
        else:
            table = alpha_power_table(field)
            es = np.asarray(search, dtype=np.int64)
            acc = np.zeros(len(es), dtype=np.int64)
            for j, c in enumerate(lam):
                if c:
                    acc = (acc + c * table[(-es * j) % (q - 1)]) % q
        roots = [int(e) for e in es[acc == 0]]
    else:
        roots = []
        for e in search:
            x = pow(alpha, (-e) % (q - 1), q)
            acc = 0
            for c in reversed(lam):
                acc = (acc * x + c) % q
            if acc == 0:
                roots.append(e)
    if len(roots) != L:
        raise SparsityExceeded(
            f"locator has {len(roots)} roots in range, expected {L}")
    xs = [pow(alpha, e, q) for e in roots]
    mat = [[pow(x, i, q) for x in xs] for i in range(L)]
    shifted = _solve_linear(mat, seq[:L], q)  # c_j * X_j^(-T)
    coeffs = [c * pow(x, T, q) % q for c, x in zip(shifted, xs)]
    poly = {e: c for e, c in zip(roots, coeffs) if c}
    # confirm against every provided evaluation
    for i, v in enumerate(seq):
        ell = i - T
        acc = 0
        for e, c in poly.items():
            acc = (acc + c * pow(alpha, (e * ell) % (q - 1), q)) % q
        if acc != v:
            raise SparsityExceeded("evaluations inconsistent with any sparse fit")
    return poly


def evaluate_sparse(poly: dict[int, int], ell: int, field: PrimeField) -> int:
    """E(alpha^ell) for a sparse polynomial given as {exponent: coefficient}."""
    q, alpha = field.q, field.alpha
    acc = 0
    for e, c in poly.items():
        acc = (acc + c * pow(alpha, (e * ell) % (q - 1), q)) % q
    return acc


# -- GF(3^e) and the ternary erasure code ----------------------------------


def _gf3_poly_mul(a, b, e, red):
    """Multiply digit tuples mod the monic irreducible with low coeffs `red`."""
    prod = [0] * (2 * e - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % 3
    for d in range(2 * e - 2, e - 1, -1):
        c = prod[d]
        if c:
            prod[d] = 0
            for j, rj in enumerate(red):
                prod[d - e + j] = (prod[d - e + j] - c * rj) % 3
    return tuple(prod[:e])


class TernaryField:
    """GF(3^e) with log/antilog tables over a primitive element."""

    def __init__(self, e: int):
        self.e = e
        self.size = 3 ** e
        self.red = self._find_tables(e)

    def _find_tables(self, e):
        # scan monic degree-e polys x^e + r_{e-1}x^{e-1} + ... + r_0 for one
        # whose residue class of x is primitive; build tables from its powers
        order = self.size - 1
        for code in range(self.size):
            red = tuple((code // 3 ** i) % 3 for i in range(e))
            x = tuple(1 if i == 1 else 0 for i in range(e)) if e > 1 else (
                (-red[0]) % 3,)
            elem = tuple(1 if i == 0 else 0 for i in range(e))
            antilog = []
            seen = set()
            ok = True
            for _ in range(order):
                antilog.append(elem)
                if elem in seen:
                    ok = False
                    break
                seen.add(elem)
                elem = _gf3_poly_mul(elem, x, e, red)
            if ok and elem == antilog[0] and len(seen) == order and all(
                    any(d for d in a) for a in antilog):
                self.antilog = [self._pack(a) for a in antilog]
                self.log = {v: i for i, v in enumerate(self.antilog)}
                return red
        raise RuntimeError("no primitive polynomial found")  # unreachable

    @staticmethod
    def _pack(digits):
        return sum(d * 3 ** i for i, d in enumerate(digits))

    def digits(self, v, width=None):
        w = width or self.e
        return [(v // 3 ** i) % 3 for i in range(w)]

    def add(self, a, b):
        return self._pack([(x + y) % 3 for x, y in zip(self.digits(a), self.digits(b))])

    def sub(self, a, b):
        return self._pack([(x - y) % 3 for x, y in zip(self.digits(a), self.digits(b))])

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self.antilog[(self.log[a] + self.log[b]) % (self.size - 1)]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError
        return self.antilog[(-self.log[a]) % (self.size - 1)]


@lru_cache(maxsize=None)
def _ternary_field(e: int) -> TernaryField:
    return TernaryField(e)


def ternary_field_params(msg_digits: int, n_era: int) -> int:
    """Smallest extension degree e fitting message symbols plus n_era parity."""
    e = 1
    while 3 ** e - 1 < -(-msg_digits // e) + n_era:
        e += 1
    return e


def _rs_interpolate_eval(F: TernaryField, pts, targets):
    """Lagrange: from (x, y) pairs, evaluate the interpolant at targets."""
    out = []
    for xt in targets:
        acc = 0
        for i, (xi, yi) in enumerate(pts):
            num, den = yi, 1
            for j, (xj, _) in enumerate(pts):
                if i == j:
                    continue
                num = F.mul(num, F.sub(xt, xj))
                den = F.mul(den, F.sub(xi, xj))
            acc = F.add(acc, F.mul(num, F.inv(den)))
        out.append(acc)
    return out


def ternary_erasure_encode(msg, n_era: int) -> list[int]:
    """Systematic erasure code over {0,1,2}: message digits verbatim, then
    n_era extension-field check symbols spelled out as ternary digits.

    Any n_era erased digit positions remain correctable, since each erased
    digit costs at most one field symbol.
    """
    msg = list(msg)
    if any(d not in (0, 1, 2) for d in msg):
        raise ValueError("message digits must be ternary")
    if n_era == 0:
        return msg
    e = ternary_field_params(len(msg), n_era)
    F = _ternary_field(e)
    K = -(-len(msg) // e)
    padded = msg + [0] * (K * e - len(msg))
    syms = [F._pack(padded[i * e:(i + 1) * e]) for i in range(K)]
    xs = [F.antilog[i] for i in range(K + n_era)]  # distinct nonzero points
    pts = list(zip(xs[:K], syms))
    parity = _rs_interpolate_eval(F, pts, xs[K:])
    out = msg[:]
    for p in parity:
        out.extend(F.digits(p))
    return out


def ternary_erasure_decode(word, msg_len: int, n_era: int) -> list[int]:
    """Recover the message from a codeword with erased digits marked None."""
    word = list(word)
    if n_era == 0:
        if any(d is None for d in word):
            raise EraseBudgetExceeded("erasures present but no redundancy")
        return word[:msg_len]
    e = ternary_field_params(msg_len, n_era)
    F = _ternary_field(e)
    K = -(-msg_len // e)
    if len(word) != msg_len + n_era * e:
        raise ValueError("codeword length inconsistent with parameters")
    padded = word[:msg_len] + [0] * (K * e - msg_len) + word[msg_len:]
    xs = [F.antilog[i] for i in range(K + n_era)]
    known = []
    for i in range(K + n_era):
        chunk = padded[i * e:(i + 1) * e]
        if all(d is not None for d in chunk):
            known.append((xs[i], F._pack(chunk)))
    if len(known) < K:
        raise EraseBudgetExceeded(
            f"only {len(known)} intact symbols, need {K}")
    msg_syms = _rs_interpolate_eval(F, known[:K], xs[:K])
    digits = []
    for s in msg_syms:
        digits.extend(F.digits(s))
    return digits[:msg_len]


# -- binary block codes of distance 2t+1 -----------------------------------


class RepetitionCode:
    """(2t+1)-fold repetition: the trivial distance-(2t+1) systematic code."""

    def __init__(self, msg_len: int, t: int):
        self.msg_len = msg_len
        self.t = t
        self.code_len = msg_len * (2 * t + 1)

    def encode(self, bits):
        bits = list(bits)
        if len(bits) != self.msg_len:
            raise ValueError("message length mismatch")
        return bits + bits * (2 * self.t)

    def decode(self, received):
        received = list(received)
        if len(received) != self.code_len:
            raise ValueError("codeword length mismatch")
        reps = 2 * self.t + 1
        out = []
        for i in range(self.msg_len):
            votes = sum(received[i + j * self.msg_len] for j in range(reps))
            out.append(1 if 2 * votes > reps else 0)
        return out


class _GF2m:
    """GF(2^m) log/antilog tables over a primitive polynomial."""

    def __init__(self, m: int):
        self.m = m
        self.size = 1 << m
        for poly in range(self.size | 1, self.size << 1, 2):
            antilog = []
            x = 1
            ok = True
            for i in range(self.size - 1):
                antilog.append(x)
                x <<= 1
                if x & self.size:
                    x ^= poly
                if x == 1 and i != self.size - 2:
                    ok = False
                    break
            if ok and x == 1 and len(set(antilog)) == self.size - 1:
                self.antilog = antilog
                self.log = {v: i for i, v in enumerate(antilog)}
                self.poly = poly
                return
        raise RuntimeError("no primitive polynomial found")  # unreachable

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self.antilog[(self.log[a] + self.log[b]) % (self.size - 1)]

    def inv(self, a):
        return self.antilog[(-self.log[a]) % (self.size - 1)]

    def pow_alpha(self, e):
        return self.antilog[e % (self.size - 1)]


def _poly_mul_gf2m(f, a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] ^= f.mul(ai, bj)
    return out


class BCHCode:
    """Shortened narrow-sense BCH code with design distance 2t+1, systematic.

    Codeword layout: message bits first, then deg(g) parity bits; bit i of the
    parity block is the coefficient of x^i, message bit j sits at degree
    deg(g) + j of the code polynomial.
    """

    def __init__(self, msg_len: int, t: int):
        self.msg_len = msg_len
        self.t = t
        m = 2
        while True:
            m += 1
            if (1 << m) - 1 - m * t < msg_len:
                continue
            f = _GF2m(m)
            g = self._generator(f, t)
            if (1 << m) - 1 - (len(g) - 1) >= msg_len:
                self.f = f
                self.g = g
                self.n_parity = len(g) - 1
                self.code_len = msg_len + self.n_parity
                return

    @staticmethod
    def _generator(f, t):
        cosets = []
        covered = set()
        for i in range(1, 2 * t + 1):
            if i in covered:
                continue
            coset = set()
            j = i
            while j not in coset:
                coset.add(j)
                j = (j * 2) % (f.size - 1)
            covered |= coset
            cosets.append(coset)
        g = [1]
        for coset in cosets:
            minpoly = [1]
            for j in coset:
                minpoly = _poly_mul_gf2m(f, minpoly, [f.pow_alpha(j), 1])
            assert all(c in (0, 1) for c in minpoly)
            g = _poly_mul_gf2m(f, g, minpoly)
        assert all(c in (0, 1) for c in g)
        return g

    def _degree_of(self, idx):
        # bit index -> degree in the code polynomial
        if idx < self.msg_len:
            return self.n_parity + idx
        return idx - self.msg_len

    def encode(self, bits):
        bits = list(bits)
        if len(bits) != self.msg_len:
            raise ValueError("message length mismatch")
        r = len(self.g) - 1
        rem = [0] * r
        # synthetic division of msg(x) * x^r by g, msb first
        for b in reversed(bits):
            feedback = rem[-1] ^ b
            rem = [feedback if self.g[0] and i == 0 else
                   (rem[i - 1] ^ (self.g[i] and feedback)) for i in range(r)]
        return bits + rem

    def decode(self, received):
        received = list(received)
        if len(received) != self.code_len:
            raise ValueError("codeword length mismatch")
        f, t = self.f, self.t
        synd = []
        for i in range(1, 2 * t + 1):
            s = 0
            for idx, bit in enumerate(received):
                if bit:
                    s ^= f.pow_alpha(self._degree_of(idx) * i)
            synd.append(s)
        if all(s == 0 for s in synd):
            return received[:self.msg_len]
        lam = self._bm_gf2(synd)
        L = len(lam) - 1
        if L > t:
            raise ValueError("more errors than the design distance allows")
        fixed = received[:]
        nroots = 0
        for idx in range(self.code_len):
            x = f.pow_alpha(-self._degree_of(idx))
            acc = 0
            for c in reversed(lam):
                acc = f.mul(acc, x) ^ c
            if acc == 0:
                fixed[idx] ^= 1
                nroots += 1
        if nroots != L:
            raise ValueError("error locator failed to split over the block")
        for i in range(1, 2 * t + 1):
            s = 0
            for idx, bit in enumerate(fixed):
                if bit:
                    s ^= f.pow_alpha(self._degree_of(idx) * i)
            if s != 0:
                raise ValueError("correction did not cancel the syndromes")
        return fixed[:self.msg_len]

    def _bm_gf2(self, synd):
        f = self.f
        C, B = [1], [1]
        L, m, b = 0, 1, 1
        for i, s in enumerate(synd):
            d = s
            for j in range(1, L + 1):
                if j < len(C):
                    d ^= f.mul(C[j], synd[i - j])
            if d == 0:
                m += 1
            elif 2 * L <= i:
                T = C[:]
                coef = f.mul(d, f.inv(b))
                C = C + [0] * max(0, len(B) + m - len(C))
                for j, bj in enumerate(B):
                    C[j + m] ^= f.mul(coef, bj)
                L, B, b, m = i + 1 - L, T, d, 1
            else:
                coef = f.mul(d, f.inv(b))
                C = C + [0] * max(0, len(B) + m - len(C))
                for j, bj in enumerate(B):
                    C[j + m] ^= f.mul(coef, bj)
                m += 1
        return C[:L + 1]


@lru_cache(maxsize=None)
def bblock_code(msg_len: int, t: int, kind: str = "bch"):
    if t == 0 or kind == "identity":
        # degenerate: no protection requested
        return RepetitionCode(msg_len, 0)
    if kind == "bch":
        return BCHCode(msg_len, t)
    if kind == "repetition":
        return RepetitionCode(msg_len, t)
    raise ValueError(f"unknown block-code kind {kind!r}")


def bblock_encode(bits, t: int, kind: str = "bch"):
    return bblock_code(len(bits), t, kind).encode(list(bits))


def bblock_decode(received, msg_len: int, t: int, kind: str = "bch"):
    return bblock_code(msg_len, t, kind).decode(list(received))
