"""Defining sets, exhaustive complete-weight-enumerator computation, symbol
counts, weight distributions, and the secret-sharing ratio test."""

from __future__ import annotations

import math
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional

import numpy as np

from .charsum import a_sum, b_sum
from .cyclo import check_odd_prime
from .gfield import FieldContext, legendre, linearized_solve

_BLOCK = 512


@dataclass(frozen=True)
class CodeSpec:
    p: int
    m: int
    alpha: int
    a: int
    variant: str = "plain"

    def __post_init__(self):
        check_odd_prime(self.p)
        if self.m < 2:
            raise ValueError("m must be at least 2")
        if self.alpha < 0:
            raise ValueError("alpha must be a natural number")
        if not 0 <= self.a < self.p:
            raise ValueError("a must be a residue mod p")
        if self.variant not in ("plain", "bar"):
            raise ValueError("variant must be 'plain' or 'bar'")

    @property
    def e(self) -> int:
        return 2 * self.m

    @property
    def d(self) -> int:
        return math.gcd(self.alpha, self.e) if self.alpha else self.e

    def to_json(self) -> dict:
        return {"p": self.p, "m": self.m, "alpha": self.alpha, "a": self.a, "variant": self.variant}


@dataclass(frozen=True)
class DefiningSet:
    a: int
    elements: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class CompleteWeightEnumerator:
    n: int
    terms: Mapping[tuple[int, ...], int]

    @property
    def p(self) -> int:
        return len(next(iter(self.terms)))

    def total(self) -> int:
        return sum(self.terms.values())

    def dimension(self) -> int:
        """k with |code| = p^k, from the multiplicity of the zero codeword."""
        zero = (self.n,) + (0,) * (self.p - 1)
        z = self.terms.get(zero, 0)
        if z <= 0:
            raise ValueError("enumerator has no zero codeword")
        return _int_log(self.total(), self.p) - _int_log(z, self.p)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.terms.items())

    def to_json(self, spec: Optional[CodeSpec] = None) -> dict:
        out: dict = {}
        if spec is not None:
            out.update(
                {"p": spec.p, "e": spec.e, "alpha": spec.alpha, "a": spec.a, "variant": spec.variant}
            )
        out["n"] = self.n
        out["k"] = self.dimension()
        out["terms"] = [
            {"composition": list(comp), "count": cnt} for comp, cnt in self.sorted_terms()
        ]
        return out


@dataclass(frozen=True)
class WeightDistribution:
    n: int
    k: int
    entries: Mapping[int, int]

    def nonzero_weights(self) -> list[int]:
        return sorted(w for w, c in self.entries.items() if w > 0 and c > 0)

    def minimum_distance(self) -> int:
        return self.nonzero_weights()[0]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "entries": [{"weight": w, "count": c} for w, c in sorted(self.entries.items())],
        }


def _int_log(n: int, p: int) -> int:
    t = 0
    while n > 1:
        if n % p:
            raise ValueError(f"{n} is not a power of {p}")
        n //= p
        t += 1
    return t


# ---------------------------------------------------------------------------


def defining_set(ctx: FieldContext, alpha: int, a: int) -> DefiningSet:
    """Nonzero x with Tr(x^(p^alpha+1)) = a, in field enumeration order."""
    _, pt = ctx.power_tables(alpha)
    idx = np.nonzero(pt == a % ctx.p)[0]
    idx = idx[idx != 0]
    return DefiningSet(a % ctx.p, tuple(int(v) for v in idx))


def set_size_closed(spec: CodeSpec) -> int:
    """Code length from the closed-form A(a): n_a = p^(e-1) + A(a)/p, with the
    zero element removed when a = 0."""
    p, m, d, a = spec.p, spec.m, spec.d, spec.a
    if spec.e % spec.d != 0 or (spec.e // spec.d) % 2 != 0 or spec.m % spec.d != 0:
        raise ValueError("closed-form size needs e/d even")
    md = m // d
    height = m + d if md % 2 == 0 else m
    a_val = -(p - 1) * p**height if a == 0 else p**height
    n_a = p ** (spec.e - 1) + a_val // p
    return n_a - 1 if a == 0 else n_a


# ---------------------------------------------------------------------------
# symbol counts N_b(a, c)


def symbol_count_direct(ctx: FieldContext, alpha: int, a: int, b: int, c: int) -> int:
    if b == 0:
        raise ValueError("b must be nonzero")
    _, pt = ctx.power_tables(alpha)
    tb = ctx.trace_mul_table(b)
    return int(np.count_nonzero((pt == a % ctx.p) & (tb == c % ctx.p)))


def symbol_count_from_sums(ctx: FieldContext, alpha: int, a: int, b: int, c: int) -> int:
    p = ctx.p
    a_val = a_sum(ctx, alpha, a).rational
    b_val = b_sum(ctx, alpha, a, c, b).rational
    num = p**ctx.e + a_val + b_val
    if num % (p * p):
        raise AssertionError("symbol count reconstruction is not an integer")
    return num // (p * p)


def symbol_count_piecewise(ctx: FieldContext, alpha: int, a: int, b: int, c: int) -> int:
    """Fully resolved piecewise symbol count, dispatching on a = 0 and m/d parity."""
    if b == 0:
        raise ValueError("b must be nonzero")
    p = ctx.p
    a %= p
    c %= p
    d = math.gcd(alpha, ctx.e) if alpha else ctx.e
    if ctx.e % 2 or ctx.e % d or (ctx.e // d) % 2 or (ctx.e // 2) % d:
        raise ValueError("piecewise symbol counts need e = 2m and e/d even")
    m = ctx.e // 2
    even = (m // d) % 2 == 0
    base = p ** (ctx.e - 2)
    sol = linearized_solve(ctx, alpha, b)
    if even and not sol.solvable:
        if a == 0:
            return base - (p - 1) * p ** (m + d - 2)
        return base + p ** (m + d - 2)
    h = m + d - 1 if even else m - 1  # exponent of the solvable-case correction
    t = ctx.trace_of(ctx.power_map(alpha, sol.particular))
    if a == 0 and c == 0:
        return base - (p - 1) * p**h if t == 0 else base
    if a == 0:
        return base if t == 0 else base - p**h
    if c == 0:
        return base + p**h if t == 0 else base - p**h * legendre(-a * t, p)
    crit = (c * c * pow(4 * a % p, p - 2, p)) % p
    if t == 0 or t == crit:
        return base
    return base - p**h * legendre(c * c - 4 * a * t, p)


def symbol_count(ctx: FieldContext, alpha: int, a: int, b: int, c: int, verify: bool = False) -> int:
    """N_b(a, c) over all of F_q (including x = 0 when it qualifies)."""
    value = symbol_count_piecewise(ctx, alpha, a, b, c)
    if verify:
        direct = symbol_count_direct(ctx, alpha, a, b, c)
        via_sums = symbol_count_from_sums(ctx, alpha, a, b, c)
        if not (value == direct == via_sums):
            raise AssertionError(
                f"symbol count mismatch: piecewise {value}, direct {direct}, sums {via_sums}"
            )
    return value


# ---------------------------------------------------------------------------
# exhaustive enumeration


def _enumerate_range(ctx: FieldContext, log_d: np.ndarray, lo: int, hi: int, shift: int = 0):
    """Compositions of the codewords of x in [lo, hi) over nonzero field elements."""
    p, q = ctx.p, ctx.q
    terms: Counter = Counter()
    trace_exp = ctx.trace_exp.astype(np.int8)
    for start in range(lo, hi, _BLOCK):
        stop = min(start + _BLOCK, hi)
        logs = ctx.log[start:stop]
        idx = (logs[:, None] + log_d[None, :]) % (q - 1)
        sym = trace_exp[idx]
        if shift:
            sym = (sym + shift) % p
        comps = np.stack([(sym == s).sum(axis=1) for s in range(p)], axis=1)
        for row in comps:
            terms[tuple(int(v) for v in row)] += 1
    return terms


def enumerate_cwe(ctx: FieldContext, spec: CodeSpec, threads: int = 1) -> CompleteWeightEnumerator:
    """Complete weight enumerator by exhaustive evaluation of every codeword.

    The bar variant is computed by the index-shift lift of the plain enumerator.
    """
    plain = _enumerate_plain(ctx, spec, threads)
    if spec.variant == "bar":
        return lift_bar(plain, spec.p)
    return plain


def _enumerate_plain(ctx: FieldContext, spec: CodeSpec, threads: int = 1) -> CompleteWeightEnumerator:
    dset = defining_set(ctx, spec.alpha, spec.a)
    n = len(dset)
    p, q = ctx.p, ctx.q
    log_d = ctx.log[np.array(dset.elements, dtype=np.int64)]
    terms: Counter = Counter()
    if threads <= 1:
        terms = _enumerate_range(ctx, log_d, 1, q)
    else:
        bounds = np.linspace(1, q, threads + 1, dtype=np.int64)
        with ThreadPoolExecutor(max_workers=threads) as pool:
            futures = [
                pool.submit(_enumerate_range, ctx, log_d, int(bounds[i]), int(bounds[i + 1]))
                for i in range(threads)
            ]
            for fut in futures:
                terms.update(fut.result())
    terms[(n,) + (0,) * (p - 1)] += 1  # the zero codeword (x = 0)
    return CompleteWeightEnumerator(n, dict(terms))


def enumerate_bar_direct(ctx: FieldContext, spec: CodeSpec) -> CompleteWeightEnumerator:
    """Direct enumeration of the lifted code over (x, u) pairs; oracle for lift_bar."""
    dset = defining_set(ctx, spec.alpha, spec.a)
    n = len(dset)
    p, q = ctx.p, ctx.q
    log_d = ctx.log[np.array(dset.elements, dtype=np.int64)]
    terms: Counter = Counter()
    for u in range(p):
        terms.update(_enumerate_range(ctx, log_d, 1, q, shift=u))
        comp = [0] * p
        comp[u % p] = n
        terms[tuple(comp)] += 1  # x = 0 gives the constant-u word
    return CompleteWeightEnumerator(n, dict(terms))


def lift_bar(cwe: CompleteWeightEnumerator, p: int) -> CompleteWeightEnumerator:
    """Add every constant u to every codeword: cyclic index shift of compositions."""
    terms: Counter = Counter()
    for comp, cnt in cwe.terms.items():
        for u in range(p):
            shifted = tuple(comp[(i - u) % p] for i in range(p))
            terms[shifted] += cnt
    return CompleteWeightEnumerator(cwe.n, dict(terms))


def weight_distribution(cwe: CompleteWeightEnumerator) -> WeightDistribution:
    entries: Counter = Counter()
    for comp, cnt in cwe.terms.items():
        entries[cwe.n - comp[0]] += cnt
    k = cwe.dimension()
    # collapse repeated codewords: entries currently count enumeration preimages
    mult = cwe.total() // cwe.p**k
    dist = {}
    for w, c in entries.items():
        if c % mult:
            raise AssertionError("weight class size is not a multiple of the preimage count")
        dist[w] = c // mult
    return WeightDistribution(cwe.n, k, dist)


def power_moments_check(wd: WeightDistribution, p: int) -> bool:
    """First two power-moment identities for a code with trivial dual distance."""
    total = sum(c for w, c in wd.entries.items() if w > 0)
    first = total == p**wd.k - 1
    weighted = sum(w * c for w, c in wd.entries.items())
    second = weighted == p ** (wd.k - 1) * (p - 1) * wd.n
    return first and second


def wmin_wmax(wd: WeightDistribution, p: int) -> tuple[Fraction, bool]:
    """Minimum/maximum nonzero-weight ratio and the secret-sharing criterion."""
    weights = wd.nonzero_weights()
    if not weights:
        raise ValueError("distribution has no nonzero weight")
    ratio = Fraction(weights[0], weights[-1])
    return ratio, ratio > Fraction(p - 1, p)
