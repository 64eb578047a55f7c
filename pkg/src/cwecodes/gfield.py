"""Arithmetic in F_p and F_{p^e}: trace, quadratic characters, the power map
x -> x^(p^alpha + 1), and linear-algebra solving of additive polynomials.

Extension elements are encoded as integers in [0, p^e): digit j in base p is
the coordinate of X^j in the power basis of the modulus.  Enumerating codes by
increasing integer value therefore enumerates coefficient tuples
lexicographically with the constant term varying fastest.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

import numpy as np
from sympy import factorint

from .cyclo import check_odd_prime

# ---------------------------------------------------------------------------
# dense polynomial helpers over F_p (coefficient lists, constant term first)


def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mulmod(p: int, a: list[int], b: list[int], f: list[int]) -> list[int]:
    e = len(f) - 1
    res = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            if bj:
                res[i + j] = (res[i + j] + ai * bj) % p
    while len(res) > e:
        top = res.pop()
        if top:
            base = len(res) - e
            for k in range(e):
                res[base + k] = (res[base + k] - top * f[k]) % p
    res += [0] * (e - len(res))
    return res


def _poly_powmod(p: int, a: list[int], n: int, f: list[int]) -> list[int]:
    e = len(f) - 1
    result = [1] + [0] * (e - 1)
    base = list(a)
    while n:
        if n & 1:
            result = _poly_mulmod(p, result, base, f)
        base = _poly_mulmod(p, base, base, f)
        n >>= 1
    return result


def _poly_gcd(p: int, a: list[int], b: list[int]) -> list[int]:
    a, b = _poly_trim(list(a)), _poly_trim(list(b))
    while b:
        inv = pow(b[-1], p - 2, p)
        # a mod b
        a = list(a)
        while len(a) >= len(b):
            coef = (a[-1] * inv) % p
            shift = len(a) - len(b)
            if coef:
                for k in range(len(b)):
                    a[shift + k] = (a[shift + k] - coef * b[k]) % p
            a.pop()
            _poly_trim(a)
            if not a:
                break
        a, b = b, _poly_trim(a)
    return a


def is_irreducible(p: int, f: Sequence[int]) -> bool:
    """Irreducibility of a monic polynomial over F_p (coefficients constant first)."""
    f = list(f)
    e = len(f) - 1
    if e < 1 or f[-1] != 1:
        return False
    if e == 1:
        return True
    # X^(p^e) == X mod f
    xq = _poly_powmod(p, [0, 1], p**e, f)
    diff = list(xq)
    diff[1] = (diff[1] - 1) % p
    if _poly_trim(diff):
        return False
    for r in factorint(e):
        xpr = _poly_powmod(p, [0, 1], p ** (e // r), f)
        diff = list(xpr)
        diff[1] = (diff[1] - 1) % p
        g = _poly_gcd(p, diff, f)
        if len(g) != 1:
            return False
    return True


# ---------------------------------------------------------------------------


def legendre(t: int, p: int) -> int:
    """Quadratic residue symbol of t mod p, with 0 at t = 0 mod p."""
    check_odd_prime(p)
    t %= p
    if t == 0:
        return 0
    s = pow(t, (p - 1) // 2, p)
    return 1 if s == 1 else -1


def smallest_primitive_root(p: int) -> int:
    check_odd_prime(p)
    factors = list(factorint(p - 1))
    for g in range(2, p):
        if all(pow(g, (p - 1) // r, p) != 1 for r in factors):
            return g
    raise RuntimeError(f"no primitive root mod {p}")  # unreachable for prime p


@dataclass(frozen=True)
class SolutionSet:
    """Affine solution set particular + span(kernel_basis) of an additive equation."""

    particular: Optional[int]
    kernel_basis: tuple[int, ...]

    @property
    def solvable(self) -> bool:
        return self.particular is not None

    def count(self, p: int) -> int:
        return p ** len(self.kernel_basis) if self.solvable else 0

    def solutions(self, ctx: "FieldContext"):
        """Iterate all solutions; only sensible for small kernels."""
        if not self.solvable:
            return
        k = len(self.kernel_basis)
        for mask in range(ctx.p**k):
            x = self.particular
            rem = mask
            for v in self.kernel_basis:
                c = rem % ctx.p
                rem //= ctx.p
                for _ in range(c):
                    x = ctx.add(x, v)
            yield x


class FieldContext:
    """Immutable description of F_p inside F_{p^e} with exp/log/trace tables."""

    def __init__(self, p: int, e: int, modulus: Optional[Sequence[int]] = None):
        check_odd_prime(p)
        if e < 2:
            raise ValueError(f"extension degree must be at least 2, got {e}")
        self.p = p
        self.e = e
        self.q = p**e
        if modulus is None:
            modulus = _minimal_primitive_modulus(p, e)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != e + 1 or modulus[-1] != 1:
                raise ValueError("modulus override must be monic of degree e")
            if not is_irreducible(p, modulus):
                raise ValueError("modulus override is not irreducible over F_p")
        self.modulus = tuple(modulus)
        self._build_tables()
        self.prime_generator = smallest_primitive_root(p)

    def _build_tables(self) -> None:
        p, e, q = self.p, self.e, self.q
        f = list(self.modulus)
        # exp table by repeated multiplication by X; element code = digits base p
        exp = np.zeros(q - 1, dtype=np.int64)
        cur = [1] + [0] * (e - 1)
        ppow = [p**j for j in range(e)]
        seen_one = 0
        for k in range(q - 1):
            exp[k] = sum(c * w for c, w in zip(cur, ppow))
            # multiply by X mod f
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for j in range(e):
                    cur[j] = (cur[j] - top * f[j]) % p
            if k > 0 and exp[k] == 1:
                seen_one += 1
        if seen_one or sorted(exp.tolist()) != list(range(1, q)):
            raise ValueError("modulus is not primitive: X does not generate F_q*")
        log = np.full(q, -1, dtype=np.int64)
        log[exp] = np.arange(q - 1)
        self.exp = exp
        self.log = log
        # digit matrix and encoding weights
        xs = np.arange(q, dtype=np.int64)
        digits = np.empty((q, e), dtype=np.int64)
        for j in range(e):
            digits[:, j] = (xs // (p**j)) % p
        self._digits = digits
        self._ppow = np.array(ppow, dtype=np.int64)
        self.neg_table = (((p - digits) % p) @ self._ppow).astype(np.int64)
        # trace of basis elements via Frobenius orbits
        tr_basis = []
        for j in range(e):
            bj = p**j
            acc_elt = 0
            s = bj
            for _ in range(e):
                acc_elt = self.add(acc_elt, s)
                s = self.frobenius(s, 1)
            # trace of any element lies in F_p, i.e. its code is a residue < p
            if acc_elt >= p:
                raise RuntimeError("trace of basis element fell outside F_p")
            tr_basis.append(acc_elt)
        tb = np.array(tr_basis, dtype=np.int64)
        self.trace_table = ((digits @ tb) % p).astype(np.int8)
        self.trace_exp = self.trace_table[exp]  # trace of generator powers
        self._power_cache: dict[int, tuple[np.ndarray, np.ndarray]] = {}

    # -- scalar element operations --------------------------------------

    def add(self, x: int, y: int) -> int:
        return int(((self._digits[x] + self._digits[y]) % self.p) @ self._ppow)

    def neg(self, x: int) -> int:
        return int(self.neg_table[x])

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        return int(self.exp[(int(self.log[x]) + int(self.log[y])) % (self.q - 1)])

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("inverse of 0 in F_q")
        return int(self.exp[(-int(self.log[x])) % (self.q - 1)])

    def pow(self, x: int, n: int) -> int:
        if x == 0:
            return 0 if n > 0 else 1
        return int(self.exp[(int(self.log[x]) * n) % (self.q - 1)])

    def frobenius(self, x: int, t: int = 1) -> int:
        """x^(p^t)."""
        return self.pow(x, self.p**t)

    def power_map(self, alpha: int, x: int) -> int:
        """x^(p^alpha + 1)."""
        return self.pow(x, self.p**alpha + 1) if x else 0

    def trace_of(self, x: int) -> int:
        return int(self.trace_table[x])

    def eta(self, x: int) -> int:
        """Quadratic character of F_q, with eta(0) = 0."""
        if x == 0:
            return 0
        return 1 if int(self.log[x]) % 2 == 0 else -1

    def embed_prime(self, c: int) -> int:
        """The element of F_q representing c in F_p."""
        return c % self.p

    def generator(self) -> int:
        """The multiplicative generator X (the modulus is primitive)."""
        return self.p  # digit 1 at position 1

    # -- vectorized helpers ----------------------------------------------

    def mul_array(self, a: int, arr: np.ndarray) -> np.ndarray:
        """Elementwise a * arr for an array of element codes."""
        out = np.zeros_like(arr)
        if a == 0:
            return out
        la = int(self.log[a])
        nz = arr != 0
        out[nz] = self.exp[(la + self.log[arr[nz]]) % (self.q - 1)]
        return out

    def trace_mul_table(self, a: int) -> np.ndarray:
        """Array t with t[x] = Tr(a*x), for all x in F_q."""
        out = np.zeros(self.q, dtype=np.int8)
        if a == 0:
            return out
        la = int(self.log[a])
        out[self.exp] = self.trace_exp[(la + np.arange(self.q - 1)) % (self.q - 1)]
        return out

    def power_tables(self, alpha: int) -> tuple[np.ndarray, np.ndarray]:
        """(P, pt) with P[x] = x^(p^alpha+1) and pt[x] = Tr(P[x]), cached per alpha."""
        cached = self._power_cache.get(alpha)
        if cached is not None:
            return cached
        k = self.p**alpha + 1
        P = np.zeros(self.q, dtype=np.int64)
        P[self.exp] = self.exp[(np.arange(self.q - 1) * k) % (self.q - 1)]
        pt = self.trace_table[P]
        result = (P, pt.astype(np.int8))
        self._power_cache[alpha] = result
        return result

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "e": self.e,
            "modulus": list(self.modulus),
            "generator_order": self.q - 1,
        }


def _minimal_primitive_modulus(p: int, e: int) -> tuple[int, ...]:
    """Lexicographically smallest (constant term first) monic primitive polynomial."""
    q = p**e
    factors = list(factorint(q - 1))
    for k in range(q):
        # digits of k base p, most significant digit = constant term, so that
        # increasing k walks coefficient tuples in lexicographic order
        coeffs = []
        rem = k
        for j in range(e):
            coeffs.append(rem // p ** (e - 1 - j) % p)
        f = coeffs + [1]
        if f[0] == 0:
            continue  # X divides f
        if not is_irreducible(p, f):
            continue
        x = [0, 1]
        one = [1] + [0] * (e - 1)
        if _poly_powmod(p, x, q - 1, f) != one:
            continue
        if any(_poly_powmod(p, x, (q - 1) // r, f) == one for r in factors):
            continue
        return tuple(f)
    raise RuntimeError(f"no primitive polynomial of degree {e} over F_{p}")  # unreachable


def build_field(p: int, e: int, modulus_override: Optional[Sequence[int]] = None) -> FieldContext:
    return FieldContext(p, e, modulus_override)


@lru_cache(maxsize=None)
def get_field(p: int, e: int) -> FieldContext:
    """Deterministic context with the minimal primitive modulus, cached."""
    return FieldContext(p, e)


def gcd_exponent(ctx: FieldContext, alpha: int) -> int:
    """gcd(p^d + 1, p^e - 1) with d = gcd(alpha, e); checked against the dichotomy."""
    p, e = ctx.p, ctx.e
    d = math.gcd(alpha, e) if alpha else e
    g = math.gcd(p**d + 1, p**e - 1)
    expected = p**d + 1 if (e // d) % 2 == 0 else 2
    if g != expected:
        raise AssertionError(f"gcd dichotomy violated: got {g}, expected {expected}")
    return g


# ---------------------------------------------------------------------------
# additive (linearized) polynomial solving over F_p


def additive_map_matrix(ctx: FieldContext, alpha: int, a: Optional[int] = None) -> list[list[int]]:
    """e x e matrix over F_p of x -> a^(p^alpha) x^(p^(2 alpha)) + a x (a = 1 if None)."""
    p, e = ctx.p, ctx.e
    if a is None:
        a = 1
    afr = ctx.frobenius(a, alpha)
    cols = []
    for j in range(e):
        bj = p**j
        img = ctx.add(ctx.mul(afr, ctx.frobenius(bj, 2 * alpha)), ctx.mul(a, bj))
        cols.append([int(v) for v in ctx._digits[img]])
    # cols[j][i] = coordinate i of image of basis j; matrix rows over i
    return [[cols[j][i] for j in range(e)] for i in range(e)]


def solve_affine_mod_p(
    matrix: list[list[int]], rhs: list[int], p: int
) -> tuple[Optional[list[int]], list[list[int]]]:
    """Solve M v = rhs over F_p; returns (particular or None, kernel basis vectors)."""
    n = len(matrix)
    m = len(matrix[0])
    aug = [list(row) + [rhs[i]] for i, row in enumerate(matrix)]
    pivots: list[int] = []
    r = 0
    for c in range(m):
        piv = next((i for i in range(r, n) if aug[i][c] % p), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = pow(aug[r][c], p - 2, p)
        aug[r] = [(v * inv) % p for v in aug[r]]
        for i in range(n):
            if i != r and aug[i][c] % p:
                coef = aug[i][c]
                aug[i] = [(vi - coef * vr) % p for vi, vr in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == n:
            break
    # consistency
    for i in range(r, n):
        if aug[i][m] % p:
            return None, _kernel_from_rref(aug, pivots, m, p)
    particular = [0] * m
    for i, c in enumerate(pivots):
        particular[c] = aug[i][m] % p
    return particular, _kernel_from_rref(aug, pivots, m, p)


def _kernel_from_rref(aug, pivots, m, p):
    free = [c for c in range(m) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * m
        v[fc] = 1
        for i, c in enumerate(pivots):
            v[c] = (-aug[i][fc]) % p
        basis.append(v)
    return basis


def linearized_solve(ctx: FieldContext, alpha: int, b: int, a: Optional[int] = None) -> SolutionSet:
    """Full affine solution set of a^(p^alpha) X^(p^(2 alpha)) + a X = -b^(p^alpha)."""
    matrix = additive_map_matrix(ctx, alpha, a)
    rhs_elt = ctx.neg(ctx.frobenius(b, alpha))
    rhs = [int(v) for v in ctx._digits[rhs_elt]]
    particular, kernel = solve_affine_mod_p(matrix, rhs, ctx.p)
    encode = lambda v: int(sum(c * ctx._ppow[j] for j, c in enumerate(v)))
    return SolutionSet(
        particular=encode(particular) if particular is not None else None,
        kernel_basis=tuple(encode(v) for v in kernel),
    )


def additive_map_rank(ctx: FieldContext, alpha: int, a: Optional[int] = None) -> int:
    matrix = additive_map_matrix(ctx, alpha, a)
    _, kernel = solve_affine_mod_p(matrix, [0] * ctx.e, ctx.p)
    return ctx.e - len(kernel)
