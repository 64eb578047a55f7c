"""Exact arithmetic in the ring Z[zeta_p] for an odd prime p.

Elements are stored on the integer basis {1, zeta, ..., zeta^(p-2)}.  The
relation 1 + zeta + ... + zeta^(p-1) = 0 is folded in during canonicalization,
so two elements are equal iff their coefficient tuples are equal.  Coefficients
are arbitrary-precision Python ints and nothing is ever embedded into
floating-point complex numbers.
"""

from __future__ import annotations

from typing import Optional, Sequence

from sympy import isprime


def check_odd_prime(p: int) -> None:
    if p < 3 or p % 2 == 0 or not isprime(p):
        raise ValueError(f"expected an odd prime, got {p}")


class CyclotomicInteger:
    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs: Sequence[int]):
        check_odd_prime(p)
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != p - 1:
            raise ValueError(f"need {p - 1} basis coefficients, got {len(coeffs)}")
        self.p = p
        self.coeffs = coeffs

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, p: int) -> "CyclotomicInteger":
        return cls(p, (0,) * (p - 1))

    @classmethod
    def integer(cls, p: int, n: int) -> "CyclotomicInteger":
        return cls(p, (n,) + (0,) * (p - 2))

    @classmethod
    def from_exponent_counts(cls, p: int, raw: Sequence[int]) -> "CyclotomicInteger":
        """Canonicalize a length-p vector of coefficients indexed by exponent mod p."""
        check_odd_prime(p)
        raw = [int(c) for c in raw]
        if len(raw) != p:
            raise ValueError(f"need {p} raw coefficients, got {len(raw)}")
        top = raw[p - 1]
        return cls(p, tuple(raw[i] - top for i in range(p - 1)))

    # -- ring operations ----------------------------------------------

    def _same_ring(self, other: "CyclotomicInteger") -> None:
        if self.p != other.p:
            raise ValueError(f"mixed roots of unity: p={self.p} vs p={other.p}")

    def __add__(self, other: "CyclotomicInteger") -> "CyclotomicInteger":
        self._same_ring(other)
        return CyclotomicInteger(self.p, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "CyclotomicInteger") -> "CyclotomicInteger":
        self._same_ring(other)
        return CyclotomicInteger(self.p, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "CyclotomicInteger":
        return CyclotomicInteger(self.p, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return CyclotomicInteger(self.p, tuple(other * a for a in self.coeffs))
        self._same_ring(other)
        p = self.p
        raw = [0] * p
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    raw[(i + j) % p] += a * b
        return CyclotomicInteger.from_exponent_counts(p, raw)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CyclotomicInteger)
            and self.p == other.p
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.p, self.coeffs))

    def __repr__(self) -> str:
        return f"CyclotomicInteger(p={self.p}, coeffs={self.coeffs})"

    # -- queries --------------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def as_rational_integer(self) -> Optional[int]:
        """The value as an ordinary integer, or None if it is not one."""
        if any(c != 0 for c in self.coeffs[1:]):
            return None
        return self.coeffs[0]

    def to_json(self) -> dict:
        return {"p": self.p, "coeffs": list(self.coeffs)}


def canonicalize(p: int, raw: Sequence[int]) -> CyclotomicInteger:
    return CyclotomicInteger.from_exponent_counts(p, raw)


def root_power(p: int, k: int) -> CyclotomicInteger:
    """zeta_p^k in canonical form (k reduced mod p)."""
    check_odd_prime(p)
    raw = [0] * p
    raw[k % p] = 1
    return CyclotomicInteger.from_exponent_counts(p, raw)
