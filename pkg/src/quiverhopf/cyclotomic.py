"""Exact arithmetic in the cyclotomic field Q(zeta_L).

An element is a residue modulo the L-th cyclotomic polynomial Phi_L.  It is
stored as an integer numerator vector of length deg Phi_L = phi(L) over a
single positive denominator, normalized so the gcd of all entries and the
denominator is 1.  The representation is canonical: two elements are equal
exactly when their stored data coincide, so zero tests (and hence the ideal
membership tests built on top of this field) are exact.  Keeping the
denominator common makes the ring operations pure integer arithmetic.

All values taking part in one computation must share a single conductor L.
Mixing conductors raises :class:`ConductorError` instead of silently
embedding into a larger field; an explicit embedding is available through
:meth:`Cyc.to_conductor`.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Union

RationalLike = Union[int, Fraction]


class ConductorError(ValueError):
    """Operands live in cyclotomic fields with different conductors."""


def _poly_divide_exact(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials (low degree first)."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for top in range(len(num) - 1, len(den) - 2, -1):
        shift = top - (len(den) - 1)
        c = num[top]
        if c == 0:
            continue
        q, r = divmod(c, den[-1])
        if r:
            raise ArithmeticError("division is not exact")
        out[shift] = q
        for i, d in enumerate(den):
            num[shift + i] -= q * d
    if any(num):
        raise ArithmeticError("division is not exact")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(L: int) -> tuple[int, ...]:
    """Coefficients of Phi_L over Z, low degree first, monic."""
    if L < 1:
        raise ValueError("conductor must be a positive integer")
    # x^L - 1 = prod_{d | L} Phi_d, so divide out all proper divisors.
    poly = [-1] + [0] * (L - 1) + [1]
    for d in range(1, L):
        if L % d == 0:
            poly = _poly_divide_exact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


class Conductor:
    """A fixed conductor L together with reduction data for Phi_L."""

    __slots__ = ("L", "degree", "_phi", "_power_rows", "zero", "one")

    _instances: dict[int, "Conductor"] = {}

    def __new__(cls, L: int) -> "Conductor":
        inst = cls._instances.get(L)
        if inst is not None:
            return inst
        if L < 1:
            raise ValueError("conductor must be a positive integer")
        inst = object.__new__(cls)
        phi = cyclotomic_polynomial(L)
        deg = len(phi) - 1
        inst.L = L
        inst.degree = deg
        inst._phi = phi
        # Rows for x^k mod Phi_L, k >= deg; extended lazily in _power_row.
        inst._power_rows = [tuple(-c for c in phi[:deg])]
        inst.zero = Cyc._make(inst, (0,) * deg, 1)
        inst.one = Cyc._make(inst, (1,) + (0,) * (deg - 1), 1)
        cls._instances[L] = inst
        return inst

    def _power_row(self, k: int) -> tuple[int, ...]:
        """x^k mod Phi_L as an integer row, for k >= degree."""
        deg = self.degree
        rows = self._power_rows
        base = rows[0]
        while len(rows) <= k - deg:
            cur = rows[-1]
            nxt = [0] + list(cur[: deg - 1])
            top = cur[deg - 1]
            if top:
                for i in range(deg):
                    nxt[i] += top * base[i]
            rows.append(tuple(nxt))
        return rows[k - deg]

    def reduce_ints(self, coeffs: list[int]) -> list[int]:
        """Reduce an integer coefficient list of any length modulo Phi_L."""
        deg = self.degree
        out = list(coeffs[:deg]) + [0] * (deg - len(coeffs))
        for k in range(deg, len(coeffs)):
            c = coeffs[k]
            if c:
                row = self._power_row(k)
                for i in range(deg):
                    if row[i]:
                        out[i] += c * row[i]
        return out

    def __repr__(self) -> str:
        return f"Conductor({self.L})"


def _normalized(cond: Conductor, num: list[int], den: int) -> "Cyc":
    if den < 0:
        den = -den
        num = [-n for n in num]
    g = den
    for n in num:
        if n:
            g = math.gcd(g, n)
            if g == 1:
                break
    if g > 1:
        den //= g
        num = [n // g for n in num]
    if den == 1 and not any(num):
        return cond.zero
    return Cyc._make(cond, tuple(num), den)


class Cyc:
    """An element of Q(zeta_L) in canonical residue form."""

    __slots__ = ("conductor", "num", "den", "_hash")

    @staticmethod
    def _make(cond: Conductor, num: tuple[int, ...], den: int) -> "Cyc":
        x = object.__new__(Cyc)
        x.conductor = cond
        x.num = num
        x.den = den
        x._hash = None
        return x

    def __init__(self, L: int, coeffs: Iterable[RationalLike]):
        cond = Conductor(L)
        fracs = [Fraction(c) for c in coeffs]
        den = math.lcm(*[f.denominator for f in fracs]) if fracs else 1
        ints = [int(f * den) for f in fracs]
        ints = cond.reduce_ints(ints)
        norm = _normalized(cond, ints, den)
        self.conductor = cond
        self.num = norm.num
        self.den = norm.den
        self._hash = None

    # -- constructors -------------------------------------------------

    @staticmethod
    def rational(L: int, value: RationalLike) -> "Cyc":
        cond = Conductor(L)
        v = Fraction(value)
        num = [v.numerator] + [0] * (cond.degree - 1)
        return _normalized(cond, num, v.denominator)

    @staticmethod
    def zero(L: int) -> "Cyc":
        return Conductor(L).zero

    @staticmethod
    def one(L: int) -> "Cyc":
        return Conductor(L).one

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        """Coefficient vector over Q (basis 1, zeta, ..., zeta^(phi-1))."""
        return tuple(Fraction(n, self.den) for n in self.num)

    # -- coercion helpers ---------------------------------------------

    def _coerce(self, other) -> Optional["Cyc"]:
        if isinstance(other, Cyc):
            if other.conductor is not self.conductor:
                raise ConductorError(
                    f"mixed conductors {self.conductor.L} and {other.conductor.L}"
                )
            return other
        if isinstance(other, int):
            return Cyc.rational(self.conductor.L, other)
        if isinstance(other, Fraction):
            return Cyc.rational(self.conductor.L, other)
        return None

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        da, db = self.den, o.den
        if da == db:
            num = [a + b for a, b in zip(self.num, o.num)]
            den = da
        else:
            num = [a * db + b * da for a, b in zip(self.num, o.num)]
            den = da * db
        return _normalized(self.conductor, num, den)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        da, db = self.den, o.den
        if da == db:
            num = [a - b for a, b in zip(self.num, o.num)]
            den = da
        else:
            num = [a * db - b * da for a, b in zip(self.num, o.num)]
            den = da * db
        return _normalized(self.conductor, num, den)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return Cyc._make(self.conductor, tuple(-a for a in self.num), self.den)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.num, o.num
        cond = self.conductor
        deg = cond.degree
        if deg == 1:
            return _normalized(cond, [a[0] * b[0]], self.den * o.den)
        prod = [0] * (2 * deg - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        return _normalized(cond, cond.reduce_ints(prod), self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def inv(self) -> "Cyc":
        """Multiplicative inverse, via the extended Euclidean algorithm
        applied to (self, Phi_L) in Q[x]."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta_L)")
        cond = self.conductor
        # r0 = Phi_L, r1 = self; track coefficients against self only.
        r0 = [Fraction(c) for c in cond._phi]
        r1 = [Fraction(n, self.den) for n in self.num]
        while r1 and not r1[-1]:
            r1.pop()
        t0: list[Fraction] = [Fraction(0)]
        t1: list[Fraction] = [Fraction(1)]
        while True:
            if len(r1) == 1:
                c = r1[0]
                return Cyc(cond.L, [t / c for t in t1])
            q, r = _frac_poly_divmod(r0, r1)
            r0, r1 = r1, r
            t0, t1 = t1, _frac_poly_sub(t0, _frac_poly_mul(q, t1))
            if not r1:
                raise ArithmeticError("element not invertible; Phi_L not squarefree?")

    def __pow__(self, n: int) -> "Cyc":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inv() ** (-n)
        result = self.conductor.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- predicates and queries ----------------------------------------

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_one(self) -> bool:
        return self.den == 1 and self.num[0] == 1 and not any(self.num[1:])

    def as_rational(self) -> Optional[Fraction]:
        """The value as a rational number, or None if irrational."""
        if any(self.num[1:]):
            return None
        return Fraction(self.num[0], self.den)

    def multiplicative_order(self) -> Optional[int]:
        """Smallest d >= 1 with self**d == 1, or None if not a root of unity.

        Every root of unity in Q(zeta_L) has order dividing lcm(2, L), so a
        single power test decides the question exactly.
        """
        L = self.conductor.L
        m = L if L % 2 == 0 else 2 * L
        if not (self ** m).is_one():
            return None
        order = m
        for p in _prime_factors(m):
            while order % p == 0 and (self ** (order // p)).is_one():
                order //= p
        return order

    def is_primitive_root(self, m: int) -> bool:
        """True when the multiplicative order equals m exactly."""
        return self.multiplicative_order() == m

    def to_conductor(self, M: int) -> "Cyc":
        """Explicit embedding Q(zeta_L) -> Q(zeta_M) for L | M
        (zeta_L maps to zeta_M**(M/L))."""
        L = self.conductor.L
        if M % L != 0:
            raise ConductorError(f"no embedding: {L} does not divide {M}")
        if M == L:
            return self
        step = M // L
        out = [0] * ((len(self.num) - 1) * step + 1)
        for i, c in enumerate(self.num):
            out[i * step] = c
        cond = Conductor(M)
        return _normalized(cond, cond.reduce_ints(out), self.den)

    # -- hashing / comparison / io --------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Cyc.rational(self.conductor.L, other)
        if not isinstance(other, Cyc):
            return NotImplemented
        if other.conductor is not self.conductor:
            raise ConductorError(
                f"comparing conductors {self.conductor.L} and {other.conductor.L}"
            )
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.conductor.L, self.num, self.den))
            self._hash = h
        return h

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        return f"Cyc({self.conductor.L}, {self})"

    def __str__(self) -> str:
        L = self.conductor.L
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                mono = f"z{L}" if i == 1 else f"z{L}^{i}"
                if c == 1:
                    parts.append(mono)
                elif c == -1:
                    parts.append(f"-{mono}")
                else:
                    parts.append(f"{c}*{mono}")
        if not parts:
            return "0"
        s = parts[0]
        for p in parts[1:]:
            s += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return s

    def to_json(self) -> dict:
        return {
            "conductor": self.conductor.L,
            "coeffs": [str(c) for c in self.coeffs],
        }

    @staticmethod
    def from_json(obj: dict) -> "Cyc":
        return Cyc(obj["conductor"], [Fraction(c) for c in obj["coeffs"]])


def root_of_unity(L: int, k: int) -> Cyc:
    """zeta_L**k in canonical form; root_of_unity(L, 0) == 1."""
    cond = Conductor(L)
    k %= L
    if k < cond.degree:
        vec = [0] * cond.degree
        vec[k] = 1
        return Cyc._make(cond, tuple(vec), 1)
    return _normalized(cond, cond.reduce_ints([0] * k + [1]), 1)


def _prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def _frac_poly_divmod(num: list[Fraction], den: list[Fraction]):
    num = list(num)
    dd = len(den) - 1
    if len(num) < len(den):
        return [], num
    q = [Fraction(0)] * (len(num) - dd)
    inv_lead = 1 / den[-1]
    for top in range(len(num) - 1, dd - 1, -1):
        c = num[top]
        if not c:
            continue
        shift = top - dd
        f = c * inv_lead
        q[shift] = f
        for i, d in enumerate(den):
            num[shift + i] -= f * d
    while num and not num[-1]:
        num.pop()
    return q, num


def _frac_poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    while out and not out[-1]:
        out.pop()
    return out


def _frac_poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, ai in enumerate(a):
        out[i] += ai
    for i, bi in enumerate(b):
        out[i] -= bi
    while out and not out[-1]:
        out.pop()
    return out


def session_conductor(*orders: int) -> int:
    """The least conductor accommodating all requested root orders and -1."""
    return math.lcm(2, *[o for o in orders if o])
