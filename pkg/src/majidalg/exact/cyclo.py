"""Exact cyclotomic field arithmetic.

Scalars live in cyclotomic fields Q(zeta_N), represented in the power basis
reduced modulo the genuine N-th cyclotomic polynomial (never modulo x^N - 1,
which has zero divisors and would falsify identities such as
1 + zeta + ... + zeta^{N-1} = 0).  Rational coefficients are exact.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

# Reduced fraction with positive denominator; exactly the rational-number
# contract this library relies on.
Rational = Fraction


# ---------------------------------------------------------------------------
# dense integer polynomials, coefficients ascending by degree


def _poly_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _poly_trim(out)


def _poly_divmod_monic(a: list[int], b: list[int]) -> tuple[list[int], list[int]]:
    # b must be monic; division then stays in integer coefficients
    assert b and b[-1] == 1
    a = list(a)
    q = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b):
        c = a[-1]
        if c == 0:
            a.pop()
            continue
        d = len(a) - len(b)
        q[d] = c
        for i, bi in enumerate(b):
            a[d + i] -= c * bi
        a = _poly_trim(a)
    return _poly_trim(q), a


# the same helpers over Fraction coefficients, for field inversion

def _qtrim(p: list[Fraction]) -> list[Fraction]:
    while p and not p[-1]:
        p.pop()
    return p


def _qdivmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b):
        if not a[-1]:
            a.pop()
            continue
        c = a[-1] / b[-1]
        d = len(a) - len(b)
        q[d] = c
        for i, bi in enumerate(b):
            a[d + i] -= c * bi
        _qtrim(a)
    return _qtrim(q), a


def _qsub_mul(a: list[Fraction], q: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    # a - q*b
    out = [Fraction(0)] * max(len(a), len(q) + len(b) - 1 if q and b else 0)
    for i, c in enumerate(a):
        out[i] += c
    for i, qi in enumerate(q):
        if qi:
            for j, bj in enumerate(b):
                out[i + j] -= qi * bj
    return _qtrim(out)


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, ascending by degree.

    Computed by dividing x^n - 1 by the cyclotomic polynomials of the
    proper divisors of n; monic with integer coefficients.
    """
    if n < 1:
        raise ValueError("order must be >= 1")
    if n == 1:
        return (-1, 1)
    num = [0] * (n + 1)
    num[0], num[n] = -1, 1
    for d in _divisors(n):
        if d < n:
            num, rem = _poly_divmod_monic(num, list(cyclotomic_polynomial(d)))
            assert not rem
    return tuple(num)


@lru_cache(maxsize=None)
def _power_basis(n: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """x^k mod Phi_n for 0 <= k < n, as sparse (basis index, coeff) rows."""
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    rows: list[tuple[tuple[int, int], ...]] = []
    cur = [0] * deg
    if deg:
        cur[0] = 1
    for _ in range(n):
        rows.append(tuple((i, c) for i, c in enumerate(cur) if c))
        nxt = [0] + cur[:-1] if deg else []
        lead = cur[-1] if deg else 0
        if lead:
            # x^deg = -(phi - x^deg)
            for i in range(deg):
                nxt[i] -= lead * phi[i]
        cur = nxt
    return tuple(rows)


class Cyclo:
    """Element of the cyclotomic field of order N, reduced mod Phi_N.

    Values are immutable; equality is coefficient equality after embedding
    into a common order via the lcm of the two orders.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: tuple[Fraction, ...]):
        deg = len(cyclotomic_polynomial(order)) - 1
        if len(coeffs) != deg:
            raise ValueError(f"need {deg} coefficients for order {order}")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("Cyclo values are immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, order: int = 1) -> Cyclo:
        deg = len(cyclotomic_polynomial(order)) - 1
        return cls(order, (Fraction(0),) * deg)

    @classmethod
    def one(cls, order: int = 1) -> Cyclo:
        return cls.from_rational(Fraction(1), order)

    @classmethod
    def from_rational(cls, q, order: int = 1) -> Cyclo:
        q = Fraction(q)
        deg = len(cyclotomic_polynomial(order)) - 1
        coeffs = [Fraction(0)] * deg
        if q:
            coeffs[0] = q
        return cls(order, tuple(coeffs))

    @classmethod
    def root(cls, order: int, k: int) -> Cyclo:
        """zeta_order ** k as a reduced element."""
        return cls.from_power_dict(order, {k % order: Fraction(1)})

    @classmethod
    def from_power_dict(cls, order: int, powers: dict[int, Fraction]) -> Cyclo:
        """Build Sum c_k zeta^k with arbitrary integer exponents k."""
        rows = _power_basis(order)
        deg = len(cyclotomic_polynomial(order)) - 1
        acc = [Fraction(0)] * deg
        for k, c in powers.items():
            if not c:
                continue
            for i, ri in rows[k % order]:
                acc[i] += c * ri
        return cls(order, tuple(acc))

    # -- inspection ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and not any(self.coeffs[1:])

    def power_dict(self) -> dict[int, Fraction]:
        """The reduced representation read as exponent -> coefficient."""
        return {i: c for i, c in enumerate(self.coeffs) if c}

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- coercion ------------------------------------------------------------

    def embedded(self, order: int) -> Cyclo:
        """Embed into the cyclotomic field of a multiple order."""
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError(f"{self.order} does not divide {order}")
        step = order // self.order
        return Cyclo.from_power_dict(
            order, {i * step: c for i, c in enumerate(self.coeffs) if c}
        )

    @staticmethod
    def _common(a: Cyclo, b: Cyclo) -> tuple[Cyclo, Cyclo]:
        if a.order == b.order:
            return a, b
        m = a.order * b.order // gcd(a.order, b.order)
        return a.embedded(m), b.embedded(m)

    @staticmethod
    def _promote(x) -> Cyclo:
        if isinstance(x, Cyclo):
            return x
        if isinstance(x, (int, Fraction)):
            return Cyclo.from_rational(x)
        return NotImplemented

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other) -> Cyclo:
        other = Cyclo._promote(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = Cyclo._common(self, other)
        return Cyclo(a.order, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> Cyclo:
        return Cyclo(self.order, tuple(-x for x in self.coeffs))

    def __sub__(self, other) -> Cyclo:
        other = Cyclo._promote(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Cyclo:
        return (-self) + other

    def __mul__(self, other) -> Cyclo:
        other = Cyclo._promote(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = Cyclo._common(self, other)
        acc: dict[int, Fraction] = {}
        for i, x in enumerate(a.coeffs):
            if not x:
                continue
            for j, y in enumerate(b.coeffs):
                if y:
                    k = i + j
                    acc[k] = acc.get(k, Fraction(0)) + x * y
        return Cyclo.from_power_dict(a.order, acc)

    __rmul__ = __mul__

    def times_root(self, k: int) -> Cyclo:
        """Multiply by zeta_order ** k (fast monomial shift)."""
        return Cyclo.from_power_dict(
            self.order, {i + k: c for i, c in enumerate(self.coeffs) if c}
        )

    def inverse(self) -> Cyclo:
        """Exact field inverse; raises ZeroDivisionError on zero."""
        if self.is_zero():
            raise ZeroDivisionError("cyclotomic zero has no inverse")
        # extended Euclid in Q[x] against Phi_N; invariant s_k * self = r_k (mod Phi_N).
        # Phi_N is irreducible, so the gcd is a nonzero constant.
        r0 = [Fraction(c) for c in cyclotomic_polynomial(self.order)]
        r1 = _qtrim([Fraction(c) for c in self.coeffs])
        s0: list[Fraction] = []
        s1 = [Fraction(1)]
        while len(r1) > 1:
            q, r = _qdivmod(r0, r1)
            s = _qsub_mul(s0, q, s1)
            r0, r1, s0, s1 = r1, r, s1, s
        unit = r1[0]
        return Cyclo.from_power_dict(
            self.order, {i: c / unit for i, c in enumerate(s1) if c}
        )

    def __truediv__(self, other) -> Cyclo:
        other = Cyclo._promote(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    # -- comparison / formatting ---------------------------------------------

    def __eq__(self, other) -> bool:
        other = Cyclo._promote(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = Cyclo._common(self, other)
        return a.coeffs == b.coeffs

    __hash__ = None  # cross-order equality makes a consistent hash impractical

    def __repr__(self) -> str:
        if self.is_zero():
            return "Cyclo(0)"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                parts.append(f"{c}*z{self.order}^{i}" if c != 1 else f"z{self.order}^{i}")
        return "Cyclo(" + " + ".join(parts) + ")"

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> Cyclo:
        return cls(int(data["order"]), tuple(Fraction(c) for c in data["coeffs"]))


def root_of_unity(n: int, k: int) -> Cyclo:
    """zeta_n ** (k mod n); root_of_unity(n, 0) is the identity."""
    if n < 1:
        raise ValueError("order must be >= 1")
    return Cyclo.root(n, k)


def cyclo_add(a: Cyclo, b: Cyclo) -> Cyclo:
    return a + b


def cyclo_mul(a: Cyclo, b: Cyclo) -> Cyclo:
    return a * b


def cyclo_inv(a: Cyclo) -> Cyclo:
    return a.inverse()
