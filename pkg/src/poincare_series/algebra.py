"""Exact univariate arithmetic over the rationals.

Dense polynomials and reduced rational functions in one variable z with
Fraction coefficients, plus a factored representation that keeps the
denominator as a multiset of (1 - z^a) factors so that multisection,
differentiation and cancellation can work factor by factor without ever
expanding a large product.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

Rational = Fraction


def _coeff(value) -> Fraction:
    # exact input only; a float here is always a caller bug
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational coefficient, got {type(value).__name__}")


class Poly:
    """Dense polynomial with Fraction coefficients, ascending exponents.

    The zero polynomial is the empty coefficient tuple; otherwise the last
    stored coefficient is nonzero, so ``degree`` is ``len(coeffs) - 1``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_coeff(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def monomial(cls, exponent: int, coefficient=1) -> "Poly":
        if exponent < 0:
            raise ValueError("negative exponent")
        return cls([0] * exponent + [coefficient])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly([other])
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"

    def __getitem__(self, exponent: int) -> Fraction:
        if 0 <= exponent < len(self.coeffs):
            return self.coeffs[exponent]
        return Fraction(0)

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly([other])
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other if isinstance(other, Poly) else Poly([-_coeff(other)]))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _coeff(other)
            if not c:
                return Poly()
            return Poly([c * a for a in self.coeffs])
        if not isinstance(other, Poly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: "Poly"):
        if not isinstance(other, Poly):
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero")
        rem = list(self.coeffs)
        dd, dv = self.degree, other.degree
        if dd < dv:
            return Poly(), self
        inv_lead = 1 / other.coeffs[-1]
        quot = [Fraction(0)] * (dd - dv + 1)
        for k in range(dd - dv, -1, -1):
            q = rem[k + dv] * inv_lead
            if q:
                quot[k] = q
                for j, c in enumerate(other.coeffs):
                    rem[k + j] -= q * c
        return Poly(quot), Poly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divexact(self, other: "Poly") -> "Poly":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ValueError("inexact polynomial division")
        return q

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def compose_power(self, a: int) -> "Poly":
        """Substitute z -> z^a."""
        if a < 1:
            raise ValueError("compose_power needs a >= 1")
        if a == 1 or self.is_zero():
            return self
        out = [Fraction(0)] * (a * self.degree + 1)
        for i, c in enumerate(self.coeffs):
            out[a * i] = c
        return Poly(out)

    def multisect(self, n: int) -> "Poly":
        """Keep coefficients at exponents divisible by n, compressing z^(n*i) -> z^i."""
        if n < 1:
            raise ValueError("multisect needs n >= 1")
        return Poly(self.coeffs[::n])

    def shift(self, k: int) -> "Poly":
        """Multiply by z^k."""
        if self.is_zero():
            return self
        return Poly((Fraction(0),) * k + self.coeffs)

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        lead = self.coeffs[-1]
        if lead == 1:
            return self
        return Poly([c / lead for c in self.coeffs])

    def to_string(self, var: str = "z") -> str:
        """Human-readable form, ascending exponents: 1 + 4z + 2z^3."""
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                body = str(c)
            else:
                mag = abs(c)
                coeff = "" if mag == 1 else str(mag)
                body = f"{coeff}{var}" if i == 1 else f"{coeff}{var}^{i}"
                if c < 0:
                    body = "-" + body
            parts.append(body)
        text = parts[0]
        for part in parts[1:]:
            text += " - " + part[1:] if part.startswith("-") else " + " + part
        return text


ZERO = Poly()
ONE = Poly([1])


def one_minus_z(a: int) -> Poly:
    """The factor 1 - z^a."""
    if a < 1:
        raise ValueError("factor exponent must be >= 1")
    return Poly([1] + [0] * (a - 1) + [-1])


def q_block(n: int) -> Poly:
    """Geometric block 1 + z + ... + z^(n-1), the cofactor in (1 - z^a)(block at z^a) = 1 - z^(an)."""
    if n < 1:
        raise ValueError("empty block")
    return Poly([1] * n)


def pochhammer(n: int, m: int) -> int:
    """Rising factorial n (n+1) ... (n+m-1); empty product for m = 0."""
    if m < 0:
        raise ValueError("negative length")
    out = 1
    for j in range(m):
        out *= n + j
    return out


def q_shifted_factorial(a_exp: int, q_exp: int, n: int) -> dict:
    """Factor multiset of (1 - z^(a_exp + j*q_exp)) for j = 0..n-1.

    Returned as an exponent -> multiplicity map, directly usable as a
    FactoredRatFun denominator.
    """
    factors: dict[int, int] = {}
    for j in range(n):
        e = a_exp + j * q_exp
        if e < 1:
            raise ValueError(f"degenerate factor (1 - z^{e})")
        factors[e] = factors.get(e, 0) + 1
    return factors


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic GCD by Euclid's algorithm; remainders are made monic each step."""
    a, b = p, q
    while not b.is_zero():
        a, b = b, (a % b).monic()
    return a.monic()


def cross_equal(num1: Poly, den1: Poly, num2: Poly, den2: Poly) -> bool:
    """Equality oracle on unreduced fractions: num1*den2 == num2*den1."""
    return num1 * den2 == num2 * den1


class RatFun:
    """Reduced rational function num/den, den monic and gcd(num, den) = 1.

    The constructor always canonicalizes, so structural equality of two
    RatFun instances is value equality.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=ONE):
        if not isinstance(num, Poly):
            num = Poly([num])
        if not isinstance(den, Poly):
            den = Poly([den])
        if den.is_zero():
            raise ZeroDivisionError("division by zero")
        if num.is_zero():
            self.num, self.den = ZERO, ONE
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = num.divexact(g), den.divexact(g)
        lead = den.coeffs[-1]
        if lead != 1:
            num, den = num * (1 / lead), den.monic()
        self.num, self.den = num, den

    @classmethod
    def from_value(cls, value) -> "RatFun":
        return cls(Poly([value]))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Poly)):
            other = RatFun(other if isinstance(other, Poly) else Poly([other]))
        if not isinstance(other, RatFun):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RatFun({self.num.to_string()!r}, {self.den.to_string()!r})"

    def __neg__(self):
        return RatFun(-self.num, self.den)

    def _coerce(self, other):
        if isinstance(other, RatFun):
            return other
        if isinstance(other, Poly):
            return RatFun(other)
        if isinstance(other, (int, Fraction)):
            return RatFun(Poly([other]))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RatFun(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RatFun(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero")
        return RatFun(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return RatFun(Poly([other])) / self

    def __pow__(self, n: int):
        if n < 0:
            if self.is_zero():
                raise ZeroDivisionError("division by zero")
            return RatFun(self.den, self.num) ** (-n)
        return RatFun(self.num ** n, self.den ** n)

    def derivative(self, order: int = 1) -> "RatFun":
        """Exact derivative d/dz, repeated ``order`` times."""
        if order < 0:
            raise ValueError("negative derivative order")
        f = self
        for _ in range(order):
            f = RatFun(
                f.num.derivative() * f.den - f.num * f.den.derivative(),
                f.den * f.den,
            )
        return f

    def expand(self, n: int) -> list:
        """Power series coefficients at z = 0 through z^n inclusive."""
        if n < 0:
            raise ValueError("negative truncation order")
        d0 = self.den[0]
        if not d0:
            raise ValueError("not a power series at the origin")
        out = []
        dcs = self.den.coeffs
        for m in range(n + 1):
            acc = self.num[m]
            for j in range(1, min(m, len(dcs) - 1) + 1):
                acc -= dcs[j] * out[m - j]
            out.append(acc / d0)
        return out

    def __call__(self, x):
        dv = self.den(x)
        if not dv:
            raise ZeroDivisionError("pole of the rational function")
        return self.num(x) / dv


def normalize(num: Poly, den: Poly) -> RatFun:
    """Canonical reduced form of num/den (monic denominator, GCD removed)."""
    return RatFun(num, den)


def expand(f: RatFun, n: int) -> list:
    return f.expand(n)


class FactoredRatFun:
    """Rational function scale * num / prod over (a, e) of (1 - z^a)^e.

    The factor multiset is never expanded implicitly; products,
    derivatives, series expansion and factor cancellation all act on the
    (a, e) pairs directly. Convert with ``to_ratfun`` when a canonical
    reduced form is wanted.
    """

    __slots__ = ("num", "factors", "scale")

    def __init__(self, num, factors=(), scale=1):
        if not isinstance(num, Poly):
            num = Poly([num])
        merged: dict[int, int] = {}
        items = factors.items() if isinstance(factors, dict) else factors
        for a, e in items:
            if a < 1 or e < 1:
                raise ValueError("factor exponents and multiplicities must be >= 1")
            merged[a] = merged.get(a, 0) + e
        scale = _coeff(scale)
        if not scale:
            raise ValueError("scale must be nonzero")
        self.num = num
        self.factors = tuple(sorted(merged.items()))
        self.scale = scale

    def __repr__(self):
        fac = " ".join(
            f"(1-z^{a})^{e}" if e > 1 else f"(1-z^{a})" for a, e in self.factors
        )
        return f"FactoredRatFun({self.scale} * ({self.num.to_string()}) / {fac or '1'})"

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def factor_dict(self) -> dict:
        return dict(self.factors)

    def den_poly(self) -> Poly:
        out = ONE
        for a, e in self.factors:
            out = out * one_minus_z(a) ** e
        return out

    def value_at_zero(self) -> Fraction:
        # every (1 - z^a) equals 1 at the origin
        return self.scale * self.num[0]

    def __neg__(self):
        return FactoredRatFun(self.num, self.factors, -self.scale)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _coeff(other)
            if not other:
                return FactoredRatFun(ZERO, self.factors)
            return FactoredRatFun(self.num, self.factors, self.scale * other)
        if isinstance(other, Poly):
            return FactoredRatFun(self.num * other, self.factors, self.scale)
        if isinstance(other, FactoredRatFun):
            return FactoredRatFun(
                self.num * other.num,
                self.factors + other.factors,
                self.scale * other.scale,
            )
        return NotImplemented

    __rmul__ = __mul__

    def __add__(self, other):
        if not isinstance(other, FactoredRatFun):
            return NotImplemented
        mine, theirs = self.factor_dict(), other.factor_dict()
        common = {a: max(mine.get(a, 0), theirs.get(a, 0)) for a in {*mine, *theirs}}
        n1 = self.num * self.scale
        for a, e in common.items():
            gap = e - mine.get(a, 0)
            if gap:
                n1 = n1 * one_minus_z(a) ** gap
        n2 = other.num * other.scale
        for a, e in common.items():
            gap = e - theirs.get(a, 0)
            if gap:
                n2 = n2 * one_minus_z(a) ** gap
        return FactoredRatFun(n1 + n2, common)

    def __sub__(self, other):
        return self + (-other)

    def derivative(self) -> "FactoredRatFun":
        """d/dz without leaving the factored representation.

        Each distinct factor's multiplicity rises by one; the numerator
        collects the product rule terms exactly.
        """
        distinct = [a for a, _ in self.factors]
        cof = {}
        for a in distinct:
            p = ONE
            for b in distinct:
                if b != a:
                    p = p * one_minus_z(b)
            cof[a] = p
        full = cof[distinct[0]] * one_minus_z(distinct[0]) if distinct else ONE
        new_num = self.num.derivative() * full
        for a, e in self.factors:
            # d/dz (1 - z^a)^(-e) = e*a*z^(a-1) * (1 - z^a)^(-e-1)
            new_num = new_num + self.num * (e * a) * Poly.monomial(a - 1) * cof[a]
        return FactoredRatFun(
            new_num, {a: e + 1 for a, e in self.factors}, self.scale
        )

    def expand(self, n: int) -> list:
        """Series coefficients through z^n; each 1/(1 - z^a) is a stride-a prefix sum."""
        if n < 0:
            raise ValueError("negative truncation order")
        out = [self.scale * self.num[m] for m in range(n + 1)]
        for a, e in self.factors:
            for _ in range(e):
                for j in range(a, n + 1):
                    out[j] += out[j - a]
        return out

    def reduced(self) -> "FactoredRatFun":
        """Cancel every (1 - z^a) factor that divides the numerator exactly."""
        if self.num.is_zero():
            return FactoredRatFun(ZERO, (), self.scale)
        num = self.num
        remaining: dict[int, int] = {}
        for a, e in sorted(self.factors, reverse=True):
            fa = one_minus_z(a)
            while e > 0:
                q, r = divmod(num, fa)
                if not r.is_zero():
                    break
                num, e = q, e - 1
            if e:
                remaining[a] = e
        return FactoredRatFun(num, remaining, self.scale)

    def to_ratfun(self) -> RatFun:
        slim = self.reduced()
        return RatFun(slim.num * slim.scale, slim.den_poly())

    def same_value(self, other) -> bool:
        if isinstance(other, FactoredRatFun):
            other = other.to_ratfun()
        return self.to_ratfun() == other
