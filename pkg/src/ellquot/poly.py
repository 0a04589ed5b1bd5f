"""Dense univariate polynomials over a pluggable coefficient field.

Coefficients are stored lowest degree first with no trailing zeros.  The same
class serves Q, GF(p), rational function fields, and (for resultants only)
multivariate polynomial rings that provide ``divexact``.
"""

from __future__ import annotations

from .errors import ZeroPolynomialError


class UniPoly:
    """A univariate polynomial; immutable once built."""

    __slots__ = ("field", "coeffs", "var")

    def __init__(self, field, coeffs, var: str = "x"):
        zero = field.zero
        cs = [field(c) if not _is_elem(c, zero) else c for c in coeffs]
        while cs and cs[-1] == zero:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)
        self.var = var

    @classmethod
    def zero(cls, field, var="x"):
        return cls(field, (), var)

    @classmethod
    def one(cls, field, var="x"):
        return cls(field, (field.one,), var)

    @classmethod
    def gen(cls, field, var="x"):
        """The polynomial x."""
        return cls(field, (field.zero, field.one), var)

    @classmethod
    def constant(cls, field, c, var="x"):
        return cls(field, (field(c),), var)

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self):
        """Leading coefficient; raises on the zero polynomial."""
        if not self.coeffs:
            raise ZeroPolynomialError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k: int):
        """Coefficient of x^k."""
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.field.zero

    def _wrap(self, coeffs):
        return UniPoly(self.field, coeffs, self.var)

    def _coerce(self, other):
        if isinstance(other, UniPoly):
            if other.field != self.field:
                raise ValueError("mixed coefficient fields")
            return other
        try:
            return self._wrap((self.field(other),))
        except (TypeError, ValueError):
            return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        z = self.field.zero
        return self._wrap(
            [self.coeff(i) + other.coeff(i) for i in range(n)] if n else [z]
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return self._wrap([self.coeff(i) - other.coeff(i) for i in range(n)])

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return self._wrap([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, UniPoly):
            if other.field != self.field:
                raise ValueError("mixed coefficient fields")
            if self.is_zero or other.is_zero:
                return self._wrap(())
            z = self.field.zero
            out = [z] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a == z:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return self._wrap(out)
        try:
            c = self.field(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self._wrap([a * c for a in self.coeffs])

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = UniPoly.one(self.field, self.var)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.field == other.field and self.coeffs == other.coeffs
        if self.degree > 0:
            return NotImplemented
        try:
            c = self.field(other)
        except (TypeError, ValueError):
            return NotImplemented
        return (self.coeffs or (self.field.zero,))[0] == c

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __call__(self, x):
        """Evaluate by Horner; x may live in any ring the coefficients embed into."""
        if not self.coeffs:
            return self.field.zero if not hasattr(x, "__mul__") else x * 0
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def map_coeffs(self, fn, field=None):
        return UniPoly(field or self.field, [fn(c) for c in self.coeffs], self.var)

    def divmod(self, other: "UniPoly"):
        """Quotient and remainder; requires an invertible leading coefficient."""
        if other.is_zero:
            raise ZeroPolynomialError("division by the zero polynomial")
        if self.degree < other.degree:
            return self._wrap(()), self
        z = self.field.zero
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        quo = [z] * (dq + 1)
        inv_lc = self.field.one / other.lc
        for k in range(dq, -1, -1):
            c = rem[k + other.degree] * inv_lc
            quo[k] = c
            if c != z:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] = rem[k + j] - c * b
        return self._wrap(quo), self._wrap(rem[: other.degree])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def divexact(self, other: "UniPoly") -> "UniPoly":
        q, r = self.divmod(other)
        if not r.is_zero:
            raise ValueError("division is not exact")
        return q

    def gcd(self, other: "UniPoly") -> "UniPoly":
        """Monic greatest common divisor over a field.

        Over Q the primitive subresultant sequence is used to keep
        intermediate coefficients small; other fields use plain Euclid.
        """
        if getattr(self.field, "name", "") == "Q" and self.degree > 2 and other.degree > 2:
            return _gcd_primitive_q(self, other)
        a, b = self, other
        while not b.is_zero:
            a, b = b, a % b
        if a.is_zero:
            return a
        return a.monic()

    def monic(self) -> "UniPoly":
        if self.is_zero:
            raise ZeroPolynomialError("cannot normalize the zero polynomial")
        if self.lc == self.field.one:
            return self
        inv = self.field.one / self.lc
        return self._wrap([c * inv for c in self.coeffs])

    def derivative(self) -> "UniPoly":
        F = self.field
        return self._wrap([F(k) * c for k, c in enumerate(self.coeffs) if k > 0])

    def compose(self, other: "UniPoly") -> "UniPoly":
        """self(other(x)) by Horner on polynomials."""
        acc = UniPoly.zero(self.field, other.var)
        for c in reversed(self.coeffs):
            acc = acc * other + self._wrap((c,))
        return acc

    def shift(self, k: int) -> "UniPoly":
        """Multiply by x^k."""
        if self.is_zero or k == 0:
            return self if k >= 0 else self._wrap(())
        return self._wrap((self.field.zero,) * k + self.coeffs)

    def reverse(self) -> "UniPoly":
        """x^deg * f(1/x)."""
        return self._wrap(tuple(reversed(self.coeffs)))

    def __repr__(self):
        if self.is_zero:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeff(k)
            if c == self.field.zero:
                continue
            parts.append(f"({c})*{self.var}^{k}")
        return " + ".join(parts)


def _is_elem(c, zero):
    return type(c) is type(zero)


def prem(f: UniPoly, g: UniPoly) -> UniPoly:
    """Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f = q*g + prem(f, g)."""
    if g.is_zero:
        raise ZeroPolynomialError("pseudo-division by zero")
    d = g.lc
    e = f.degree - g.degree + 1
    r = f
    while not r.is_zero and r.degree >= g.degree:
        shift = r.degree - g.degree
        r = r * d - (g * r.lc).shift(shift)
        e -= 1
    if e > 0:
        r = r * (d ** e if hasattr(d, "__pow__") else d)
    return r


def resultant(f: UniPoly, g: UniPoly):
    """Resultant of f and g, with the convention resultant(f, x - c) = f(c).

    Computed by the subresultant remainder sequence, so it works over any
    integral domain whose field object supplies ``divexact``.  The convention
    equals the Sylvester determinant with the rows of g listed first, i.e.
    (-1)^(deg f * deg g) times the f-first determinant.
    """
    if f.is_zero or g.is_zero:
        raise ZeroPolynomialError("resultant of a zero polynomial")
    return _resultant_fg(g, f)


def _resultant_fg(A: UniPoly, B: UniPoly):
    """Sylvester-determinant resultant with A's coefficient rows first."""
    F = A.field
    m, n = A.degree, B.degree
    if m == 0 and n == 0:
        return F.one
    if n == 0:
        return B.lc ** m
    if m == 0:
        return A.lc ** n
    sign = 1
    if m < n:
        A, B = B, A
        if m & n & 1:
            sign = -sign
    g = F.one
    h = F.one
    while True:
        dA, dB = A.degree, B.degree
        delta = dA - dB
        if dA & dB & 1:
            sign = -sign
        R = prem(A, B)
        A = B
        denom = g * h ** delta
        B = R.map_coeffs(lambda c: F.divexact(c, denom))
        if B.is_zero:
            return F.zero
        g = A.lc
        if delta > 0:
            h = F.divexact(g ** delta, h ** (delta - 1))
        if B.degree == 0:
            break
    dA = A.degree
    res = F.divexact(B.lc ** dA, h ** (dA - 1)) if dA > 1 else B.lc ** dA
    if sign < 0:
        res = -res
    return res


def discriminant(f: UniPoly):
    """(-1)^(n(n-1)/2) * resultant(f, f') / lc(f) for deg f = n >= 2."""
    n = f.degree
    if n < 2:
        raise ValueError("discriminant needs degree >= 2")
    res = resultant(f, f.derivative())
    res = f.field.divexact(res, f.lc)
    if (n * (n - 1) // 2) % 2:
        res = -res
    return res


def _gcd_primitive_q(f: UniPoly, g: UniPoly) -> UniPoly:
    """gcd over Q through primitive integer remainders (no coefficient blowup)."""
    import math
    from fractions import Fraction
    from functools import reduce

    def to_prim(p):
        den = reduce(math.lcm, (c.denominator for c in p.coeffs), 1)
        ints = [int(c * den) for c in p.coeffs]
        cont = reduce(math.gcd, (abs(c) for c in ints), 0)
        return [c // cont for c in ints] if cont else []

    def prim_rem(a, b):
        # primitive pseudo-remainder of integer coefficient lists
        d = b[-1]
        r = list(a)
        while len(r) >= len(b) and any(r):
            while r and r[-1] == 0:
                r.pop()
            if len(r) < len(b):
                break
            lead = r[-1]
            shift = len(r) - len(b)
            r = [c * d for c in r]
            for j, bc in enumerate(b):
                r[shift + j] -= lead * bc
            while r and r[-1] == 0:
                r.pop()
            cont = reduce(math.gcd, (abs(c) for c in r), 0)
            if cont > 1:
                r = [c // cont for c in r]
        return r

    a = to_prim(f)
    b = to_prim(g)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = prim_rem(a, b)
        a, b = b, r
    return UniPoly(f.field, [Fraction(c) for c in a], f.var).monic()


def poly_from_roots(field, roots, var="x") -> UniPoly:
    out = UniPoly.one(field, var)
    x = UniPoly.gen(field, var)
    for r in roots:
        out = out * (x - UniPoly.constant(field, r, var))
    return out
