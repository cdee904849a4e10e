"""Exact real algebraic numbers for bilinear-form entries.

Arithmetic happens in the real cyclotomic field Q(2 cos(pi/N)): elements
are polynomials in theta = 2 cos(pi/N) reduced modulo its minimal
polynomial, with Fraction coefficients.  Sign decisions refine an isolating
interval for theta by bisection, so they are certified; equality with zero
is a syntactic check on the reduced polynomial.  Floating point is used
only to seed the isolating interval, and the seed is verified by an exact
sign change of the minimal polynomial.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

MAX_FIELD_INDEX = 10_000  # root gaps of the minimal polynomial stay >> seed width
_SEED_WIDTH = Fraction(1, 10**12)
_MAX_BISECTIONS = 400


class PrecisionExhausted(Exception):
    """Sign certification failed to converge; indicates a bug upstream."""


# ---------------------------------------------------------------------------
# integer/rational polynomials, coefficients low-to-high


def poly_trim(coeffs: Sequence) -> tuple:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def poly_eval(coeffs: Sequence, x):
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def poly_mul(p: Sequence, q: Sequence) -> tuple:
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return poly_trim(out)


def poly_add(p: Sequence, q: Sequence) -> tuple:
    out = [0] * max(len(p), len(q))
    for i, a in enumerate(p):
        out[i] += a
    for i, b in enumerate(q):
        out[i] += b
    return poly_trim(out)


def poly_scale(p: Sequence, c) -> tuple:
    return poly_trim([a * c for a in p])


def poly_divmod_monic(p: Sequence, d: Sequence) -> tuple[tuple, tuple]:
    """Divide by a monic divisor; exact over the coefficient ring."""
    assert d and d[-1] == 1
    rem = list(p)
    deg_d = len(d) - 1
    quot = [0] * max(len(p) - deg_d, 0)
    for i in range(len(rem) - 1, deg_d - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        quot[i - deg_d] = c
        for j, b in enumerate(d):
            rem[i - deg_d + j] -= c * b
    return poly_trim(quot), poly_trim(rem)


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial."""
    if n == 1:
        return (-1, 1)
    poly: tuple = tuple([-1] + [0] * (n - 1) + [1])  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            poly, rem = poly_divmod_monic(poly, cyclotomic(d))
            assert not rem
    return tuple(int(c) for c in poly)


@lru_cache(maxsize=None)
def two_cos_minpoly(n: int) -> tuple[int, ...]:
    """Minimal polynomial of 2 cos(2 pi / n), monic with integer coefficients.

    For n >= 3 the n-th cyclotomic polynomial is palindromic of even degree
    2m and factors as x^m * f(x + 1/x); peeling leading terms recovers f.
    """
    if n == 1:
        return (-2, 1)
    if n == 2:
        return (2, 1)
    phi = list(cyclotomic(n))
    m = (len(phi) - 1) // 2
    coeffs = [0] * (m + 1)
    for k in range(m, -1, -1):
        a = phi[m + k]
        coeffs[k] = a
        if a:
            for j in range(k + 1):
                phi[m + k - 2 * j] -= a * math.comb(k, j)
    assert not any(phi), "palindromic transform must terminate exactly"
    return tuple(coeffs)


def cos_pi_over_minpoly(m: int) -> tuple[int, ...]:
    """Primitive integer minimal polynomial of cos(pi/m), m >= 1."""
    psi = two_cos_minpoly(2 * m)
    scaled = poly_trim([c * 2**i for i, c in enumerate(psi)])  # psi(2x)
    g = math.gcd(*(abs(c) for c in scaled))
    out = tuple(c // g for c in scaled)
    return out if out[-1] > 0 else tuple(-c for c in out)


def poly_negate_variable(p: Sequence) -> tuple:
    """p(-x), sign-normalized to a positive leading coefficient."""
    out = tuple(c if i % 2 == 0 else -c for i, c in enumerate(p))
    return out if out[-1] > 0 else tuple(-c for c in out)


# ---------------------------------------------------------------------------
# interval arithmetic with Fraction endpoints


def _imul(a: tuple, b: tuple) -> tuple:
    vals = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return (min(vals), max(vals))


def interval_eval(coeffs: Sequence, lo: Fraction, hi: Fraction) -> tuple:
    acc = (Fraction(0), Fraction(0))
    x = (lo, hi)
    for c in reversed(coeffs):
        acc = _imul(acc, x)
        acc = (acc[0] + c, acc[1] + c)
    return acc


# ---------------------------------------------------------------------------
# the working field Q(2 cos(pi / N))


class RealCyclotomicField:
    """Q(theta) for theta = 2 cos(pi/N), with a certified isolating interval."""

    def __init__(self, n: int):
        if not (1 <= n <= MAX_FIELD_INDEX):
            raise ValueError(f"field index must be in 1..{MAX_FIELD_INDEX}")
        self.n = n
        self.modulus = two_cos_minpoly(2 * n)
        self.degree = len(self.modulus) - 1
        if self.degree == 1:
            v = Fraction(-self.modulus[0], self.modulus[1])
            self.theta_exact: Fraction | None = v
            self.theta_interval = (v - 1, v + 1)
        else:
            self.theta_exact = None
            self.theta_interval = self._seed_interval()

    def _seed_interval(self) -> tuple[Fraction, Fraction]:
        approx = Fraction(2 * math.cos(math.pi / self.n)).limit_denominator(10**15)
        lo, hi = approx - _SEED_WIDTH, approx + _SEED_WIDTH
        # theta is irrational here, so the exact sign change certifies that
        # the interval isolates it (adjacent roots are far beyond the width)
        if poly_eval(self.modulus, lo) * poly_eval(self.modulus, hi) >= 0:
            raise PrecisionExhausted(f"could not isolate 2 cos(pi/{self.n})")
        return (lo, hi)

    def element(self, coeffs: Sequence[Fraction]) -> "CycloNumber":
        return CycloNumber(self, tuple(map(Fraction, poly_trim(coeffs))))

    def rational(self, value) -> "CycloNumber":
        v = Fraction(value)
        return CycloNumber(self, (v,) if v else ())

    def theta(self) -> "CycloNumber":
        if self.degree == 1:
            return self.rational(self.theta_exact)
        return self.element((Fraction(0), Fraction(1)))

    def two_cos_pi_over(self, m: int) -> "CycloNumber":
        """2 cos(pi/m) as a field element; m must divide N."""
        if self.n % m:
            raise ValueError(f"{m} does not divide the field index {self.n}")
        k = self.n // m
        # Dickson recurrence: D_0 = 2, D_1 = theta, D_{j+1} = theta D_j - D_{j-1},
        # with D_j(2 cos a) = 2 cos(j a)
        prev, cur = self.rational(2), self.theta()
        if k == 0:
            return prev
        for _ in range(k - 1):
            prev, cur = cur, cur * self.theta() - prev
        return cur

    def _reduce(self, coeffs: tuple) -> tuple:
        if len(coeffs) < len(self.modulus):
            return poly_trim(coeffs)
        _, rem = poly_divmod_monic(coeffs, self.modulus)
        return rem

    def __repr__(self):
        return f"RealCyclotomicField(2 cos(pi/{self.n}))"


class CycloNumber:
    """Element of a RealCyclotomicField; supports exact ring and sign ops."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: RealCyclotomicField, coeffs: tuple):
        self.field = field
        self.coeffs = field._reduce(coeffs)

    def _coerce(self, other) -> "CycloNumber":
        if isinstance(other, CycloNumber):
            if other.field is not self.field:
                raise ValueError("elements of different fields")
            return other
        return self.field.rational(other)

    def __add__(self, other):
        o = self._coerce(other)
        return CycloNumber(self.field, poly_add(self.coeffs, o.coeffs))

    __radd__ = __add__

    def __neg__(self):
        return CycloNumber(self.field, poly_scale(self.coeffs, -1))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        return CycloNumber(self.field, poly_mul(self.coeffs, o.coeffs))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def inverse(self) -> "CycloNumber":
        if not self.coeffs:
            raise ZeroDivisionError("inverse of zero field element")
        # extended Euclid against the (irreducible) modulus
        r0, r1 = tuple(map(Fraction, self.field.modulus)), self.coeffs
        s0, s1 = (), (Fraction(1),)
        while r1:
            lead = r1[-1]
            deg_gap = len(r0) - len(r1)
            if deg_gap < 0:
                r0, r1, s0, s1 = r1, r0, s1, s0
                continue
            q = tuple([Fraction(0)] * deg_gap + [r0[-1] / lead])
            r0, r1 = r1, poly_add(r0, poly_scale(poly_mul(q, r1), -1))
            s0, s1 = s1, poly_add(s0, poly_scale(poly_mul(q, s1), -1))
        assert len(r0) == 1, "modulus must be irreducible"
        return CycloNumber(self.field, poly_scale(s0, 1 / r0[0]))

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_rational(self) -> bool:
        return len(self.coeffs) <= 1

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def sign(self) -> int:
        if not self.coeffs:
            return 0
        if self.field.theta_exact is not None:
            v = poly_eval(self.coeffs, self.field.theta_exact)
            return -1 if v < 0 else (1 if v > 0 else 0)
        lo, hi = self.field.theta_interval
        modulus = self.field.modulus
        sign_lo = 1 if poly_eval(modulus, lo) > 0 else -1
        for _ in range(_MAX_BISECTIONS):
            vlo, vhi = interval_eval(self.coeffs, lo, hi)
            if vlo > 0:
                return 1
            if vhi < 0:
                return -1
            mid = (lo + hi) / 2
            vmid = poly_eval(modulus, mid)
            if vmid == 0:  # cannot happen: theta is irrational
                raise PrecisionExhausted("bisection landed on a rational root")
            if (1 if vmid > 0 else -1) == sign_lo:
                lo = mid
            else:
                hi = mid
        raise PrecisionExhausted("sign of a nonzero field element did not resolve")

    def interval(self, width: Fraction) -> tuple[Fraction, Fraction]:
        """A certified enclosure of this element, narrower than ``width``."""
        if self.field.theta_exact is not None:
            v = poly_eval(self.coeffs, self.field.theta_exact)
            return (v - width / 2, v + width / 2)
        lo, hi = self.field.theta_interval
        modulus = self.field.modulus
        sign_lo = 1 if poly_eval(modulus, lo) > 0 else -1
        for _ in range(_MAX_BISECTIONS):
            vlo, vhi = interval_eval(self.coeffs, lo, hi)
            if vhi - vlo < width:
                return (vlo, vhi)
            mid = (lo + hi) / 2
            vmid = poly_eval(modulus, mid)
            if (1 if vmid > 0 else -1) == sign_lo:
                lo = mid
            else:
                hi = mid
        raise PrecisionExhausted("interval refinement did not converge")

    def __float__(self):
        lo, hi = self.interval(Fraction(1, 10**17))
        return float((lo + hi) / 2)

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except (ValueError, TypeError):
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash((id(self.field), self.coeffs))

    def __repr__(self):
        return f"CycloNumber({self.coeffs!r} @ pi/{self.field.n})"


# ---------------------------------------------------------------------------
# the public certificate type


@dataclass(frozen=True)
class AlgebraicReal:
    """A real algebraic number: squarefree integer polynomial + isolating interval.

    The polynomial has exactly one real root in the open interval (lo, hi);
    that root is the number.  ``exact`` carries the value when it is rational.
    """

    poly: tuple[int, ...]
    lo: Fraction
    hi: Fraction
    exact: Fraction | None = None

    @staticmethod
    def from_rational(value) -> "AlgebraicReal":
        v = Fraction(value)
        return AlgebraicReal((-v.numerator, v.denominator), v - 1, v + 1, v)

    @staticmethod
    def from_poly_near(poly: Sequence[int], approx: float, width: float = 1e-9) -> "AlgebraicReal":
        """Isolate the root of ``poly`` closest to a numeric seed."""
        lo = Fraction(approx - width).limit_denominator(10**15)
        hi = Fraction(approx + width).limit_denominator(10**15)
        if poly_eval(poly, lo) * poly_eval(poly, hi) >= 0:
            raise PrecisionExhausted("seed interval does not isolate a root")
        return AlgebraicReal(tuple(poly), lo, hi)

    def refine(self, width: Fraction) -> "AlgebraicReal":
        """A new value with the same root isolated to at most ``width``."""
        if self.exact is not None:
            v = self.exact
            w = Fraction(width) / 2
            return AlgebraicReal(self.poly, v - w, v + w, v)
        lo, hi = self.lo, self.hi
        flo = poly_eval(self.poly, lo)
        while hi - lo > width:
            mid = (lo + hi) / 2
            fmid = poly_eval(self.poly, mid)
            if fmid == 0:
                w = min(width, hi - lo) / 4
                return AlgebraicReal(self.poly, mid - w, mid + w, mid)
            if (fmid > 0) == (flo > 0):
                lo, flo = mid, fmid
            else:
                hi = mid
        return AlgebraicReal(self.poly, lo, hi, None)

    def sign(self) -> int:
        if self.exact is not None:
            return -1 if self.exact < 0 else (1 if self.exact > 0 else 0)
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        if poly_eval(self.poly, 0) == 0:
            return 0
        cur = self
        for _ in range(_MAX_BISECTIONS):
            cur = cur.refine((cur.hi - cur.lo) / 4)
            if cur.lo > 0:
                return 1
            if cur.hi < 0:
                return -1
        raise PrecisionExhausted("sign did not resolve")

    def __float__(self):
        if self.exact is not None:
            return float(self.exact)
        r = self.refine(Fraction(1, 10**17))
        return float((r.lo + r.hi) / 2)
