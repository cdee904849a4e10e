"""Exact arithmetic in the group of matrices [[1, x, z], [0, u, y], [0, 0, 1]]
with x, y, z in Z[1/p] and u a unit +-p^k, and the machine check that the
image of the diagonal subgroup is acentral in the quotient by the central
copy of Z (where the centre is {u = 1, x = y = 0} with z free).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import sympy


@lru_cache(maxsize=None)
def _is_prime(p: int) -> bool:
    return bool(sympy.isprime(p))


def _is_p_power_denominator(value: Fraction, p: int) -> bool:
    den = value.denominator
    while den % p == 0:
        den //= p
    return den == 1


@dataclass(frozen=True)
class ZInvP:
    """Element of Z[1/p]: a rational whose denominator is a power of p."""

    p: int
    value: Fraction

    def __post_init__(self):
        object.__setattr__(self, "value", Fraction(self.value))
        if self.p < 2 or not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if not _is_p_power_denominator(self.value, self.p):
            raise ValueError(f"{self.value} is not in Z[1/{self.p}]")

    def _coerce(self, other) -> "ZInvP":
        if isinstance(other, ZInvP):
            if other.p != self.p:
                raise ValueError("mixed primes")
            return other
        return ZInvP(self.p, Fraction(other))

    def __add__(self, other):
        return ZInvP(self.p, self.value + self._coerce(other).value)

    __radd__ = __add__

    def __sub__(self, other):
        return ZInvP(self.p, self.value - self._coerce(other).value)

    def __rsub__(self, other):
        return ZInvP(self.p, self._coerce(other).value - self.value)

    def __mul__(self, other):
        return ZInvP(self.p, self.value * self._coerce(other).value)

    __rmul__ = __mul__

    def __neg__(self):
        return ZInvP(self.p, -self.value)

    def times_p_power(self, k: int) -> "ZInvP":
        """Multiply by p^k (k may be negative; the result stays in Z[1/p])."""
        return ZInvP(self.p, self.value * Fraction(self.p) ** k)

    def is_integer(self) -> bool:
        return self.value.denominator == 1


@dataclass(frozen=True)
class A3Matrix:
    """Group element (x, y, z, u) with u encoded as sign * p^exp."""

    p: int
    x: ZInvP
    y: ZInvP
    z: ZInvP
    u_sign: int
    u_exp: int

    def __post_init__(self):
        if self.u_sign not in (1, -1):
            raise ValueError("unit sign must be +-1")
        for entry in (self.x, self.y, self.z):
            if entry.p != self.p:
                raise ValueError("mixed primes")

    @staticmethod
    def make(p: int, x, y, z, u_sign: int = 1, u_exp: int = 0) -> "A3Matrix":
        return A3Matrix(p, ZInvP(p, x), ZInvP(p, y), ZInvP(p, z), u_sign, u_exp)

    @property
    def u(self) -> Fraction:
        return self.u_sign * Fraction(self.p) ** self.u_exp

    def is_identity(self) -> bool:
        return (
            self.x.value == 0
            and self.y.value == 0
            and self.z.value == 0
            and self.u_sign == 1
            and self.u_exp == 0
        )

    def is_central(self) -> bool:
        """Members of the centre: u = 1 and x = y = 0."""
        return self.x.value == 0 and self.y.value == 0 and self.u_sign == 1 and self.u_exp == 0


def a3_identity(p: int) -> A3Matrix:
    return A3Matrix.make(p, 0, 0, 0)


def a3_mul(a: A3Matrix, b: A3Matrix) -> A3Matrix:
    if a.p != b.p:
        raise ValueError("mixed primes")
    # [[1,x1,z1],[0,u1,y1],[0,0,1]] * [[1,x2,z2],[0,u2,y2],[0,0,1]]
    x = b.x + a.x.times_p_power(b.u_exp) * b.u_sign
    y = a.y + b.y.times_p_power(a.u_exp) * a.u_sign
    z = b.z + a.x * b.y + a.z
    return A3Matrix(a.p, x, y, z, a.u_sign * b.u_sign, a.u_exp + b.u_exp)


def a3_inv(a: A3Matrix) -> A3Matrix:
    x = -(a.x.times_p_power(-a.u_exp) * a.u_sign)
    y = -(a.y.times_p_power(-a.u_exp) * a.u_sign)
    z = -a.z + (a.x * a.y).times_p_power(-a.u_exp) * a.u_sign
    return A3Matrix(a.p, x, y, z, a.u_sign, -a.u_exp)


def a3_op(op: str, *args: A3Matrix) -> A3Matrix:
    if op == "mul":
        a, b = args
        return a3_mul(a, b)
    if op == "inv":
        (a,) = args
        return a3_inv(a)
    raise ValueError(f"unknown operation {op!r}")


# ---------------------------------------------------------------------------
# the quotient by the central copy of Z


@dataclass(frozen=True)
class GammaElement:
    """A3 matrix with z taken modulo 1 (the central Z is divided out)."""

    matrix: A3Matrix

    def __post_init__(self):
        m = self.matrix
        frac = m.z.value - (m.z.value.numerator // m.z.value.denominator)
        reduced = A3Matrix(m.p, m.x, m.y, ZInvP(m.p, frac), m.u_sign, m.u_exp)
        object.__setattr__(self, "matrix", reduced)

    def __eq__(self, other):
        return isinstance(other, GammaElement) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)


def gamma_commutes(g: GammaElement, h: GammaElement) -> bool:
    """Do the classes commute in the quotient?  Checked on lifts: the
    commutator must be trivial up to an integer z-entry."""
    a, b = g.matrix, h.matrix
    comm = a3_mul(a3_mul(a, b), a3_mul(a3_inv(a), a3_inv(b)))
    return (
        comm.x.value == 0
        and comm.y.value == 0
        and comm.u_sign == 1
        and comm.u_exp == 0
        and comm.z.is_integer()
    )


def diagonal_element(p: int, exponent: int, sign: int = 1) -> GammaElement:
    if exponent == 0 and sign == 1:
        raise ValueError("the diagonal witness must have u != 1")
    return GammaElement(A3Matrix.make(p, 0, 0, 0, sign, exponent))


def random_gamma_element(p: int, rng: random.Random) -> GammaElement:
    """x, y, z uniform over {a / p^k : |a| <= 10 p^k, k <= 4}, u = +-p^j, |j| <= 3."""
    def coord():
        k = rng.randint(0, 4)
        bound = 10 * p**k
        return Fraction(rng.randint(-bound, bound), p**k)

    return GammaElement(
        A3Matrix.make(p, coord(), coord(), coord(), rng.choice((1, -1)), rng.randint(-3, 3))
    )


# ---------------------------------------------------------------------------
# acentrality of the diagonal image


def symbolic_commutator_identities() -> bool:
    """Exact symbolic form of the commutator of a diagonal lift with a
    generic lift: the off-diagonal entries are x (1 - u0^-1) / u-adjusted
    and y (u0 - 1), so commuting modulo the centre forces x = y = 0."""
    x, y, z, u, u0 = sympy.symbols("x y z u u0", nonzero=False)
    m = sympy.Matrix([[1, x, z], [0, u, y], [0, 0, 1]])
    g = sympy.Matrix([[1, 0, 0], [0, u0, 0], [0, 0, 1]])
    comm = sympy.simplify(g * m * g.inv() * m.inv())
    top = sympy.simplify(comm[0, 1] - (x / u) * (1 / u0 - 1))
    mid = sympy.simplify(comm[1, 2] - y * (u0 - 1))
    diag_ok = sympy.simplify(comm[1, 1] - 1) == 0
    return top == 0 and mid == 0 and diag_ok


@dataclass(frozen=True)
class AcentralReport:
    prime: int
    symbolic_ok: bool
    trials: int
    commuting_cases: int
    counterexamples: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return self.symbolic_ok and not self.counterexamples

    def to_json(self) -> dict:
        return {
            "prime": self.prime,
            "symbolic": "pass" if self.symbolic_ok else "fail",
            "randomized": "pass" if not self.counterexamples else "fail",
            "trials": self.trials,
            "commuting_cases": self.commuting_cases,
            "counterexamples": list(self.counterexamples),
        }


def acentral_check(
    p: int,
    trials: int = 10_000,
    exponent: int = 1,
    sign: int = 1,
    seed: int = 0x5EED,
) -> AcentralReport:
    """Verify that anything commuting with the diagonal class has x = y = 0.

    Combines the exact symbolic commutator identities with randomized
    sampling; any counterexample would indicate an arithmetic bug.
    """
    if exponent == 0:
        raise ValueError("the diagonal element needs a nonzero exponent")
    symbolic_ok = symbolic_commutator_identities()
    g = diagonal_element(p, exponent, sign)
    rng = random.Random(seed)
    counterexamples = []
    commuting = 0
    for _ in range(trials):
        h = random_gamma_element(p, rng)
        if gamma_commutes(g, h):
            commuting += 1
            hm = h.matrix
            if hm.x.value != 0 or hm.y.value != 0:
                counterexamples.append(
                    f"x={hm.x.value} y={hm.y.value} u={hm.u} z={hm.z.value}"
                )
    # positive controls: x = y = 0 classes must land in the centralizer,
    # otherwise the implication above would hold vacuously
    for _ in range(max(1, trials // 10)):
        sample = random_gamma_element(p, rng).matrix
        control = GammaElement(
            A3Matrix(p, ZInvP(p, 0), ZInvP(p, 0), sample.z, sample.u_sign, sample.u_exp)
        )
        if gamma_commutes(g, control):
            commuting += 1
        else:
            counterexamples.append(
                f"diagonal class u={control.matrix.u} z={control.matrix.z.value} "
                "failed to commute"
            )
    return AcentralReport(p, symbolic_ok, trials, commuting, tuple(counterexamples))
