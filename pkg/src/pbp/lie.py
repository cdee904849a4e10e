"""Finite-dimensional Lie algebras over Q via structure constants.

Provides ideals, centralizers, complete ideal-lattice enumeration where the
lattice is finite, and the decision whether the algebra splits as a sum of
two commuting nonzero subalgebras.  The enumeration is certified: it
answers Complete only when every minimal ideal was provably found, flags a
provably infinite family otherwise, and degrades to Unknown rather than
guess when its randomized steps fail to certify anything.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Sequence

import sympy

from .linalg import (
    SpanBuilder,
    Vec,
    char_poly,
    column_space,
    dependence,
    express,
    flatten,
    identity_matrix,
    is_zero_vec,
    mat_eq,
    mat_mul,
    mat_scale,
    mat_sub,
    mat_trace,
    mat_vec,
    min_poly_of_matrix,
    nullspace,
    pivots,
    poly_eval_matrix,
    reduce_vector,
    rref,
    transpose,
    vec,
    vec_add,
    vec_scale,
    zero_vec,
)
from .verdict import Answer, InternalVerificationError


class InvalidAlgebra(Exception):
    """The structure constants violate antisymmetry or the Jacobi identity."""


class UnsupportedParams(ValueError):
    """Unknown catalogue name or parameters."""


# ---------------------------------------------------------------------------
# algebras and subspaces


@dataclass(frozen=True)
class LieAlgebra:
    """Structure constants c[i][j][k] with [e_i, e_j] = sum_k c[i][j][k] e_k."""

    dim: int
    constants: tuple
    labels: tuple[str, ...]

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("algebras here have dimension >= 1")
        c = tuple(tuple(tuple(row) for row in plane) for plane in self.constants)
        object.__setattr__(self, "constants", c)
        if len(self.labels) != self.dim:
            raise ValueError("one label per basis vector")

    def bracket_basis(self, i: int, j: int) -> Vec:
        return self.constants[i][j]

    def bracket(self, u: Sequence, v: Sequence) -> Vec:
        out = [0] * self.dim
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if not b:
                    continue
                for k, c in enumerate(self.constants[i][j]):
                    if c:
                        out[k] += a * b * c
        return tuple(out)

    def ad_basis(self, i: int) -> list:
        """Matrix of ad(e_i): columns are [e_i, e_j]."""
        cols = [self.constants[i][j] for j in range(self.dim)]
        return [list(row) for row in zip(*cols)]

    def ad(self, v: Sequence) -> list:
        out = [[0] * self.dim for _ in range(self.dim)]
        for i, a in enumerate(v):
            if not a:
                continue
            m = self.ad_basis(i)
            for r in range(self.dim):
                for c in range(self.dim):
                    if m[r][c]:
                        out[r][c] += a * m[r][c]
        return out


def validate(algebra: LieAlgebra) -> str | None:
    """None if the Lie axioms hold, else a message naming the first violation."""
    n = algebra.dim
    c = algebra.constants
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if c[i][j][k] != -c[j][i][k]:
                    return f"antisymmetry fails at ({i}, {j}, {k})"
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                lhs = vec_add(
                    vec_add(
                        algebra.bracket(algebra.constants[i][j], _unit(n, k)),
                        algebra.bracket(algebra.constants[j][k], _unit(n, i)),
                    ),
                    algebra.bracket(algebra.constants[k][i], _unit(n, j)),
                )
                if not is_zero_vec(lhs):
                    return f"Jacobi identity fails at ({i}, {j}, {k})"
    return None


def _unit(n: int, i: int) -> Vec:
    return tuple(1 if j == i else 0 for j in range(n))


@dataclass(frozen=True)
class Subspace:
    """Subspace of Q^ambient in reduced echelon form (canonical)."""

    ambient: int
    rows: tuple[Vec, ...]

    @staticmethod
    def from_vectors(ambient: int, vectors: Sequence[Sequence]) -> "Subspace":
        return Subspace(ambient, rref(list(vectors)))

    @staticmethod
    def zero(ambient: int) -> "Subspace":
        return Subspace(ambient, ())

    @staticmethod
    def whole(ambient: int) -> "Subspace":
        return Subspace(ambient, tuple(_unit(ambient, i) for i in range(ambient)))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def is_zero(self) -> bool:
        return not self.rows

    def contains(self, v: Sequence) -> bool:
        return is_zero_vec(reduce_vector(self.rows, tuple(v)))

    def contains_space(self, other: "Subspace") -> bool:
        return all(self.contains(r) for r in other.rows)

    def add(self, other: "Subspace") -> "Subspace":
        return Subspace(self.ambient, rref(list(self.rows) + list(other.rows)))

    def intersect(self, other: "Subspace") -> "Subspace":
        if self.is_zero() or other.is_zero():
            return Subspace.zero(self.ambient)
        # v in both spans: v = x*A = y*B; solve [A^T | -B^T] kernel
        a, b = list(self.rows), list(other.rows)
        sys_rows = []
        for coord in range(self.ambient):
            sys_rows.append([r[coord] for r in a] + [-r[coord] for r in b])
        sols = nullspace(sys_rows, len(a) + len(b))
        vecs = []
        for sol in sols:
            v = zero_vec(self.ambient)
            for c, row in zip(sol[: len(a)], a):
                if c:
                    v = vec_add(v, vec_scale(row, c))
            vecs.append(v)
        return Subspace.from_vectors(self.ambient, vecs)


def bracket_subspace(algebra: LieAlgebra, a: Subspace, b: Subspace) -> Subspace:
    vecs = [algebra.bracket(x, y) for x in a.rows for y in b.rows]
    return Subspace.from_vectors(algebra.dim, vecs)


def is_subalgebra(algebra: LieAlgebra, s: Subspace) -> bool:
    return s.contains_space(bracket_subspace(algebra, s, s))


def is_ideal(algebra: LieAlgebra, s: Subspace) -> bool:
    return s.contains_space(bracket_subspace(algebra, Subspace.whole(algebra.dim), s))


def centralizer(algebra: LieAlgebra, a: Subspace) -> Subspace:
    """{Y : [Y, X] = 0 for all X in a}, as the kernel of stacked ad matrices."""
    if a.is_zero():
        return Subspace.whole(algebra.dim)
    rows = []
    for x in a.rows:
        rows.extend(algebra.ad(x))  # [x, Y] = ad(x) Y; zero iff [Y, x] = 0
    return Subspace.from_vectors(algebra.dim, nullspace(rows, algebra.dim))


def centre(algebra: LieAlgebra) -> Subspace:
    return centralizer(algebra, Subspace.whole(algebra.dim))


def ideal_closure(algebra: LieAlgebra, seed: Subspace) -> Subspace:
    """Least ideal containing the seed: repeated bracketing with the basis."""
    builder = SpanBuilder(algebra.dim, seed.rows)
    queue = list(seed.rows)
    while queue:
        v = queue.pop()
        for i in range(algebra.dim):
            w = algebra.bracket(_unit(algebra.dim, i), v)
            if builder.add(w):
                queue.append(w)
    return Subspace(algebra.dim, builder.basis())


# ---------------------------------------------------------------------------
# product certificates


@dataclass(frozen=True)
class LieCertificate:
    g1: Subspace
    g2: Subspace

    def to_json(self, algebra: LieAlgebra) -> dict:
        return {
            "g1": [[str(x) for x in row] for row in self.g1.rows],
            "g2": [[str(x) for x in row] for row in self.g2.rows],
        }


def verify_product_certificate(
    algebra: LieAlgebra, cert: LieCertificate
) -> tuple[bool, str | None]:
    """Accept iff both parts are nonzero commuting subalgebras spanning the algebra."""
    n = algebra.dim
    for name, part in (("g1", cert.g1), ("g2", cert.g2)):
        if part.ambient != n:
            return False, f"{name} lives in the wrong ambient dimension"
        if part.is_zero():
            return False, f"{name} is the zero subspace"
        if not is_subalgebra(algebra, part):
            return False, f"{name} is not a subalgebra"
    if not bracket_subspace(algebra, cert.g1, cert.g2).is_zero():
        return False, "the two parts do not commute"
    total = cert.g1.add(cert.g2)
    if total.dim != n:
        return False, f"sum has dimension {total.dim} < {n}"
    # commuting parts that span are automatically ideals; re-check anyway
    for name, part in (("g1", cert.g1), ("g2", cert.g2)):
        if not is_ideal(algebra, part):
            raise InternalVerificationError(f"accepted {name} is not an ideal")
    return True, None


# ---------------------------------------------------------------------------
# quotients


def quotient_algebra(
    algebra: LieAlgebra, ideal: Subspace
) -> tuple[LieAlgebra, Callable[[Vec], Vec], Callable[[Vec], Vec]]:
    """Quotient by an ideal, with a linear section lift and projection."""
    n = algebra.dim
    piv = set(pivots(ideal.rows))
    free = [j for j in range(n) if j not in piv]
    q = len(free)

    def project(v: Sequence) -> Vec:
        w = reduce_vector(ideal.rows, tuple(v))
        return tuple(w[j] for j in free)

    def lift(u: Sequence) -> Vec:
        out = [0] * n
        for val, j in zip(u, free):
            out[j] = val
        return tuple(out)

    constants = tuple(
        tuple(project(algebra.bracket(lift(_unit(q, i)), lift(_unit(q, j)))) for j in range(q))
        for i in range(q)
    )
    labels = tuple(algebra.labels[j] for j in free)
    return LieAlgebra(q, constants, labels), lift, project


# ---------------------------------------------------------------------------
# module machinery for the adjoint representation


def _envelope(gens: list, n: int) -> list:
    """Basis of the unital matrix algebra generated by ``gens``."""
    basis: list = []
    builder = SpanBuilder(n * n)
    queue = [identity_matrix(n)] + [g for g in gens]
    while queue:
        m = queue.pop()
        if builder.add(flatten(m)):
            basis.append(m)
            for g in gens:
                queue.append(mat_mul(m, g))
    return basis


def _trace_radical(alg_basis: list, n: int) -> list:
    """Radical of the algebra spanned by ``alg_basis``: the trace-form kernel.

    Valid in characteristic zero for an algebra given by matrices acting
    faithfully, which is the case here by construction.
    """
    k = len(alg_basis)
    gram = [
        [mat_trace(mat_mul(alg_basis[i], alg_basis[j])) for j in range(k)]
        for i in range(k)
    ]
    out = []
    for sol in nullspace(gram, k):
        m = [[0] * n for _ in range(n)]
        for c, b in zip(sol, alg_basis):
            if c:
                for r in range(n):
                    for s in range(n):
                        if b[r][s]:
                            m[r][s] += c * b[r][s]
        out.append(m)
    return out


def _annihilator_rows(mats: list, n: int) -> tuple[Vec, ...]:
    """{v : m v = 0 for all m}, as rref rows."""
    if not mats:
        return Subspace.whole(n).rows
    rows = []
    for m in mats:
        rows.extend(m)
    return rref(nullspace(rows, n))


def _restrict(mat, rows: tuple[Vec, ...]) -> list:
    """Matrix of an invariant operator in the coordinates of an rref basis."""
    cols = []
    for b in rows:
        img = mat_vec(mat, b)
        coeffs = express(rows, img)
        if coeffs is None:
            raise InternalVerificationError("operator does not preserve the subspace")
        cols.append(coeffs)
    return [list(r) for r in zip(*cols)]


def _compose_rows(outer: tuple[Vec, ...], inner: tuple[Vec, ...]) -> tuple[Vec, ...]:
    """Map rows given in outer-coordinates back to ambient coordinates."""
    ambient_len = len(outer[0]) if outer else 0
    vecs = []
    for r in inner:
        v = zero_vec(ambient_len)
        for c, b in zip(r, outer):
            if c:
                v = vec_add(v, vec_scale(b, c))
        vecs.append(v)
    return rref(vecs)


def _spin(vectors: list, gens: list, n: int) -> tuple[Vec, ...]:
    """Smallest gens-invariant subspace containing the vectors (rref rows)."""
    builder = SpanBuilder(n)
    queue = []
    for v in vectors:
        if builder.add(v):
            queue.append(v)
    while queue:
        v = queue.pop()
        for g in gens:
            w = mat_vec(g, v)
            if builder.add(w):
                queue.append(w)
    return builder.basis()


def _factor_poly(coeffs: Sequence) -> list[tuple[tuple, int]]:
    """Irreducible factors over Q of a polynomial with rational coefficients."""
    x = sympy.Symbol("x")
    expr = sympy.Add(*[sympy.Rational(Fraction(c)) * x**i for i, c in enumerate(coeffs)])
    _, factors = sympy.factor_list(sympy.Poly(expr, x, domain="QQ"))
    out = []
    for poly, mult in factors:
        cs = [Fraction(sympy.Rational(c)) for c in reversed(poly.all_coeffs())]
        lead = cs[-1]
        out.append((tuple(c / lead for c in cs), int(mult)))
    return out


def _poly_divmod(p: Sequence, d: Sequence) -> tuple[tuple, tuple]:
    rem = [Fraction(c) for c in p]
    den = [Fraction(c) for c in d]
    deg_d = len(den) - 1
    if deg_d < 0:
        raise ZeroDivisionError
    quot = [Fraction(0)] * max(len(rem) - deg_d, 0)
    for i in range(len(rem) - 1, deg_d - 1, -1):
        if rem[i] == 0:
            continue
        c = rem[i] / den[-1]
        quot[i - deg_d] = c
        for j, b in enumerate(den):
            rem[i - deg_d + j] -= c * b
    trim = lambda xs: tuple(xs[: max((i + 1 for i, v in enumerate(xs) if v), default=0)])
    return trim(quot), trim(rem)


def _poly_mul(p, q):
    out = [Fraction(0)] * (len(p) + len(q) - 1) if p and q else []
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _poly_mod(p, m):
    return _poly_divmod(p, m)[1]


def _poly_gcdext(a: Sequence, b: Sequence) -> tuple[tuple, tuple, tuple]:
    """(g, u, v) with u a + v b = g, over Q."""
    r0, r1 = tuple(map(Fraction, a)), tuple(map(Fraction, b))
    u0, u1 = (Fraction(1),), ()
    v0, v1 = (), (Fraction(1),)
    while r1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, _poly_sub(u0, _poly_mul(q, u1))
        v0, v1 = v1, _poly_sub(v0, _poly_mul(q, v1))
    if r0:
        lead = r0[-1]
        r0 = tuple(c / lead for c in r0)
        u0 = tuple(c / lead for c in u0)
        v0 = tuple(c / lead for c in v0)
    return r0, u0, v0


def _poly_sub(p, q):
    out = list(p) + [Fraction(0)] * max(0, len(q) - len(p))
    for i, c in enumerate(q):
        out[i] -= c
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _crt_idempotent_poly(mu: Sequence, factor: Sequence) -> tuple:
    """h with h = 1 mod factor and h = 0 mod mu/factor (mu squarefree)."""
    g, _ = _poly_divmod(tuple(map(Fraction, mu)), tuple(map(Fraction, factor)))
    gcd, u, _ = _poly_gcdext(g, factor)
    assert len(gcd) == 1, "factor must be coprime to the cofactor"
    return _poly_mod(_poly_mul(u, g), tuple(map(Fraction, mu)))


# ---------------------------------------------------------------------------
# minimal ideals, certified


class Completeness(Enum):
    COMPLETE = "Complete"
    INFINITE_FAMILY = "InfiniteFamilyDetected"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class IdealLattice:
    """All ideals when completeness is Complete; otherwise a partial view.

    The witness pair consists of two distinct ideals exhibiting an infinite
    family (at socle level these are isomorphic minimal ideals with equal
    centralizers; families detected inside a quotient are lifted preimages).
    """

    ideals: tuple[Subspace, ...]
    completeness: Completeness
    witness: tuple[Subspace, Subspace] | None = None


def _random_combo(rng: random.Random, mats: list, n: int) -> list:
    out = [[0] * n for _ in range(n)]
    for m in mats:
        c = rng.randint(-9, 9)
        if c:
            for i in range(n):
                for j in range(n):
                    if m[i][j]:
                        out[i][j] += c * m[i][j]
    return out


def _simplicity(gens: list, dim: int, rng: random.Random, tries: int):
    """'simple' | ('proper', rows) | None (= could not certify)."""
    if dim == 1:
        return "simple"
    for i in range(dim):
        w = _spin([_unit(dim, i)], gens, dim)
        if 0 < len(w) < dim:
            return ("proper", w)
    env = _envelope(gens, dim)
    gens_t = [transpose(g) for g in gens]
    for _ in range(tries):
        z = _random_combo(rng, env, dim)
        cp = char_poly(z)
        if all(c == 0 for c in cp[:-1]):
            continue
        for f, _mult in _factor_poly(cp):
            if len(f) - 1 == dim:
                # irreducible characteristic polynomial: no invariant subspace
                return "simple"
            ker = nullspace(poly_eval_matrix(f, z), dim)
            if len(ker) != len(f) - 1:
                continue  # not minimal nullity; this factor certifies nothing
            w = _spin([ker[0]], gens, dim)
            if len(w) < dim:
                return ("proper", w)
            ker_t = nullspace(poly_eval_matrix(f, transpose(z)), dim)
            wd = _spin([ker_t[0]], gens_t, dim)
            if len(wd) == dim:
                # Norton's criterion: full spins on both sides at minimal
                # nullity rule out proper invariant subspaces
                return "simple"
            ann = rref(nullspace([list(r) for r in wd], dim))
            return ("proper", ann)
    return None


def _find_simple_inside(rows: tuple[Vec, ...], gens: list, rng, tries):
    """A certified-simple submodule inside span(rows), in ambient rows; or None."""
    cur_rows = rows
    cur_gens = [_restrict(g, rows) for g in gens]
    while True:
        res = _simplicity(cur_gens, len(cur_rows), rng, tries)
        if res == "simple":
            return cur_rows
        if res is None:
            return None
        _, inner = res
        cur_rows = _compose_rows(cur_rows, inner)
        cur_gens = [_restrict(g, cur_rows) for g in gens]


def _module_hom_nonzero(gens_a: list, gens_b: list, da: int, db: int) -> bool:
    """Is Hom(A, B) nonzero for modules given by parallel generator actions?"""
    rows = []
    for ga, gb in zip(gens_a, gens_b):
        # phi ga = gb phi, phi is db x da
        for i in range(db):
            for j in range(da):
                row = [0] * (db * da)
                for k in range(da):
                    if ga[k][j]:
                        row[i * da + k] += ga[k][j]
                for k in range(db):
                    if gb[i][k]:
                        row[k * da + j] -= gb[i][k]
                if any(row):
                    rows.append(row)
    if not rows:
        return da > 0 and db > 0
    return len(nullspace(rows, db * da)) > 0


def _minimal_ideals(algebra: LieAlgebra, rng: random.Random, tries: int):
    """(atoms, Completeness, witness): all minimal ideals, certified."""
    n = algebra.dim
    ad_mats = [algebra.ad_basis(i) for i in range(n)]
    env = _envelope(ad_mats, n)
    radical = _trace_radical(env, n)
    soc_rows = _annihilator_rows(radical, n)
    ad_soc = [_restrict(m, soc_rows) for m in ad_mats]
    d = len(soc_rows)

    components = _isotypic_components(ad_soc, d, rng, tries)
    if components is None:
        return [], Completeness.UNKNOWN, None

    atoms = []
    for comp in components:
        comp_ambient = _compose_rows(soc_rows, comp)
        gens_c = [_restrict(m, comp_ambient) for m in ad_mats]
        res = _simplicity(gens_c, len(comp_ambient), rng, tries)
        if res == "simple":
            atoms.append(Subspace(n, comp_ambient))
            continue
        if res is None:
            return [], Completeness.UNKNOWN, None
        # a proper submodule inside one isotypic component: the component has
        # multiplicity >= 2, so its minimal submodules form an infinite family
        _, inner = res
        wit = _witness_pair(algebra, comp_ambient, inner, gens_c, ad_mats, rng, tries)
        if wit is None:
            return [], Completeness.UNKNOWN, None
        return [], Completeness.INFINITE_FAMILY, wit
    return atoms, Completeness.COMPLETE, None


def _isotypic_components(ad_soc: list, d: int, rng, tries):
    """Split the socle into isotypic components; rref rows each, or None."""
    from .linalg import solve_commutant

    endo = solve_commutant(ad_soc, d)
    if len(endo) == 1:
        return [Subspace.whole(d).rows]
    zcent = _centre_of_span(endo, d)
    if len(zcent) == 1:
        return [Subspace.whole(d).rows]
    for _ in range(tries):
        z = _random_combo(rng, zcent, d)
        mu = min_poly_of_matrix(z)
        if len(mu) - 1 != len(zcent):
            continue  # z does not generate the centre; retry
        factors = _factor_poly(mu)
        comps = []
        for f, _m in factors:
            h = _crt_idempotent_poly(mu, f)
            e = poly_eval_matrix(h, z)
            comps.append(column_space(e))
        assert sum(len(c) for c in comps) == d
        return comps
    return None


def _centre_of_span(mats: list, n: int) -> list:
    """{z in span(mats) : z m = m z for all m}, as matrices."""
    k = len(mats)
    rows = []
    for m in mats:
        comms = [mat_sub(mat_mul(b, m), mat_mul(m, b)) for b in mats]
        for pos in range(n * n):
            row = [flatten(c)[pos] for c in comms]
            if any(row):
                rows.append(row)
    if not rows:
        return mats
    out = []
    for sol in nullspace(rows, k):
        acc = [[0] * n for _ in range(n)]
        for c, b in zip(sol, mats):
            if c:
                for i in range(n):
                    for j in range(n):
                        if b[i][j]:
                            acc[i][j] += c * b[i][j]
        out.append(acc)
    return out


def _witness_pair(algebra, comp_ambient, inner, gens_c, ad_mats, rng, tries):
    """Two distinct isomorphic minimal ideals with equal centralizers, or None."""
    n = algebra.dim
    first_rows = _compose_rows(comp_ambient, inner)
    w1 = _find_simple_inside(first_rows, ad_mats, rng, tries)
    if w1 is None:
        return None
    s1 = Subspace(n, w1)
    candidates = [r for r in comp_ambient] + [
        tuple(rng.randint(-3, 3) for _ in range(n)) for _ in range(tries)
    ]
    for v in candidates:
        if s1.contains(v) or not Subspace(n, comp_ambient).contains(v):
            continue
        spun = _spin([tuple(v)], ad_mats, n)
        w2 = _find_simple_inside(spun, ad_mats, rng, tries)
        if w2 is None or w2 == w1 or len(w2) != len(w1):
            continue
        s2 = Subspace(n, w2)
        gens1 = [_restrict(m, w1) for m in ad_mats]
        gens2 = [_restrict(m, w2) for m in ad_mats]
        if not _module_hom_nonzero(gens1, gens2, len(w1), len(w2)):
            continue
        if centralizer(algebra, s1) != centralizer(algebra, s2):
            continue
        return (s1, s2)
    return None


# ---------------------------------------------------------------------------
# the ideal lattice


@dataclass(frozen=True)
class EnumerationBudget:
    max_dim: int = 10
    tries: int = 12
    seed: int = 20259


def ideal_lattice(algebra: LieAlgebra, budget: EnumerationBudget | None = None) -> IdealLattice:
    """Enumerate all ideals, flag an infinite family, or give up explicitly.

    Every nonzero ideal contains a minimal one, so the lattice is the union,
    over minimal ideals m, of preimages of the lattice of the quotient by m.
    The recursion is complete whenever every minimal-ideal computation
    certifies completeness along the way.
    """
    budget = budget or EnumerationBudget()
    if algebra.dim > budget.max_dim:
        raise ValueError(f"dimension {algebra.dim} exceeds the enumeration bound {budget.max_dim}")
    rng = random.Random(budget.seed)
    return _lattice_rec(algebra, rng, budget.tries)


def _lattice_rec(algebra: LieAlgebra, rng, tries) -> IdealLattice:
    n = algebra.dim
    atoms, status, witness = _minimal_ideals(algebra, rng, tries)
    if status is not Completeness.COMPLETE:
        return IdealLattice((), status, witness)
    found: dict[tuple, Subspace] = {}

    def put(s: Subspace):
        found.setdefault(s.rows, s)

    put(Subspace.zero(n))
    for atom in atoms:
        if atom.dim == n:
            put(atom)
            continue
        quot, lift, _project = quotient_algebra(algebra, atom)
        sub = _lattice_rec(quot, rng, tries)
        if sub.completeness is not Completeness.COMPLETE:
            lifted = None
            if sub.witness is not None:
                lifted = tuple(
                    Subspace(n, rref(list(atom.rows) + [lift(r) for r in w.rows]))
                    for w in sub.witness
                )
            return IdealLattice((), sub.completeness, lifted)
        for ideal in sub.ideals:
            rows = list(atom.rows) + [lift(r) for r in ideal.rows]
            put(Subspace(n, rref(rows)))
    ordered = tuple(sorted(found.values(), key=lambda s: (s.dim, s.rows)))
    return IdealLattice(ordered, Completeness.COMPLETE, None)


# ---------------------------------------------------------------------------
# decomposability via the commuting-projection ring


def centroid(algebra: LieAlgebra) -> list:
    """Basis of {X : X ad(v) = ad(v) X for all v} = End of the adjoint module."""
    from .linalg import solve_commutant

    return solve_commutant([algebra.ad_basis(i) for i in range(algebra.dim)], algebra.dim)


def _decomposability(algebra: LieAlgebra, rng: random.Random, tries: int):
    """('decomposable', (U, W)) | ('indecomposable', reason) | ('unknown',).

    The algebra is a sum of two commuting nonzero ideals iff its centroid
    contains a nontrivial idempotent; when the centroid is a local ring no
    such idempotent exists.
    """
    n = algebra.dim
    cen = centroid(algebra)
    if len(cen) == 1:
        return ("indecomposable", "the centroid is Q, hence local")
    radical = _trace_radical(cen, n)
    rad_rref = rref([flatten(m) for m in radical])
    ss_dim = len(cen) - len(rad_rref)
    if ss_dim == 1:
        return ("indecomposable", "the centroid is local with residue field Q")
    for a in cen:
        for b in cen:
            comm = mat_sub(mat_mul(a, b), mat_mul(b, a))
            if not is_zero_vec(reduce_vector(rad_rref, flatten(comm))):
                return ("unknown",)  # noncommutative semisimple quotient
    for _ in range(tries):
        z = _random_combo(rng, cen, n)
        # minimal polynomial of z in centroid / radical
        stack: list[Vec] = []
        power = identity_matrix(n)
        builder = SpanBuilder(n * n, list(rad_rref))
        base = builder.dim
        reduced_stack: list[Vec] = []
        while True:
            red = reduce_vector(rad_rref, flatten(power))
            if not builder.add(red):
                coeffs = dependence(reduced_stack, red)
                mu = tuple(coeffs + [Fraction(1)])
                break
            reduced_stack.append(red)
            power = mat_mul(power, z)
        if len(mu) - 1 != ss_dim:
            continue  # z does not generate the residue algebra; retry
        factors = _factor_poly(mu)
        if len(factors) == 1 and factors[0][1] == 1:
            return (
                "indecomposable",
                f"the centroid is local with residue field of degree {ss_dim}",
            )
        h = _crt_idempotent_poly(mu, factors[0][0])
        e = poly_eval_matrix(h, z)
        for _lift in range(24):
            if mat_eq(mat_mul(e, e), e):
                break
            e2 = mat_mul(e, e)
            e = mat_sub(mat_scale(e2, 3), mat_scale(mat_mul(e2, e), 2))
        else:
            continue
        u = Subspace(n, column_space(e))
        w = Subspace(n, rref(nullspace(e, n)))
        if u.is_zero() or w.is_zero():
            continue
        return ("decomposable", (u, w))
    return ("unknown",)


# ---------------------------------------------------------------------------
# the presentability decision


@dataclass(frozen=True)
class IdealTrace:
    ideal: Subspace
    centralizer: Subspace
    sum_dim: int


@dataclass(frozen=True)
class LieResult:
    answer: Answer
    certificate: LieCertificate | None
    trace: tuple[IdealTrace, ...]
    lattice: IdealLattice | None
    note: str = ""

    def to_json(self, algebra: LieAlgebra) -> dict:
        return {
            "answer": self.answer.value,
            "certificate": self.certificate.to_json(algebra) if self.certificate else None,
            "note": self.note,
            "ideal_trace": [
                {
                    "ideal_dim": t.ideal.dim,
                    "centralizer_dim": t.centralizer.dim,
                    "span_dim": t.sum_dim,
                }
                for t in self.trace
            ],
            "lattice_completeness": self.lattice.completeness.value if self.lattice else None,
        }


def _accept_or_die(algebra: LieAlgebra, cert: LieCertificate) -> LieCertificate:
    ok, reason = verify_product_certificate(algebra, cert)
    if not ok:
        raise InternalVerificationError(f"produced certificate failed its re-check: {reason}")
    return cert


def lie_presentable(algebra: LieAlgebra, budget: EnumerationBudget | None = None) -> LieResult:
    """Decide whether two commuting nonzero subalgebras sum onto the algebra.

    YES answers carry a certificate that has been re-verified; NO answers
    carry the per-ideal trace (finite lattice) or a locality argument for
    the centroid (infinite lattice).  UNKNOWN is returned rather than an
    uncertified claim.
    """
    problem = validate(algebra)
    if problem is not None:
        raise InvalidAlgebra(problem)
    budget = budget or EnumerationBudget()
    n = algebra.dim
    whole = Subspace.whole(n)

    z = centre(algebra)
    if z.dim > 0:
        cert = _accept_or_die(algebra, LieCertificate(z, whole))
        return LieResult(Answer.YES, cert, (), None, "the centre is nonzero")

    lattice = ideal_lattice(algebra, budget)
    if lattice.completeness is Completeness.COMPLETE:
        entries = []
        for ideal in lattice.ideals:
            if ideal.is_zero():
                continue
            cent = centralizer(algebra, ideal)
            sum_dim = ideal.add(cent).dim
            entries.append(IdealTrace(ideal, cent, sum_dim))
            if cent.dim > 0 and sum_dim == n:
                cert = _accept_or_die(algebra, LieCertificate(ideal, cent))
                return LieResult(
                    Answer.YES, cert, tuple(entries), lattice,
                    "an ideal and its centralizer span the algebra",
                )
        return LieResult(
            Answer.NO, None, tuple(entries), lattice,
            "every nonzero ideal fails: its centralizer does not complement it",
        )

    if lattice.completeness is Completeness.INFINITE_FAMILY:
        rng = random.Random(budget.seed + 1)
        outcome = _decomposability(algebra, rng, budget.tries)
        if outcome[0] == "decomposable":
            u, w = outcome[1]
            cert = _accept_or_die(algebra, LieCertificate(u, w))
            return LieResult(
                Answer.YES, cert, (), lattice,
                "a centroid idempotent splits the algebra into two commuting ideals",
            )
        if outcome[0] == "indecomposable":
            entries = []
            if lattice.witness:
                for wit in lattice.witness:
                    cent = centralizer(algebra, wit)
                    entries.append(IdealTrace(wit, cent, wit.add(cent).dim))
            return LieResult(
                Answer.NO, None, tuple(entries), lattice,
                "infinitely many ideals, but the centre is zero and "
                + outcome[1]
                + "; no pair of commuting complementary ideals exists",
            )
    return LieResult(Answer.UNKNOWN, None, (), lattice, "enumeration budget exhausted")


# ---------------------------------------------------------------------------
# catalogue


def _algebra_from_brackets(labels: Sequence[str], brackets: dict) -> LieAlgebra:
    n = len(labels)
    c = [[[0] * n for _ in range(n)] for _ in range(n)]
    index = {lab: i for i, lab in enumerate(labels)}
    for (x, y), val in brackets.items():
        i, j = index[x], index[y]
        for lab, coeff in val.items():
            k = index[lab]
            c[i][j][k] = Fraction(coeff)
            c[j][i][k] = -Fraction(coeff)
    return LieAlgebra(n, tuple(tuple(tuple(r) for r in p) for p in c), tuple(labels))


def af() -> LieAlgebra:
    """Two-dimensional nonabelian algebra: [g, e] = e."""
    return _algebra_from_brackets(("e", "g"), {("g", "e"): {"e": 1}})


def sol() -> LieAlgebra:
    """[g, e] = e, [g, f] = -f, [e, f] = 0."""
    return _algebra_from_brackets(
        ("e", "f", "g"), {("g", "e"): {"e": 1}, ("g", "f"): {"f": -1}}
    )


def sl2() -> LieAlgebra:
    """[h, e] = 2e, [h, f] = -2f, [e, f] = h."""
    return _algebra_from_brackets(
        ("e", "f", "h"),
        {("h", "e"): {"e": 2}, ("h", "f"): {"f": -2}, ("e", "f"): {"h": 1}},
    )


def heisenberg() -> LieAlgebra:
    """[x, y] = z, z central."""
    return _algebra_from_brackets(("x", "y", "z"), {("x", "y"): {"z": 1}})


def abelian(n: int) -> LieAlgebra:
    if n < 1:
        raise UnsupportedParams("abelian algebra needs dimension >= 1")
    zero = tuple(tuple(tuple(0 for _ in range(n)) for _ in range(n)) for _ in range(n))
    return LieAlgebra(n, zero, tuple(f"a{i}" for i in range(n)))


def _so_basis_matrices(p: int, q: int) -> list:
    n = p + q
    eps = [1] * p + [-1] * q
    mats = []
    for i in range(n):
        for j in range(i + 1, n):
            m = [[0] * n for _ in range(n)]
            m[i][j] = eps[i]
            m[j][i] = -eps[j]
            mats.append(((i, j), m))
    return mats


def so(p: int, q: int = 0) -> LieAlgebra:
    """Matrices X with X^T G + G X = 0 for G = diag(1^p, -1^q), standard basis."""
    n = p + q
    if n < 2:
        raise UnsupportedParams("so(p, q) needs p + q >= 2")
    eps = [1] * p + [-1] * q
    basis = _so_basis_matrices(p, q)
    index = {ij: a for a, (ij, _) in enumerate(basis)}
    dim = len(basis)

    def decompose(y) -> list:
        out = [0] * dim
        for (i, j), a in index.items():
            out[a] = y[i][j] * eps[i]
        return out

    constants = []
    for _, ma in basis:
        plane = []
        for _, mb in basis:
            plane.append(tuple(decompose(mat_sub(mat_mul(ma, mb), mat_mul(mb, ma)))))
        constants.append(tuple(plane))
    labels = tuple(f"M{i}{j}" for (i, j), _ in basis)
    return LieAlgebra(dim, tuple(constants), labels)


def vr_semidirect(p: int, q: int, r: int) -> LieAlgebra:
    """(Q^(p+q))^r x| so(p, q): r commuting copies of the standard module."""
    n0 = p + q
    if n0 < 1 or r < 0:
        raise UnsupportedParams("need p + q >= 1 and r >= 0")
    if n0 < 2:
        if r < 1:
            raise UnsupportedParams("so(1) is trivial; need r >= 1")
        return abelian(r)
    if r == 0:
        return so(p, q)
    base = so(p, q)
    so_dim = base.dim
    so_mats = [m for _, m in _so_basis_matrices(p, q)]
    dim = so_dim + n0 * r
    c = [[[0] * dim for _ in range(dim)] for _ in range(dim)]
    for a in range(so_dim):
        for b in range(so_dim):
            for k, val in enumerate(base.constants[a][b]):
                c[a][b][k] = val
    for a, mat in enumerate(so_mats):
        for copy in range(r):
            for alpha in range(n0):
                col = so_dim + copy * n0 + alpha
                for beta in range(n0):
                    if mat[beta][alpha]:
                        c[a][col][so_dim + copy * n0 + beta] = mat[beta][alpha]
                        c[col][a][so_dim + copy * n0 + beta] = -mat[beta][alpha]
    labels = tuple(base.labels) + tuple(
        f"v{copy}_{alpha}" for copy in range(r) for alpha in range(n0)
    )
    return LieAlgebra(dim, tuple(tuple(tuple(row) for row in plane) for plane in c), labels)


def direct_sum(a: LieAlgebra, b: LieAlgebra) -> LieAlgebra:
    n = a.dim + b.dim
    c = [[[0] * n for _ in range(n)] for _ in range(n)]
    for i in range(a.dim):
        for j in range(a.dim):
            for k, val in enumerate(a.constants[i][j]):
                c[i][j][k] = val
    for i in range(b.dim):
        for j in range(b.dim):
            for k, val in enumerate(b.constants[i][j]):
                c[a.dim + i][a.dim + j][a.dim + k] = val
    labels = tuple(f"L.{s}" for s in a.labels) + tuple(f"R.{s}" for s in b.labels)
    return LieAlgebra(n, tuple(tuple(tuple(r) for r in p) for p in c), labels)


def catalogue(name: str) -> LieAlgebra:
    """Named algebras: af, sol, sl2, heisenberg, abelian(n), so(p,q),
    vr_semidirect(p,q,r); 'A+B' builds a direct sum."""
    name = name.strip()
    if "+" in name:
        left, _, right = name.partition("+")
        return direct_sum(catalogue(left), catalogue(right))
    simple = {"af": af, "sol": sol, "sl2": sl2, "heisenberg": heisenberg}
    if name in simple:
        return simple[name]()
    if name.endswith(")") and "(" in name:
        head, _, argtext = name[:-1].partition("(")
        try:
            args = [int(x) for x in argtext.split(",")] if argtext.strip() else []
        except ValueError:
            raise UnsupportedParams(f"bad parameters in {name!r}") from None
        if head == "abelian" and len(args) == 1:
            return abelian(args[0])
        if head == "so" and len(args) in (1, 2):
            return so(*args)
        if head in ("vr", "vr_semidirect") and len(args) == 3:
            return vr_semidirect(*args)
    raise UnsupportedParams(f"unknown catalogue name {name!r}")


# ---------------------------------------------------------------------------
# JSON interface


def algebra_from_json(obj: dict) -> LieAlgebra:
    """Parse ``{"dim", "basis", "brackets": [{"x","y","value": {label: "p/q"}}]}``.

    Omitted brackets are zero; the antisymmetric completion is applied, and
    conflicting duplicate entries are rejected.
    """
    try:
        dim = int(obj["dim"])
        labels = tuple(obj["basis"])
        entries = list(obj.get("brackets", []))
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"bad algebra object: {exc}") from exc
    if len(labels) != dim or len(set(labels)) != dim:
        raise ValueError("basis must list dim distinct labels")
    index = {lab: i for i, lab in enumerate(labels)}
    c = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
    seen = set()
    for entry in entries:
        try:
            i, j = index[entry["x"]], index[entry["y"]]
            value = {index[lab]: Fraction(text) for lab, text in entry["value"].items()}
        except KeyError as exc:
            raise ValueError(f"unknown basis label {exc}") from exc
        if (i, j) in seen or (j, i) in seen:
            raise ValueError(f"duplicate bracket for ({entry['x']}, {entry['y']})")
        seen.add((i, j))
        if i == j and any(value.values()):
            raise ValueError("[x, x] must be zero")
        for k, val in value.items():
            c[i][j][k] = val
            c[j][i][k] = -val
    algebra = LieAlgebra(
        dim, tuple(tuple(tuple(r) for r in p) for p in c), labels
    )
    return algebra


def algebra_to_json(algebra: LieAlgebra) -> dict:
    brackets = []
    for i in range(algebra.dim):
        for j in range(i + 1, algebra.dim):
            row = algebra.constants[i][j]
            if any(row):
                brackets.append(
                    {
                        "x": algebra.labels[i],
                        "y": algebra.labels[j],
                        "value": {
                            algebra.labels[k]: str(Fraction(v))
                            for k, v in enumerate(row)
                            if v
                        },
                    }
                )
    return {"dim": algebra.dim, "basis": list(algebra.labels), "brackets": brackets}
