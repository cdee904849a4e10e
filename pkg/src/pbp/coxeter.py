"""Coxeter systems: exact bilinear form, signature, classification, verdicts.

The form attached to a Coxeter matrix has entries -cos(pi/m[i][j]); all of
them live in one real cyclotomic field, so rank and sign computations are
exact.  Floats never influence a classification.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Sequence

from .algebraic import (
    AlgebraicReal,
    CycloNumber,
    RealCyclotomicField,
    cos_pi_over_minpoly,
    poly_negate_variable,
)
from .verdict import Answer, InternalVerificationError, TraceEntry, Verdict

INF = math.inf

CITE_FINITE_OUT_OF_SCOPE = (
    "Only infinite groups are in scope for presentability by a product; "
    "this Coxeter group is finite (positive definite form)."
)
CITE_SPLIT_PRODUCT = (
    "The infinite irreducible factors generate commuting infinite subgroups "
    "whose product has finite index, so the group is presentable by a product."
)
CITE_AFFINE = (
    "An irreducible affine Coxeter group on l generators contains a free "
    "abelian subgroup of rank l-1 and finite index (Bourbaki, Lie IV-VI), "
    "hence is presentable by a product."
)
CITE_INDEFINITE = (
    "An irreducible Coxeter group that is neither finite nor affine maps, via "
    "its geometric representation, onto a Zariski-dense subgroup of the "
    "isometry group of its form (Benoist-de la Harpe 2004); that group's Lie "
    "algebra (R^(p+q))^r x| so(p,q) admits no pair of commuting complementary "
    "ideals, so the Coxeter group is not presentable by a product."
)
CITE_FINITE_INDEX = (
    "Presentability by a product is invariant under passage to finite-index "
    "subgroups, so the finite factors do not affect the verdict."
)


@dataclass(frozen=True)
class CoxeterMatrix:
    """Symmetric matrix with 1 on the diagonal and entries in {2,3,...} U {inf}."""

    entries: tuple[tuple[float, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(v) for v in self.entries)
        object.__setattr__(self, "entries", rows)
        n = len(rows)
        if n == 0:
            raise ValueError("empty Coxeter matrix")
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValueError("Coxeter matrix must be square")
            for j, v in enumerate(row):
                if i == j:
                    if v != 1:
                        raise ValueError("diagonal entries must be 1")
                elif v != rows[j][i]:
                    raise ValueError("Coxeter matrix must be symmetric")
                elif v != INF and (not float(v).is_integer() or v < 2):
                    raise ValueError(f"off-diagonal entry {v!r} must be an integer >= 2 or inf")

    @property
    def n(self) -> int:
        return len(self.entries)

    def m(self, i: int, j: int) -> float:
        return self.entries[i][j]

    def submatrix(self, idx: Sequence[int]) -> "CoxeterMatrix":
        return CoxeterMatrix(tuple(tuple(self.entries[i][j] for j in idx) for i in idx))


def coxeter_from_json(obj: dict) -> CoxeterMatrix:
    """Parse ``{"n": 3, "m": [[1,3,2],...]}``; the string "inf" marks infinity."""
    try:
        n = int(obj["n"])
        raw = obj["m"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"bad Coxeter matrix object: {exc}") from exc
    if len(raw) != n:
        raise ValueError("matrix size disagrees with n")
    rows = []
    for row in raw:
        if len(row) != n:
            raise ValueError("matrix size disagrees with n")
        rows.append(tuple(INF if v == "inf" else int(v) for v in row))
    return CoxeterMatrix(tuple(rows))


def components(matrix: CoxeterMatrix) -> list[list[int]]:
    """Connected components of the graph with an edge where m[i][j] >= 3."""
    n = matrix.n
    seen: set[int] = set()
    out: list[list[int]] = []
    for start in range(n):
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        queue = [start]
        while queue:
            i = queue.pop()
            for j in range(n):
                if j not in seen and i != j and matrix.m(i, j) >= 3:
                    seen.add(j)
                    comp.append(j)
                    queue.append(j)
        out.append(sorted(comp))
    return out


# ---------------------------------------------------------------------------
# the bilinear form


@dataclass(frozen=True)
class Signature:
    p: int
    q: int
    r: int

    def __iter__(self):
        return iter((self.p, self.q, self.r))


class SymmetricForm:
    """Exact symmetric form with unit diagonal and off-diagonal entries in [-1, 0]."""

    def __init__(self, rows, views):
        self.rows = tuple(tuple(r) for r in rows)
        self._views = tuple(tuple(v) for v in views)
        self.n = len(self.rows)
        for i in range(self.n):
            if _sign(self.rows[i][i] - 1) != 0:
                raise ValueError("diagonal entries must be exactly 1")
            for j in range(self.n):
                if i != j:
                    if _sign(self.rows[i][j] - self.rows[j][i]) != 0:
                        raise ValueError("form must be symmetric")
                    if _sign(self.rows[i][j]) > 0 or _sign(self.rows[i][j] + 1) < 0:
                        raise ValueError("off-diagonal entries must lie in [-1, 0]")

    @staticmethod
    def from_rational_matrix(rows: Sequence[Sequence]) -> "SymmetricForm":
        rat = [[Fraction(v) for v in row] for row in rows]
        views = [[AlgebraicReal.from_rational(v) for v in row] for row in rat]
        return SymmetricForm(rat, views)

    def entry(self, i: int, j: int) -> AlgebraicReal:
        return self._views[i][j]

    def float_matrix(self) -> list[list[float]]:
        return [[float(self.entry(i, j)) for j in range(self.n)] for i in range(self.n)]


def _sign(x) -> int:
    if isinstance(x, CycloNumber):
        return x.sign()
    return -1 if x < 0 else (1 if x > 0 else 0)


def tits_form(matrix: CoxeterMatrix) -> SymmetricForm:
    """The form with entries -cos(pi/m[i][j]) (value -1 at m = inf)."""
    n = matrix.n
    # cos(pi/m) is rational for m <= 3; only larger labels need the field
    irrational_ms = sorted(
        {
            int(matrix.m(i, j))
            for i in range(n)
            for j in range(n)
            if i != j and matrix.m(i, j) != INF and matrix.m(i, j) >= 4
        }
    )
    index = reduce(math.lcm, irrational_ms, 1)
    field = RealCyclotomicField(index) if irrational_ms else None

    def entry(i, j):
        if i == j:
            return Fraction(1), AlgebraicReal.from_rational(1)
        m = matrix.m(i, j)
        if m == INF:
            return Fraction(-1), AlgebraicReal.from_rational(-1)
        m = int(m)
        if m == 2:
            return Fraction(0), AlgebraicReal.from_rational(0)
        if m == 3:
            return Fraction(-1, 2), AlgebraicReal.from_rational(Fraction(-1, 2))
        value = -(field.two_cos_pi_over(m)) / 2
        poly = poly_negate_variable(cos_pi_over_minpoly(m))
        view = AlgebraicReal.from_poly_near(poly, -math.cos(math.pi / m))
        return value, view

    rows, views = [], []
    for i in range(n):
        row, vrow = [], []
        for j in range(n):
            v, view = entry(i, j)
            if field is not None and isinstance(v, Fraction):
                v = field.rational(v)
            row.append(v)
            vrow.append(view)
        rows.append(row)
        views.append(vrow)
    return SymmetricForm(rows, views)


def signature(form: SymmetricForm) -> Signature:
    """Exact (p, q, r) by symmetric congruence diagonalization.

    Pivot signs are certified by the interval machinery; a vanishing
    diagonal block with nonzero off-diagonal entries is repaired by the
    classical e_i <- e_i + e_j congruence, which creates a pivot.
    """
    n = form.n
    a = [list(row) for row in form.rows]
    p = q = 0
    k = 0
    while k < n:
        piv = next((i for i in range(k, n) if _sign(a[i][i]) != 0), None)
        if piv is None:
            pair = next(
                ((i, j) for i in range(k, n) for j in range(i + 1, n) if _sign(a[i][j]) != 0),
                None,
            )
            if pair is None:
                break  # remaining block is identically zero
            i, j = pair
            for l in range(k, n):
                a[i][l] = a[i][l] + a[j][l]
            for l in range(k, n):
                a[l][i] = a[l][i] + a[l][j]
            continue
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            for row in a:
                row[k], row[piv] = row[piv], row[k]
        d = a[k][k]
        if _sign(d) > 0:
            p += 1
        else:
            q += 1
        for i in range(k + 1, n):
            for j in range(i, n):
                a[i][j] = a[i][j] - a[k][i] * a[k][j] / d
                a[j][i] = a[i][j]
        k += 1
    return Signature(p, q, n - p - q)


# ---------------------------------------------------------------------------
# classification and verdict


FINITE, AFFINE, INDEFINITE = "Finite", "Affine", "Indefinite"


def classify(matrix: CoxeterMatrix) -> list[tuple[list[int], str, Signature]]:
    """Per irreducible component: (vertex set, label, signature of its form)."""
    out = []
    for comp in components(matrix):
        sig = signature(tits_form(matrix.submatrix(comp)))
        if sig.q == 0 and sig.r == 0:
            label = FINITE
        elif sig.q == 0:
            label = AFFINE
            if sig.r != 1:
                raise InternalVerificationError(
                    f"irreducible affine component {comp} has kernel rank {sig.r} != 1"
                )
        else:
            label = INDEFINITE
        out.append((comp, label, sig))
    return out


def coxeter_presentable(matrix: CoxeterMatrix) -> Verdict:
    """Presentability verdict for the Coxeter group of ``matrix``."""
    parts = classify(matrix)
    infinite = [(comp, label, sig) for comp, label, sig in parts if label != FINITE]

    if not infinite:
        return Verdict(
            Answer.NOT_APPLICABLE,
            trace=(TraceEntry("coxeter/finite", CITE_FINITE_OUT_OF_SCOPE),),
        )
    if len(infinite) >= 2:
        return Verdict(
            Answer.YES,
            certificate={
                "kind": "direct-product-of-infinite-factors",
                "factors": [comp for comp, _, _ in infinite[:2]],
            },
            trace=(
                TraceEntry("coxeter/split", CITE_SPLIT_PRODUCT),
                TraceEntry("finite-index", CITE_FINITE_INDEX),
            ),
        )
    comp, label, sig = infinite[0]
    finite_rest = len(infinite) < len(parts)
    extra = (TraceEntry("finite-index", CITE_FINITE_INDEX),) if finite_rest else ()
    if label == AFFINE:
        return Verdict(
            Answer.YES,
            certificate={
                "kind": "virtually-free-abelian",
                "rank": len(comp) - 1,
                "component": comp,
            },
            trace=(TraceEntry("coxeter/affine", CITE_AFFINE),) + extra,
        )
    return Verdict(
        Answer.NO,
        trace=(TraceEntry("coxeter/indefinite", CITE_INDEFINITE),) + extra,
    )


def coxeter_report(matrix: CoxeterMatrix) -> dict:
    """Full JSON-ready report: components, signatures, labels, verdict."""
    parts = classify(matrix)
    verdict = coxeter_presentable(matrix)
    return {
        "components": [
            {"vertices": comp, "label": label, "signature": [sig.p, sig.q, sig.r]}
            for comp, label, sig in parts
        ],
        **verdict.to_json(),
    }


def of_algebra(sig: Signature):
    """Lie algebra (Q^(p+q))^r x| so(p,q) of the isometries fixing the kernel."""
    from . import lie

    if sig.p + sig.q < 1:
        raise ValueError("need p + q >= 1")
    return lie.vr_semidirect(sig.p, sig.q, sig.r)


# ---------------------------------------------------------------------------
# standard diagrams


def _from_edges(n: int, edges: dict[tuple[int, int], float]) -> CoxeterMatrix:
    rows = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
    for (i, j), m in edges.items():
        rows[i][j] = rows[j][i] = m
    return CoxeterMatrix(tuple(tuple(row) for row in rows))


def _path(labels: Sequence[float]) -> CoxeterMatrix:
    n = len(labels) + 1
    return _from_edges(n, {(i, i + 1): m for i, m in enumerate(labels)})


def standard_diagram(name: str) -> CoxeterMatrix:
    """Coxeter matrices of the classical finite and affine diagrams.

    Finite: A1..A8, B2..B8, D4..D8, E6, E7, E8, F4, H3, H4, I2(m).
    Affine: A~1, A~2, C~2, G~2, F~4, E~8.
    """
    name = name.strip()
    if name.startswith("I2(") and name.endswith(")"):
        m = int(name[3:-1])
        if m < 3:
            raise ValueError("I2(m) needs m >= 3")
        return _path([m])
    family, _, rank_text = name.partition("~")
    if _ == "~":  # affine names: letter ~ rank
        key = family + "~" + rank_text
        if key == "A~1":
            return _path([INF])
        if key == "A~2":
            return _from_edges(3, {(0, 1): 3, (1, 2): 3, (0, 2): 3})
        if key == "C~2":
            return _path([4, 4])
        if key == "G~2":
            return _path([6, 3])
        if key == "F~4":
            return _path([3, 3, 4, 3])
        if key == "E~8":
            edges = {(i, i + 1): 3 for i in range(7)}
            edges[(2, 8)] = 3
            return _from_edges(9, edges)
        raise ValueError(f"unknown affine diagram {name!r}")
    family, rank = name[0], int(name[1:]) if name[1:] else 0
    if family == "A" and rank >= 1:
        return _path([3] * (rank - 1)) if rank > 1 else CoxeterMatrix(((1,),))
    if family == "B" and rank >= 2:
        return _path([4] + [3] * (rank - 2))
    if family == "D" and rank >= 4:
        edges = {(0, 2): 3, (1, 2): 3}
        edges.update({(i, i + 1): 3 for i in range(2, rank - 1)})
        return _from_edges(rank, edges)
    if name == "E6":
        return _from_edges(6, {(0, 1): 3, (1, 2): 3, (2, 3): 3, (3, 4): 3, (2, 5): 3})
    if name == "E7":
        edges = {(i, i + 1): 3 for i in range(5)}
        edges[(2, 6)] = 3
        return _from_edges(7, edges)
    if name == "E8":
        edges = {(i, i + 1): 3 for i in range(6)}
        edges[(2, 7)] = 3
        return _from_edges(8, edges)
    if name == "F4":
        return _path([3, 4, 3])
    if name == "H3":
        return _path([5, 3])
    if name == "H4":
        return _path([5, 3, 3])
    raise ValueError(f"unknown diagram {name!r}")
