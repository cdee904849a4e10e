import math
import random
from fractions import Fraction

import numpy as np
import pytest
import sympy

from pbp.coxeter import (
    AFFINE,
    FINITE,
    INDEFINITE,
    INF,
    CoxeterMatrix,
    Signature,
    SymmetricForm,
    classify,
    components,
    coxeter_from_json,
    coxeter_presentable,
    coxeter_report,
    signature,
    standard_diagram,
    tits_form,
)
from pbp.verdict import Answer

FINITE_NAMES = (
    [f"A{n}" for n in range(1, 9)]
    + [f"B{n}" for n in range(2, 9)]
    + [f"D{n}" for n in range(4, 9)]
    + ["E6", "E7", "E8", "F4", "H3", "H4"]
    + [f"I2({m})" for m in range(3, 13)]
)
AFFINE_NAMES = ["A~1", "A~2", "C~2", "G~2", "F~4", "E~8"]


def triangle(a, b, c):
    return CoxeterMatrix(((1, a, b), (a, 1, c), (b, c, 1)))


def eig_signature(form, tol=1e-9):
    vals = np.linalg.eigvalsh(np.array(form.float_matrix()))
    p = int((vals > tol).sum())
    q = int((vals < -tol).sum())
    return Signature(p, q, len(vals) - p - q)


# --- form construction --------------------------------------------------------


def test_tits_form_entries():
    form = tits_form(triangle(3, 2, INF))
    assert form.entry(0, 1).exact == Fraction(-1, 2)
    assert form.entry(0, 2).exact == 0
    assert form.entry(1, 2).exact == -1


def test_tits_form_pentagon_entry():
    form = tits_form(standard_diagram("I2(5)"))
    view = form.entry(0, 1)
    assert view.exact is None
    # minimal polynomial of -cos(pi/5), i.e. 4x^2 + 2x - 1
    assert view.poly == (-1, 2, 4)
    assert math.isclose(float(view), -math.cos(math.pi / 5), abs_tol=1e-12)


def test_components():
    all2 = CoxeterMatrix(((1, 2, 2), (2, 1, 2), (2, 2, 1)))
    assert components(all2) == [[0], [1], [2]]
    a3 = standard_diagram("A3")
    assert components(a3) == [[0, 1, 2]]
    two_a2 = CoxeterMatrix(
        ((1, 3, 2, 2), (3, 1, 2, 2), (2, 2, 1, 3), (2, 2, 3, 1))
    )
    assert components(two_a2) == [[0, 1], [2, 3]]


# --- signature ----------------------------------------------------------------


def test_signature_all_minus_one():
    form = SymmetricForm.from_rational_matrix(
        [[1, -1, -1], [-1, 1, -1], [-1, -1, 1]]
    )
    assert signature(form) == Signature(2, 1, 0)
    # characteristic polynomial is exactly (x+1)(x-2)^2
    x = sympy.Symbol("x")
    cp = sympy.Matrix([[1, -1, -1], [-1, 1, -1], [-1, -1, 1]]).charpoly(x).as_expr()
    assert sympy.expand(cp - (x + 1) * (x - 2) ** 2) == 0


def test_signature_affine_a1():
    form = SymmetricForm.from_rational_matrix([[1, -1], [-1, 1]])
    assert signature(form) == Signature(1, 0, 1)


def test_signature_a3_positive_definite():
    form = tits_form(standard_diagram("A3"))
    assert eig_signature(form) == Signature(3, 0, 0)  # oracle
    assert signature(form) == Signature(3, 0, 0)


def test_signature_zero_diagonal_repair():
    # after the first pivot the trailing block is [[0,-1],[-1,0]], which has
    # no diagonal pivot and forces the e_i <- e_i + e_j repair step
    rows = [[1, -1, -1], [-1, 1, 0], [-1, 0, 1]]
    form = SymmetricForm.from_rational_matrix(rows)
    assert signature(form) == eig_signature(form) == Signature(2, 1, 0)


def test_signature_matches_oracle_on_random_admissible():
    rng = random.Random(20259)
    checked = 0
    for _ in range(200):
        n = rng.randint(2, 5)
        rows = [[Fraction(1)] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                v = -Fraction(rng.randint(0, 8), 8)
                rows[i][j] = rows[j][i] = v
        form = SymmetricForm.from_rational_matrix(rows)
        sig = signature(form)
        assert sig.p + sig.q + sig.r == n
        vals = np.linalg.eigvalsh(np.array(form.float_matrix()))
        if min(abs(vals)) > 1e-6:  # oracle decisive away from zero eigenvalues
            assert sig == eig_signature(form)
            checked += 1
    assert checked > 100


# --- classification -----------------------------------------------------------


def test_classify_triangle_examples():
    assert classify(standard_diagram("A3"))[0][1] == FINITE
    assert classify(triangle(3, 3, 3))[0][1] == AFFINE
    comp, label, sig = classify(triangle(3, 3, 7))[0]
    assert label == INDEFINITE
    assert (sig.p, sig.q, sig.r) == (2, 1, 0)


@pytest.mark.parametrize("name", FINITE_NAMES)
def test_finite_catalogue(name):
    matrix = standard_diagram(name)
    parts = classify(matrix)
    assert len(parts) == 1, f"{name} should be irreducible"
    comp, label, sig = parts[0]
    assert label == FINITE
    assert (sig.p, sig.q, sig.r) == (matrix.n, 0, 0)
    assert eig_signature(tits_form(matrix)) == sig


@pytest.mark.parametrize("name", AFFINE_NAMES)
def test_affine_catalogue(name):
    matrix = standard_diagram(name)
    parts = classify(matrix)
    assert len(parts) == 1, f"{name} should be irreducible"
    comp, label, sig = parts[0]
    assert label == AFFINE
    assert sig.r == 1 and sig.q == 0
    assert eig_signature(tits_form(matrix)) == sig


def test_dihedral_dichotomy():
    for m in range(3, 13):
        sig = classify(standard_diagram(f"I2({m})"))[0][2]
        assert (sig.p, sig.q, sig.r) == (2, 0, 0)
    sig = classify(standard_diagram("A~1"))[0][2]
    assert (sig.p, sig.r) == (1, 1)


# --- appendix-style random form properties -------------------------------------


def det3(rows):
    a, b, c = rows[0]
    d, e, f = rows[1]
    g, h, i = rows[2]
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def random_admissible(rng, n):
    rows = [[Fraction(1)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            den = rng.randint(1, 12)
            v = -Fraction(rng.randint(0, den), den)
            rows[i][j] = rows[j][i] = v
    return rows


def is_irreducible(rows):
    n = len(rows)
    seen = {0}
    queue = [0]
    while queue:
        i = queue.pop()
        for j in range(n):
            if j not in seen and i != j and rows[i][j] != 0:
                seen.add(j)
                queue.append(j)
    return len(seen) == n


def test_three_by_three_p_at_least_two():
    rng = random.Random(33033)
    for _ in range(250):
        rows = random_admissible(rng, 3)
        sig = signature(SymmetricForm.from_rational_matrix(rows))
        assert sig.p >= 2
        if det3(rows) > 0:
            assert sig.p == 3


def test_four_by_four_irreducible_p_at_least_three():
    rng = random.Random(44044)
    done = 0
    while done < 250:
        rows = random_admissible(rng, 4)
        if not is_irreducible(rows):
            continue
        done += 1
        sig = signature(SymmetricForm.from_rational_matrix(rows))
        assert sig.p >= 3


# --- verdicts -----------------------------------------------------------------


def test_verdict_affine_triangle():
    v = coxeter_presentable(triangle(3, 3, 3))
    assert v.answer == Answer.YES
    assert v.certificate["kind"] == "virtually-free-abelian"
    assert v.certificate["rank"] == 2


def test_verdict_indefinite_triangle():
    v = coxeter_presentable(triangle(3, 3, 7))
    assert v.answer == Answer.NO
    assert any("Zariski" in t.cite for t in v.trace)


def test_verdict_finite():
    v = coxeter_presentable(standard_diagram("A3"))
    assert v.answer == Answer.NOT_APPLICABLE


def test_verdict_two_infinite_components():
    # disjoint union of two affine A~1 diagrams
    m = CoxeterMatrix(
        ((1, INF, 2, 2), (INF, 1, 2, 2), (2, 2, 1, INF), (2, 2, INF, 1))
    )
    v = coxeter_presentable(m)
    assert v.answer == Answer.YES
    assert v.certificate["kind"] == "direct-product-of-infinite-factors"


def test_verdict_infinite_plus_finite_component():
    # A~1 x A1: verdict follows the affine part, finite factor dropped
    m = CoxeterMatrix(((1, INF, 2), (INF, 1, 2), (2, 2, 1)))
    v = coxeter_presentable(m)
    assert v.answer == Answer.YES
    assert any(t.rule == "finite-index" for t in v.trace)


def test_report_and_json():
    matrix = coxeter_from_json({"n": 3, "m": [[1, 3, 2], [3, 1, 3], [2, 3, 1]]})
    report = coxeter_report(matrix)
    assert report["answer"] == "NOT_APPLICABLE"  # this is A3, finite
    assert report["components"][0]["label"] == FINITE

    aff = coxeter_from_json({"n": 2, "m": [[1, "inf"], ["inf", 1]]})
    assert coxeter_report(aff)["answer"] == "YES"


def test_json_rejects_bad_input():
    with pytest.raises(ValueError):
        coxeter_from_json({"n": 2, "m": [[1, 1], [1, 1]]})
    with pytest.raises(ValueError):
        coxeter_from_json({"n": 2, "m": [[1, 3]]})
    with pytest.raises(ValueError):
        CoxeterMatrix(((1, 3), (4, 1)))
