"""Baumslag-Solitar groups BS(m, n) = <s, t | t s^m t^-1 = s^n>.

Words reduce to a canonical pinch-free form: on top of removing the pinches
t s^(cm) t^-1 and t^-1 s^(cn) t, interior s-exponents are normalized into
{0..|m|-1} after t and {0..|n|-1} after t^-1 by pushing multiples to the
left.  Equality of group elements is then a syntactic comparison.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .presentations import (
    AbelianInvariants,
    FinitePresentation,
    abelianization,
    coset_enumerate,
    reidemeister_schreier_data,
)
from .verdict import Answer, TraceEntry, Verdict
from .words import Word, format_word

S, T = 1, 2  # letter values for the two generators

CITE_Z2 = "BS(1,1) is free abelian of rank 2, so its centre is infinite."
CITE_KLEIN = (
    "BS(1,-1) is the Klein-bottle group; the square of the stable letter "
    "generates an infinite central subgroup."
)
CITE_WITNESS = (
    "For |m| = |n| >= 2 the kernel of s -> (c, 1), t -> (1, d) in C_m x C_2 "
    "has index 2|m| and is the direct product of the infinite cyclic group "
    "on s^m with a free group of rank 2|m| - 1."
)
CITE_FINITE_INDEX = (
    "Presentability by a product is invariant under passage to finite-index "
    "subgroups; a finite-index product of two infinite groups suffices."
)
CITE_SOLUBLE = (
    "BS(1,n) with |n| >= 2 embeds as a Zariski-dense subgroup of the affine "
    "group of the line, whose Lie algebra has no pair of commuting "
    "complementary ideals; Zariski-dense subgroups of such groups are not "
    "presentable by products."
)
CITE_POWERS = (
    "For 1 < |m| < |n| the group is a Powers group (de la Harpe-Preaux 2011), "
    "and Powers groups are not presentable by products."
)
CITE_MOLDAVANSKII = (
    "A deficiency-one group presentable by a product is infinite cyclic or "
    "virtually F_k x Z, hence has a normal infinite cyclic subgroup; by "
    "Moldavanskii's classification BS(m,n) has one only when |m| = |n|."
)
CITE_SYMMETRY = "BS(m,n) and BS(n,m) are isomorphic (exchange the stable letter's direction)."


class ZeroParameter(ValueError):
    """BS(m, n) requires both parameters nonzero."""


@dataclass(frozen=True)
class BSGroup:
    m: int
    n: int

    def __post_init__(self):
        if self.m == 0 or self.n == 0:
            raise ZeroParameter("BS(m, n) needs m != 0 and n != 0")

    def presentation(self) -> FinitePresentation:
        sgn = lambda k: [S] * k if k >= 0 else [-S] * (-k)
        relator = Word([T] + sgn(self.m) + [-T] + sgn(-self.n))
        return FinitePresentation(2, (relator,), ("s", "t"))


def s_word(k: int) -> Word:
    return Word([S] * k if k >= 0 else [-S] * (-k))


def t_word(k: int) -> Word:
    return Word([T] * k if k >= 0 else [-T] * (-k))


# ---------------------------------------------------------------------------
# Britton normal forms


@dataclass(frozen=True)
class BrittonForm:
    """s^k0 t^(e1) s^(k1) ... t^(el) s^(kl), pinch-free with normalized k_i."""

    group: BSGroup
    k0: int
    tail: tuple[tuple[int, int], ...]  # (epsilon, following s-exponent)

    def __post_init__(self):
        m, n = self.group.m, self.group.n
        for idx, (eps, k) in enumerate(self.tail):
            if eps not in (1, -1):
                raise ValueError("epsilon must be +-1")
            bound = abs(m) if eps == 1 else abs(n)
            if not 0 <= k < bound:
                raise ValueError(f"exponent {k} out of range at position {idx}")
        for (e1, k1), (e2, _) in zip(self.tail, self.tail[1:]):
            if k1 == 0 and e1 == -e2:
                raise ValueError("form contains a pinch")

    @property
    def t_length(self) -> int:
        return len(self.tail)

    def is_identity(self) -> bool:
        return self.k0 == 0 and not self.tail

    def as_word(self) -> Word:
        letters: list[int] = list(s_word(self.k0).raw)
        for eps, k in self.tail:
            letters.append(T if eps == 1 else -T)
            letters.extend(s_word(k).raw)
        return Word(letters)

    def __repr__(self):
        return f"BrittonForm({format_word(self.as_word(), ('s', 't'))!r} in BS{(self.group.m, self.group.n)})"


def _parts_from_word(word: Word) -> tuple[int, list[list[int]]]:
    k0 = 0
    tail: list[list[int]] = []
    for letter in word.raw:
        if abs(letter) == S:
            if tail:
                tail[-1][1] += 1 if letter > 0 else -1
            else:
                k0 += 1 if letter > 0 else -1
        else:
            tail.append([1 if letter > 0 else -1, 0])
    return k0, tail


def _normalize_pass(k0: int, tail: list[list[int]], m: int, n: int) -> int:
    # push multiples of the associated subgroup's exponent to the left
    for i in range(len(tail) - 1, -1, -1):
        eps, k = tail[i]
        inner, outer = (m, n) if eps == 1 else (n, m)
        rho = k % abs(inner)
        if rho != k:
            q = (k - rho) // inner
            tail[i][1] = rho
            if i == 0:
                k0 += q * outer
            else:
                tail[i - 1][1] += q * outer
    return k0


def _find_pinch(tail: list[list[int]], m: int, n: int) -> int | None:
    for i in range(len(tail) - 1):
        eps, k = tail[i]
        if k == 0 and eps == -tail[i + 1][0]:
            return i
    return None


def britton_reduce(group: BSGroup, word: Word) -> BrittonForm:
    """Canonical pinch-free form of a word; equal elements compare equal."""
    m, n = group.m, group.n
    k0, tail = _parts_from_word(word)
    while True:
        k0 = _normalize_pass(k0, tail, m, n)
        i = _find_pinch(tail, m, n)
        if i is None:
            break
        eps, k = tail[i]
        assert k == 0
        # t t^-1 (or t^-1 t) cancels; the trailing exponent merges left
        carry = tail[i + 1][1]
        del tail[i : i + 2]
        if i == 0:
            k0 += carry
        else:
            tail[i - 1][1] += carry
    return BrittonForm(group, k0, tuple((e, k) for e, k in tail))


def britton_reduce_random(group: BSGroup, word: Word, rng: random.Random) -> BrittonForm:
    """Reduce by applying applicable rewrites in random order; same result."""
    m, n = group.m, group.n
    k0, tail = _parts_from_word(word)
    while True:
        moves = []
        for i, (eps, k) in enumerate(tail):
            inner = m if eps == 1 else n
            if k % abs(inner) != k:
                moves.append(("push", i))
            if k % abs(inner) == 0 and i + 1 < len(tail) and tail[i + 1][0] == -eps:
                moves.append(("pinch", i))
        if not moves:
            break
        kind, i = rng.choice(moves)
        eps, k = tail[i]
        inner, outer = (m, n) if eps == 1 else (n, m)
        if kind == "push":
            rho = k % abs(inner)
            q = (k - rho) // inner
            tail[i][1] = rho
            if i == 0:
                k0 += q * outer
            else:
                tail[i - 1][1] += q * outer
        else:
            c = k // inner
            carry = c * outer + tail[i + 1][1]
            del tail[i : i + 2]
            if i == 0:
                k0 += carry
            else:
                tail[i - 1][1] += carry
    k0 = _normalize_pass(k0, tail, m, n)
    return BrittonForm(group, k0, tuple((e, k) for e, k in tail))


# ---------------------------------------------------------------------------
# the finite quotient C_m x C_2 and its kernel


def pi_image(group: BSGroup, word: Word) -> tuple[int, int]:
    """Image of a word under s -> (c, 1), t -> (1, d) in C_|m| x C_2."""
    if abs(group.m) != abs(group.n):
        raise ValueError("the map to C_m x C_2 needs |m| = |n|")
    m = abs(group.m)
    return (word.exponent_sum(0) % m, word.exponent_sum(1) % 2)


def _cycle(k: int) -> tuple[int, ...]:
    return tuple((i + 1) % k for i in range(k))


def _embed(perm: Sequence[int], offset: int, degree: int) -> tuple[int, ...]:
    out = list(range(degree))
    for i, j in enumerate(perm):
        out[offset + i] = offset + j
    return tuple(out)


def cm_x_c2_images(m: int) -> list[tuple[int, ...]]:
    """Permutation images of s and t for the quotient C_m x C_2."""
    degree = m + 2
    return [_embed(_cycle(m), 0, degree), _embed((1, 0), m, degree)]


@dataclass(frozen=True)
class SubgroupWitness:
    """Generating data for the index-2|m| subgroup Z x F_(2|m|-1).

    T lists the free basis s^i t s^-i of the intermediate free group; the
    even-length words in T span the free factor, and s^m spans the cyclic
    one.  pi records the finite quotient whose kernel this is.
    """

    m: int
    eta: int
    zs_generator: Word
    T: tuple[Word, ...]
    fII_basis: tuple[Word, ...]

    def pi_description(self) -> dict:
        return {"target": f"C{self.m} x C2", "s": "(c, 1)", "t": "(1, d)"}

    def to_json(self) -> dict:
        names = ("s", "t")
        return {
            "index": 2 * self.m,
            "zs_generator": format_word(self.zs_generator, names),
            "T": [format_word(w, names) for w in self.T],
            "fII_basis": [format_word(w, names) for w in self.fII_basis],
            "pi": self.pi_description(),
        }


def witness_subgroup(m: int, eta: int) -> SubgroupWitness:
    """The explicit Z x F_(2m-1) inside BS(m, eta*m), m >= 2."""
    if m < 2:
        raise ValueError("the witness subgroup needs m >= 2")
    if eta not in (1, -1):
        raise ValueError("eta must be +1 or -1")
    conj = [s_word(i) * t_word(1) * s_word(-i) for i in range(m)]
    # even-length words in the free group on T: rewrite the index-2 subgroup
    free = FinitePresentation(m, ())
    table = coset_enumerate(free, [(1, 0)] * m)
    data = reidemeister_schreier_data(free, table)
    basis = tuple(_substitute(w, conj) for w in data.generator_words)
    assert len(basis) == 2 * m - 1
    return SubgroupWitness(m, eta, s_word(m), tuple(conj), basis)


def _substitute(word: Word, images: Sequence[Word]) -> Word:
    out = Word()
    for letter in word.raw:
        img = images[abs(letter) - 1]
        out = out * (img if letter > 0 else ~img)
    return out


def _free_words(alphabet: int, max_len: int) -> Iterable[Word]:
    """All freely reduced nonempty words over the alphabet, up to max_len."""
    letters = [i for i in range(1, alphabet + 1)] + [-i for i in range(1, alphabet + 1)]
    stack: list[list[int]] = [[x] for x in letters]
    while stack:
        word = stack.pop()
        yield Word(word)
        if len(word) < max_len:
            for x in letters:
                if x != -word[-1]:
                    stack.append(word + [x])


@dataclass(frozen=True)
class WitnessReport:
    passed: bool
    index: int
    abelian: AbelianInvariants
    failures: tuple[str, ...]


def verify_witness(group: BSGroup, witness: SubgroupWitness, length_bound: int = 6) -> WitnessReport:
    """Machine-check the witness: commutation, kernel membership, index,
    bounded freeness of the conjugate basis, and the kernel's abelianization."""
    if abs(group.m) != abs(group.n) or abs(group.m) < 2:
        raise ValueError("witness checks apply to BS(m, +-m) with |m| >= 2")
    m = witness.m
    names = ("s", "t")
    failures: list[str] = []

    for w in witness.fII_basis:
        comm = witness.zs_generator * w * ~witness.zs_generator * ~w
        if not britton_reduce(group, comm).is_identity():
            failures.append(f"[s^{m}, {format_word(w, names)}] != 1")

    for w in (witness.zs_generator,) + witness.fII_basis:
        if pi_image(group, w) != (0, 0):
            failures.append(f"{format_word(w, names)} is not in ker(pi)")

    pres = group.presentation()
    table = coset_enumerate(pres, cm_x_c2_images(m))
    if table.d != 2 * m:
        failures.append(f"kernel index is {table.d}, expected {2 * m}")

    for word in _free_words(m, length_bound):
        if britton_reduce(group, _substitute(word, witness.T)).is_identity():
            failures.append(f"nontrivial relation of length {len(word)} among the conjugates")
            break

    sub = reidemeister_schreier_data(pres, table).presentation
    invariants = abelianization(sub)
    if invariants != AbelianInvariants(2 * m):
        failures.append(f"kernel abelianization is {invariants}, expected free of rank {2 * m}")

    return WitnessReport(not failures, table.d, invariants, tuple(failures))


# ---------------------------------------------------------------------------
# the affine representation of BS(1, n)


def affine_rep(n: int, word: Word) -> list[list[Fraction]]:
    """Image of a word of BS(1, n) under s -> [[1,1],[0,1]], t -> [[n,0],[0,1]]."""
    if abs(n) < 2:
        raise ValueError("the affine embedding is for BS(1, n) with |n| >= 2")
    s_mat = ((Fraction(1), Fraction(1)), (Fraction(0), Fraction(1)))
    t_mat = ((Fraction(n), Fraction(0)), (Fraction(0), Fraction(1)))

    def inv2(m):
        det = m[0][0] * m[1][1] - m[0][1] * m[1][0]
        return (
            (m[1][1] / det, -m[0][1] / det),
            (-m[1][0] / det, m[0][0] / det),
        )

    def mul2(a, b):
        return tuple(
            tuple(sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2))
            for i in range(2)
        )

    table = {S: s_mat, -S: inv2(s_mat), T: t_mat, -T: inv2(t_mat)}
    out = ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)))
    for letter in word.raw:
        out = mul2(out, table[letter])
    relator = BSGroup(1, n).presentation().relators[0]
    check = ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)))
    for letter in relator.raw:
        check = mul2(check, table[letter])
    if check != ((1, 0), (0, 1)):
        raise AssertionError("defining relator does not map to the identity")
    return [list(row) for row in out]


# ---------------------------------------------------------------------------
# the verdict


def bs_presentable(m: int, n: int) -> Verdict:
    """Presentability of BS(m, n): YES iff |m| = |n|, with witnesses."""
    if m == 0 or n == 0:
        raise ZeroParameter("BS(m, n) needs m != 0 and n != 0")
    trace_prefix: list[TraceEntry] = []
    if abs(m) > abs(n):
        trace_prefix.append(TraceEntry("bs/symmetry", CITE_SYMMETRY))
        m, n = n, m

    if abs(m) == abs(n) == 1:
        if n == m:  # BS(1,1) = Z^2 after sign normalization
            cert = {"kind": "infinite-centre", "generator": "s"}
            cite = TraceEntry("bs/abelian", CITE_Z2)
        else:
            cert = {"kind": "infinite-centre", "generator": "t^2"}
            cite = TraceEntry("bs/klein-bottle", CITE_KLEIN)
        return Verdict(Answer.YES, certificate=cert, trace=tuple(trace_prefix) + (cite,))

    if abs(m) == abs(n):
        big = abs(m)
        eta = 1 if m * n > 0 else -1
        witness = witness_subgroup(big, eta)
        return Verdict(
            Answer.YES,
            certificate={"kind": "finite-index-direct-product", **witness.to_json()},
            trace=tuple(trace_prefix)
            + (
                TraceEntry("bs/equal-moduli", CITE_WITNESS),
                TraceEntry("finite-index", CITE_FINITE_INDEX),
            ),
        )

    route = TraceEntry("bs/soluble", CITE_SOLUBLE) if abs(m) == 1 else TraceEntry("bs/powers", CITE_POWERS)
    return Verdict(
        Answer.NO,
        trace=tuple(trace_prefix)
        + (route, TraceEntry("bs/deficiency", CITE_MOLDAVANSKII)),
    )
