"""Citation-producing rules engine for presentability-by-a-product verdicts.

Structured descriptors (Coxeter matrices, Baumslag-Solitar parameters) are
delegated to their exact deciders; flag-annotated descriptors run through a
fixed rule base in which every flag is treated as a user-asserted axiom.
Conflicting conclusions raise InconsistentInput instead of picking a side.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from . import bs as bs_mod
from . import coxeter as coxeter_mod
from .presentations import FinitePresentation, presentation_from_json
from .verdict import FG_QUALIFIER, Answer, TraceEntry, Verdict


class InconsistentInput(Exception):
    """The asserted flags (or fired rules) contradict each other."""


INF_ENDS = "inf"

# --- citations, one per rule family ------------------------------------------

CITE_DELEGATE_COXETER = (
    "Decided by the exact classification of the Coxeter system's bilinear form."
)
CITE_DELEGATE_BS = "Decided by the Baumslag-Solitar parameter criterion |m| = |n|."
CITE_FREE_PRODUCT_YES = (
    "The free product of two groups of order two is infinite dihedral, hence "
    "virtually infinite cyclic and presentable by a product."
)
CITE_FREE_PRODUCT_NO = (
    "A free product of nontrivial groups other than C2 * C2 has infinitely "
    "many ends and is not presentable by a product (Kotschick-Loeh)."
)
CITE_DIRECT_PRODUCT = (
    "A direct product of two infinite groups is presentable by a product via "
    "the identity homomorphism."
)
CITE_CENTRE = (
    "A group with infinite centre C admits the presentation C x G -> G by a product."
)
CITE_FINITE_INDEX = (
    "Presentability by a product is invariant under passage to finite-index "
    "subgroups (Kotschick-Loeh)."
)
CITE_SEIFERT_YES = (
    "An infinite finitely presented three-manifold group is presentable by a "
    "product iff it is the fundamental group of a compact Seifert fibre "
    "space, which has a finite-index subgroup with infinite centre."
)
CITE_SEIFERT_NO = (
    "An infinite finitely presented three-manifold group that is not a "
    "Seifert fibre space group is not presentable by a product (it is either "
    "a Sol-manifold group, excluded by Zariski density in Sol, or a Powers group)."
)
CITE_SIMPLE = "An infinite simple group is not presentable by a product."
CITE_HYPERBOLIC_NO = (
    "An infinite non-elementary Gromov hyperbolic group is not presentable "
    "by a product (Kotschick-Loeh)."
)
CITE_HYPERBOLIC_YES = (
    "An infinite elementary hyperbolic group is virtually infinite cyclic."
)
CITE_TWO_ENDS = "A two-ended group is virtually infinite cyclic, hence presentable by a product."
CITE_INF_ENDS = (
    "A group with infinitely many ends is not presentable by a product (Kotschick-Loeh)."
)
CITE_SCHREIER = (
    "A finitely generated one-ended group in which every finitely generated "
    "normal subgroup is finite or of finite index admits no presentation by "
    "a product of finitely generated groups."
)
CITE_BETTI_VANISHING = (
    "A finitely presented group presentable by a product has vanishing first "
    "L2-Betti number (Kotschick-Loeh), so positivity rules it out."
)
CITE_DEF_TO_BETTI = (
    "Deficiency at most 1 + first L2-Betti number (L2 Morse inequality, "
    "Hillman); deficiency >= 2 therefore forces a positive first L2-Betti number."
)
CITE_DEF_CHARACTERIZATION = (
    "An infinite finitely presented group of positive deficiency is "
    "presentable by a product iff it is infinite cyclic or virtually "
    "F_k x Z (k >= 1); neither structure is asserted, so no verdict follows."
)
CITE_VCD_CHARACTERIZATION = (
    "An infinite finitely presented group of virtual cohomological dimension "
    "at most 2 is presentable by a product iff it is virtually infinite "
    "cyclic or virtually F_k x F_l (k, l >= 1); neither structure is "
    "asserted, so no verdict follows."
)
CITE_ENDS_IMPLY_INFINITE = "A group with at least one end is infinite."
CITE_NONELEMENTARY_INFINITE = "A non-elementary hyperbolic group is infinite."
CITE_POS_DEF_INFINITE = (
    "Positive deficiency gives the abelianization positive rank, so the group "
    "is infinite (and finite presentability is presupposed by the invariant)."
)
CITE_BETTI_INFINITE = "Finite groups have vanishing first L2-Betti number."
CITE_GABORIAU = (
    "A finitely generated group with positive first L2-Betti number has the "
    "normal-subgroup property used here: finitely generated normal subgroups "
    "are finite or of finite index (Gaboriau)."
)
CITE_SCOPE = "Only infinite groups are in scope for presentability by a product."
CITE_VIRTUAL_FORM = {
    "infinite-cyclic": "The infinite cyclic group is presentable by a product via Z x Z -> Z.",
    "free-abelian": "A free abelian group of positive rank has infinite centre.",
    "product-of-free-groups": (
        "F_k x F_l with k, l >= 1 is a direct product of two infinite groups."
    ),
    "free-times-cyclic": "F_k x Z with k >= 1 is a direct product of two infinite groups.",
}


# --- descriptors ---------------------------------------------------------------


@dataclass(frozen=True)
class Flags:
    """User-asserted invariants; None means 'not asserted'.

    ``seifert`` asserts that the group is an infinite finitely presented
    three-manifold group which is (True) or is not (False) the fundamental
    group of a compact Seifert fibre space.  ``virtually`` names a group the
    descriptor is virtually isomorphic to: either {"form": ...} with an
    optional rank/ranks, or a full nested descriptor object.
    """

    infinite: bool | None = None
    finitely_generated: bool | None = None
    schreier: bool | None = None
    ends: int | str | None = None
    vcd: int | None = None
    deficiency: int | None = None
    l2_betti1_positive: bool | None = None
    hyperbolic: bool | None = None
    elementary: bool | None = None
    simple: bool | None = None
    centre: str | None = None
    seifert: bool | None = None
    virtually: dict | None = None


_FLAG_KEYS = {
    "infinite": "infinite",
    "finitely-generated": "finitely_generated",
    "schreier": "schreier",
    "ends": "ends",
    "vcd": "vcd",
    "deficiency": "deficiency",
    "l2-betti1-positive": "l2_betti1_positive",
    "hyperbolic": "hyperbolic",
    "elementary": "elementary",
    "simple": "simple",
    "centre": "centre",
    "seifert": "seifert",
    "virtually": "virtually",
}


@dataclass(frozen=True)
class GroupDescriptor:
    kind: str  # coxeter | bs | free_product | direct_product_of_infinite | flagged
    coxeter: coxeter_mod.CoxeterMatrix | None = None
    bs: tuple[int, int] | None = None
    factors: tuple | None = None
    count: int | None = None
    presentation: FinitePresentation | None = None
    flags: Flags = field(default_factory=Flags)


def descriptor_from_json(obj: dict) -> GroupDescriptor:
    kind = obj.get("kind")
    if kind == "coxeter":
        return GroupDescriptor("coxeter", coxeter=coxeter_mod.coxeter_from_json(obj["matrix"]))
    if kind == "bs":
        return GroupDescriptor("bs", bs=(int(obj["m"]), int(obj["n"])))
    if kind == "free_product":
        factors = tuple(
            INF_ENDS if f == "inf" else int(f) for f in obj.get("factors", [])
        )
        return GroupDescriptor("free_product", factors=factors)
    if kind == "direct_product_of_infinite":
        return GroupDescriptor("direct_product_of_infinite", count=int(obj["count"]))
    if kind == "flagged":
        pres = None
        if obj.get("presentation") is not None:
            pres = presentation_from_json(obj["presentation"])
        raw = obj.get("flags", {})
        unknown = set(raw) - set(_FLAG_KEYS)
        if unknown:
            raise ValueError(f"unknown flags: {sorted(unknown)}")
        values = {_FLAG_KEYS[key]: value for key, value in raw.items()}
        if values.get("ends") == "inf":
            values["ends"] = INF_ENDS
        return GroupDescriptor("flagged", presentation=pres, flags=Flags(**values))
    raise ValueError(f"unknown descriptor kind {kind!r}")


# --- flag validation and derivations --------------------------------------------


def _validate_flags(f: Flags) -> None:
    def clash(message: str):
        raise InconsistentInput(message)

    if f.ends is not None and f.ends not in (0, 1, 2, INF_ENDS):
        clash(f"ends must be 0, 1, 2 or 'inf', not {f.ends!r}")
    if f.centre is not None and f.centre not in ("finite", "infinite"):
        clash("centre must be 'finite' or 'infinite'")
    if f.ends == 0 and f.infinite is True:
        clash("ends = 0 asserts a finite group, but infinite = true")
    if f.ends in (1, 2, INF_ENDS) and f.infinite is False:
        clash(f"ends = {f.ends} implies an infinite group")
    if f.simple and f.centre == "infinite":
        clash("an infinite-centre group is not simple")
    if f.hyperbolic and f.elementary is False and f.centre == "infinite":
        clash("a non-elementary hyperbolic group cannot have infinite centre")
    if f.centre == "infinite" and f.infinite is False:
        clash("infinite centre implies an infinite group")
    if f.deficiency is not None and f.deficiency >= 1 and f.infinite is False:
        clash("positive deficiency implies an infinite group")
    if f.vcd == 0 and f.infinite is True:
        clash("cohomological dimension 0 means the trivial group")


def _derive(f: Flags) -> tuple[Flags, list[TraceEntry]]:
    notes: list[TraceEntry] = []

    def set_flag(current: Flags, name: str, value, rule: str, cite: str) -> Flags:
        if getattr(current, name) is None:
            notes.append(TraceEntry(rule, cite))
            return replace(current, **{name: value})
        return current

    if f.ends in (1, 2, INF_ENDS):
        f = set_flag(f, "infinite", True, "derive/ends", CITE_ENDS_IMPLY_INFINITE)
    if f.hyperbolic and f.elementary is False:
        f = set_flag(f, "infinite", True, "derive/non-elementary", CITE_NONELEMENTARY_INFINITE)
    if f.centre == "infinite":
        f = set_flag(f, "infinite", True, "derive/centre", "A group with infinite centre is infinite.")
    if f.deficiency is not None and f.deficiency >= 1:
        f = set_flag(f, "infinite", True, "derive/deficiency", CITE_POS_DEF_INFINITE)
    if f.deficiency is not None and f.deficiency >= 2:
        f = set_flag(f, "l2_betti1_positive", True, "derive/deficiency-betti", CITE_DEF_TO_BETTI)
    if f.l2_betti1_positive:
        f = set_flag(f, "infinite", True, "derive/betti-infinite", CITE_BETTI_INFINITE)
    if f.l2_betti1_positive and f.finitely_generated:
        f = set_flag(f, "schreier", True, "derive/betti-schreier", CITE_GABORIAU)
    return f, notes


# --- conclusions ----------------------------------------------------------------


@dataclass(frozen=True)
class _Conclusion:
    strength: str  # yes | no | no-fg | unknown-info
    entry: TraceEntry
    certificate: dict | None = None


def _flag_conclusions(f: Flags) -> list[_Conclusion]:
    out: list[_Conclusion] = []

    if f.centre == "infinite":
        out.append(
            _Conclusion("yes", TraceEntry("centre", CITE_CENTRE), {"kind": "infinite-centre"})
        )
    if f.virtually is not None:
        out.extend(_virtually_conclusions(f.virtually))
    if f.seifert is True and f.infinite:
        out.append(
            _Conclusion(
                "yes",
                TraceEntry("seifert", CITE_SEIFERT_YES),
                {"kind": "virtually-infinite-centre"},
            )
        )
    if f.seifert is False and f.infinite:
        out.append(_Conclusion("no", TraceEntry("seifert", CITE_SEIFERT_NO)))
    if f.simple and f.infinite:
        out.append(_Conclusion("no", TraceEntry("simple", CITE_SIMPLE)))
    if f.hyperbolic and f.elementary is False:
        out.append(_Conclusion("no", TraceEntry("hyperbolic", CITE_HYPERBOLIC_NO)))
    if f.hyperbolic and f.elementary is True:
        out.append(
            _Conclusion(
                "yes",
                TraceEntry("hyperbolic", CITE_HYPERBOLIC_YES),
                {"kind": "virtually-infinite-cyclic"},
            )
        )
    if f.ends == 2:
        out.append(
            _Conclusion(
                "yes", TraceEntry("ends", CITE_TWO_ENDS), {"kind": "virtually-infinite-cyclic"}
            )
        )
    if f.ends == INF_ENDS:
        out.append(_Conclusion("no", TraceEntry("ends", CITE_INF_ENDS)))
    if f.schreier and f.finitely_generated and f.ends == 1:
        out.append(_Conclusion("no-fg", TraceEntry("schreier", CITE_SCHREIER)))
    if f.l2_betti1_positive:
        out.append(_Conclusion("no", TraceEntry("small-dim", CITE_BETTI_VANISHING)))
    elif f.deficiency == 1 and f.virtually is None:
        out.append(_Conclusion("unknown-info", TraceEntry("small-dim", CITE_DEF_CHARACTERIZATION)))
    if f.vcd is not None and 1 <= f.vcd <= 2 and f.virtually is None:
        out.append(_Conclusion("unknown-info", TraceEntry("small-dim", CITE_VCD_CHARACTERIZATION)))
    return out


def _virtually_conclusions(spec: dict) -> list[_Conclusion]:
    if "kind" in spec:
        inner = classify(descriptor_from_json(spec))
        strength = {
            Answer.YES: "yes",
            Answer.NO: "no",
            Answer.UNKNOWN: "unknown-info",
            Answer.NOT_APPLICABLE: "not-applicable",
        }[inner.answer]
        head = _Conclusion(
            strength,
            TraceEntry("virtually", CITE_FINITE_INDEX),
            {"kind": "finite-index", "inner": inner.to_json()} if strength == "yes" else None,
        )
        return [head] + [_Conclusion(strength, entry) for entry in inner.trace]
    form = spec.get("form")
    if form not in CITE_VIRTUAL_FORM:
        raise ValueError(f"unknown virtually form {form!r}")
    if form == "free-abelian" and int(spec.get("rank", 1)) < 1:
        raise ValueError("free-abelian form needs rank >= 1")
    if form == "product-of-free-groups":
        ranks = spec.get("ranks", [1, 1])
        if len(ranks) != 2 or min(int(r) for r in ranks) < 1:
            raise ValueError("product-of-free-groups needs two ranks >= 1")
    return [
        _Conclusion(
            "yes",
            TraceEntry("virtually", CITE_FINITE_INDEX),
            {"kind": "virtually", "form": form},
        ),
        _Conclusion("yes", TraceEntry("virtually", CITE_VIRTUAL_FORM[form])),
    ]


# --- the entry point -------------------------------------------------------------


def classify(descriptor: GroupDescriptor) -> Verdict:
    """Verdict for a descriptor; deterministic, most specific rule first."""
    if descriptor.kind == "coxeter":
        inner = coxeter_mod.coxeter_presentable(descriptor.coxeter)
        return inner.with_prefix(TraceEntry("delegate/coxeter", CITE_DELEGATE_COXETER))
    if descriptor.kind == "bs":
        m, n = descriptor.bs
        inner = bs_mod.bs_presentable(m, n)
        return inner.with_prefix(TraceEntry("delegate/bs", CITE_DELEGATE_BS))
    if descriptor.kind == "free_product":
        return _classify_free_product(descriptor.factors)
    if descriptor.kind == "direct_product_of_infinite":
        if descriptor.count is None or descriptor.count < 2:
            raise ValueError("direct product descriptor needs count >= 2")
        return Verdict(
            Answer.YES,
            certificate={"kind": "direct-product", "count": descriptor.count},
            trace=(TraceEntry("direct-product", CITE_DIRECT_PRODUCT),),
        )
    if descriptor.kind == "flagged":
        return _classify_flagged(descriptor)
    raise ValueError(f"unknown descriptor kind {descriptor.kind!r}")


def _classify_free_product(factors) -> Verdict:
    if factors is None or len(factors) < 2:
        raise ValueError("free product needs at least two factors")
    for f in factors:
        if f != INF_ENDS and (not isinstance(f, int) or f < 2):
            raise ValueError("free product factors must have order >= 2 (or 'inf')")
    if len(factors) == 2 and all(f == 2 for f in factors):
        return Verdict(
            Answer.YES,
            certificate={"kind": "virtually-infinite-cyclic", "group": "infinite dihedral"},
            trace=(TraceEntry("free-product", CITE_FREE_PRODUCT_YES),),
        )
    return Verdict(Answer.NO, trace=(TraceEntry("free-product", CITE_FREE_PRODUCT_NO),))


def _classify_flagged(descriptor: GroupDescriptor) -> Verdict:
    flags = descriptor.flags
    if descriptor.presentation is not None and flags.finitely_generated is None:
        flags = replace(flags, finitely_generated=True)
    _validate_flags(flags)
    flags, notes = _derive(flags)
    _validate_flags(flags)

    if flags.infinite is False or flags.ends == 0:
        return Verdict(Answer.NOT_APPLICABLE, trace=(TraceEntry("scope", CITE_SCOPE),))

    conclusions = _flag_conclusions(flags)
    yes = [c for c in conclusions if c.strength == "yes"]
    no = [c for c in conclusions if c.strength == "no"]
    no_fg = [c for c in conclusions if c.strength == "no-fg"]
    info = [c for c in conclusions if c.strength == "unknown-info"]
    not_applicable = [c for c in conclusions if c.strength == "not-applicable"]

    if not_applicable and not (yes or no or no_fg):
        return Verdict(
            Answer.NOT_APPLICABLE,
            trace=tuple(notes) + tuple(c.entry for c in not_applicable),
        )
    if yes and no:
        raise InconsistentInput(
            f"rules disagree: {yes[0].entry.rule} concludes YES but "
            f"{no[0].entry.rule} concludes NO"
        )

    def assemble(answer: Answer, picked: list[_Conclusion], qualifier=None) -> Verdict:
        trace = tuple(notes) + tuple(c.entry for c in picked)
        certificate = next((c.certificate for c in picked if c.certificate), None)
        return Verdict(answer, qualifier=qualifier, certificate=certificate, trace=trace)

    if yes:
        qualifier = FG_QUALIFIER if no_fg else None
        return assemble(Answer.YES, yes + no_fg, qualifier)
    if no:
        return assemble(Answer.NO, no + no_fg)
    if no_fg:
        return assemble(Answer.NO, no_fg, FG_QUALIFIER)
    if info:
        return assemble(Answer.UNKNOWN, info)
    return Verdict(Answer.UNKNOWN, trace=tuple(notes))


def explain(verdict: Verdict) -> str:
    """Human-readable justification, one citation per line, stable order."""
    lines = [f"answer: {verdict.answer.value}"]
    if verdict.qualifier:
        lines.append(f"qualifier: {verdict.qualifier}")
    if verdict.certificate:
        lines.append(f"certificate: {verdict.certificate.get('kind', 'attached')}")
    if verdict.trace:
        for entry in verdict.trace:
            lines.append(f"[{entry.rule}] {entry.cite}")
    else:
        lines.append("no applicable rule")
    return "\n".join(lines)
