"""Classification of spaces as R-good, R-bad or Unknown.

Every applicable rule is evaluated, so that a Good rule and a Bad rule firing
together is caught (ContradictionError) instead of being hidden by rule
order. The verdict is decided by the first rule that fires, in this order:

1. the known-results database,
2. family rules (surface table, RAAG, even Artin, Bestvina-Brady),
3. G3: the fundamental group is R-perfect,
4. G4: the presentation is syntactically abelian (aspherical spaces only),
5. th:main: a Prop:triv pair gives pi_1 ->> F2, and H_2 is countable,
6. user-asserted hypotheses of G1, G2, G4, G5, G6 on the rings they cover.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Union

from rgood import words
from rgood.abelian import h1_invariants, tensor_vanishes
from rgood.errors import ContradictionError, UnsupportedRingError, ValidationError
from rgood.families import graphs, known, surfaces
from rgood.families.graphs import LabeledArtinGraph, SimpleGraph
from rgood.families.surfaces import SurfaceDescriptor
from rgood.presentations import Presentation, deficiency, is_syntactically_abelian
from rgood.rings import (
    Rationals,
    RingDescriptor,
    inverts_prime,
    is_prime_field,
    normalize_ring,
    render_ring,
    theorem_supported,
)
from rgood.verdicts import CITATIONS, Status, TraceRecord, Verdict, record
from rgood.verylarge import Status as VLStatus
from rgood.verylarge import very_large_status

# -- space descriptors --------------------------------------------------------


@dataclass(frozen=True)
class EilenbergMacLane:
    presentation: Presentation
    name: str = ""

    @property
    def label(self) -> str:
        return self.name or f"K(G,1), G = <{self.presentation}>"


@dataclass(frozen=True)
class Surface:
    surface: SurfaceDescriptor

    @property
    def label(self) -> str:
        return self.surface.label


@dataclass(frozen=True)
class CircleWedge:
    count: int

    def __post_init__(self) -> None:
        if self.count < 2:
            raise ValidationError("a wedge of circles needs at least 2 circles")

    @property
    def label(self) -> str:
        return f"wedge of {self.count} circles"


@dataclass(frozen=True)
class Raag:
    graph: SimpleGraph
    name: str = ""

    @property
    def label(self) -> str:
        return self.name or f"K(A_Gamma,1), RAAG on {len(self.graph.vertices)} vertices"


@dataclass(frozen=True)
class EvenArtin:
    graph: LabeledArtinGraph
    name: str = ""

    @property
    def label(self) -> str:
        return self.name or f"K(A,1), Artin group on {len(self.graph.underlying.vertices)} generators"


@dataclass(frozen=True)
class BestvinaBrady:
    graph: SimpleGraph
    name: str = ""

    @property
    def label(self) -> str:
        return self.name or f"K(H_Gamma,1), Bestvina-Brady on {len(self.graph.vertices)} vertices"


@dataclass(frozen=True)
class Known:
    tag: str

    def __post_init__(self) -> None:
        object.__setattr__(self, "tag", known.canonical_tag(self.tag))

    @property
    def label(self) -> str:
        return known.known_space(self.tag).label


SpaceDescriptor = Union[EilenbergMacLane, Surface, CircleWedge, Raag, EvenArtin, BestvinaBrady, Known]


class Assumption(enum.Enum):
    FINITE_HOMOTOPY_GROUPS = "finite-homotopy-groups"
    FINITE_FUNDAMENTAL_GROUP = "finite-fundamental-group"
    NILPOTENT_SPACE = "nilpotent-space"
    VIRTUALLY_NILPOTENT_SPACE = "virtually-nilpotent-space"
    P_SEMINILPOTENT = "p-seminilpotent"

    @property
    def criterion(self) -> str:
        return _CRITERION[self]


_CRITERION = {
    Assumption.FINITE_HOMOTOPY_GROUPS: "G1",
    Assumption.FINITE_FUNDAMENTAL_GROUP: "G2",
    Assumption.NILPOTENT_SPACE: "G4",
    Assumption.VIRTUALLY_NILPOTENT_SPACE: "G5",
    Assumption.P_SEMINILPOTENT: "G6",
}


def parse_assumption(text: str) -> Assumption:
    t = text.strip()
    for a in Assumption:
        if t in (a.value, a.criterion):
            return a
    raise ValueError(f"unknown assumption {text!r}; expected one of {[a.value for a in Assumption]}")


def _criterion_covers(criterion: str, r: RingDescriptor) -> bool:
    if criterion in ("G1", "G4"):
        return True
    if criterion == "G5":
        return is_prime_field(r) or isinstance(r, Rationals)
    return is_prime_field(r)  # G2, G6


_COVERAGE = {
    "G1": "Z/p and subrings of Q",
    "G2": "Z/p only",
    "G4": "Z/p and subrings of Q",
    "G5": "Q and Z/p only",
    "G6": "Z/p only",
}


# -- rule evaluation ----------------------------------------------------------


@dataclass(frozen=True)
class _Attempt:
    fired: Status | None
    record: TraceRecord


def _miss(rule: str, citation_key: str, reason: str, **facts) -> _Attempt:
    return _Attempt(None, TraceRecord(rule, CITATIONS[citation_key], {"fired": False, "reason": reason, **facts}))


def _hit(status: Status, rule: str, citation_key: str | None = None, **facts) -> _Attempt:
    return _Attempt(status, record(rule, citation_key, **facts))


def _from_verdict(rule: str, v: Verdict) -> _Attempt:
    head = v.trace[0]
    return _Attempt(v.status, TraceRecord(rule, head.citation, {"entry": head.rule, **head.facts}))


def _surface_table(s: SurfaceDescriptor, r: RingDescriptor) -> _Attempt:
    facts = {"orientable": s.orientable, "genus": s.genus}
    if s.orientable and s.genus <= 1:
        return _hit(Status.GOOD, "surface-table", "surface:clause1", **facts)
    if s.orientable:
        return _hit(Status.BAD, "surface-table", "surface:clause3", **facts)
    if s.genus <= 2:
        if is_prime_field(r) or inverts_prime(r, 2):
            return _hit(Status.GOOD, "surface-table", "surface:clause2:good", **facts)
        return _hit(Status.BAD, "surface-table", "surface:clause2:bad", **facts)
    if s.genus == 3:
        return _miss("surface-table", "surface:genus3", "non-orientable genus 3 is unsolved", **facts)
    return _hit(Status.BAD, "surface-table", "surface:clause3", **facts)


def _generic(p: Presentation, r: RingDescriptor, aspherical: bool) -> Iterator[_Attempt]:
    h1 = h1_invariants(p)
    if tensor_vanishes(h1, r):
        yield _hit(Status.GOOD, "G3", h1=str(h1), ring=str(r), r_perfect=True)
    else:
        yield _miss("G3", "G3", f"R (x) H1 != 0 for H1 = {h1}", h1=str(h1), ring=str(r))

    if not aspherical:
        yield _miss("G4", "G4", "space is not a K(G,1); syntactic abelianness says nothing about it")
    elif is_syntactically_abelian(p):
        yield _hit(Status.GOOD, "G4", source="syntactic-abelian", generators=len(p.generators))
    else:
        yield _miss("G4", "G4", "no commutator relator for some generator pair")

    vl = very_large_status(p)
    if vl.status is VLStatus.YES:
        w = vl.witness
        keep = frozenset(w.kept_pair)
        yield _hit(
            Status.BAD,
            "th:main",
            witness=list(w.kept_pair),
            projections=[words.format_word(words.project(rel, keep)) for rel in w.presentation.relators],
            witness_presentation=str(w.presentation),
            h2="finitely generated, hence countable (finite presentation, lmm:count_schur)",
            presentation_deficiency=deficiency(p),
        )
    else:
        yield _miss("th:main", "th:main", "no generator pair passes Prop:triv (before or after Tietze)")


def _assumption_rules(a: Iterable[Assumption], r: RingDescriptor) -> Iterator[_Attempt]:
    for flag in sorted(set(a), key=lambda f: f.criterion):
        crit = flag.criterion
        if _criterion_covers(crit, r):
            yield _hit(Status.GOOD, crit, source="assumption", assumed=flag.value)
        else:
            yield _miss(crit, crit, f"{crit} covers {_COVERAGE[crit]}", assumed=flag.value, ring=str(r))


def _rules(x: SpaceDescriptor, r: RingDescriptor) -> Iterator[_Attempt]:
    match x:
        case Known(tag=tag):
            space = known.known_space(tag)
            v = known.known_space_verdict(tag, r)
            if v is None:
                yield _miss("known-space", "unknown", f"no database entry for {tag} over {r}")
            else:
                yield _from_verdict("known-space", v)
            if space.presentation is not None:
                yield from _generic(space.presentation, r, space.aspherical)
        case CircleWedge(count=n):
            tag = known.wedge_tag(n)
            yield _from_verdict("known-space", known.known_space_verdict(tag, r))
            yield from _generic(known.known_space(tag).presentation, r, True)
        case Surface(surface=s):
            yield _surface_table(s, r)
            yield from _generic(surfaces.surface_presentation(s), r, s.aspherical)
        case Raag(graph=g):
            outcome = graphs.raag_rule(g)
            if isinstance(outcome, graphs.AbelianFreeRank):
                yield _hit(Status.GOOD, "raag", "G4", source="complete graph", abelian_rank=outcome.rank)
            else:
                yield _hit(Status.BAD, "raag", witness=list(outcome.pair))
            yield from _generic(graphs.raag_presentation(g), r, True)
        case EvenArtin(graph=a):
            pair = graphs.artin_even_witness(a)
            if pair is not None:
                yield _hit(Status.BAD, "even-artin", witness=list(pair))
            else:
                reason = "graph is complete" if a.is_even() else "some label is odd"
                yield _miss("even-artin", "even-artin", reason)
            yield from _generic(graphs.artin_presentation(a), r, True)
        case BestvinaBrady(graph=g):
            out = graphs.bestvina_brady_rule(g)
            sc = out.simply_connected.value if out.simply_connected else None
            if out.status is Status.GOOD:
                yield _hit(
                    Status.GOOD, "bestvina-brady", "bestvina-brady:abelian", kernel=str(out.kernel),
                    note="complete graphs are excluded from the non-abelian claim",
                )
            elif out.status is Status.BAD:
                yield _hit(Status.BAD, "bestvina-brady", "bestvina-brady:bad", simply_connected=sc)
            else:
                key = "bestvina-brady:not-fp" if out.simply_connected is graphs.TriState.NO else "bestvina-brady:bad"
                yield _miss("bestvina-brady", key, out.reason, simply_connected=sc)
        case EilenbergMacLane(presentation=p):
            yield from _generic(p, r, True)
        case _:
            raise TypeError(f"unsupported space descriptor {x!r}")


def classify(x: SpaceDescriptor, r: RingDescriptor, a: Iterable[Assumption] = ()) -> Verdict:
    if not theorem_supported(r):
        raise UnsupportedRingError(f"ring {r!r} is outside Z/p and subrings of Q")
    r = normalize_ring(r)
    attempts = list(_rules(x, r)) + list(_assumption_rules(a, r))
    fired = [t for t in attempts if t.fired is not None]
    statuses = {t.fired for t in fired}
    if Status.GOOD in statuses and Status.BAD in statuses:
        good = [t.record.rule for t in fired if t.fired is Status.GOOD]
        bad = [t.record.rule for t in fired if t.fired is Status.BAD]
        raise ContradictionError(
            f"{x.label} over {r}: Good rules {good} and Bad rules {bad} both fired"
        )
    if fired:
        return Verdict(fired[0].fired, [t.record for t in fired])
    return Verdict(Status.UNKNOWN, [t.record for t in attempts])


# -- surveys -------------------------------------------------------------------


@dataclass(frozen=True)
class SurveyTable:
    rings: tuple[RingDescriptor, ...]
    rows: tuple[tuple[str, tuple[Verdict, ...]], ...] = field(default=())

    @property
    def ring_labels(self) -> list[str]:
        return [render_ring(r) for r in self.rings]

    def cells(self) -> Iterator[tuple[str, str, Verdict]]:
        for label, verdicts in self.rows:
            for ring, v in zip(self.ring_labels, verdicts):
                yield label, ring, v


def survey(
    spaces: Iterable[SpaceDescriptor], rings: Iterable[RingDescriptor], a: Iterable[Assumption] = ()
) -> SurveyTable:
    rings = tuple(rings)
    a = tuple(a)
    for r in rings:
        if not theorem_supported(r):
            raise UnsupportedRingError(f"ring {r!r} is outside Z/p and subrings of Q")
    rows = tuple((x.label, tuple(classify(x, r, a) for r in rings)) for x in spaces)
    return SurveyTable(rings, rows)


def surface_family(max_genus: int) -> list[Surface]:
    """Orientable genus 0..max_genus followed by non-orientable genus 1..max_genus."""
    out = [Surface(SurfaceDescriptor(True, g)) for g in range(max_genus + 1)]
    out += [Surface(SurfaceDescriptor(False, g)) for g in range(1, max_genus + 1)]
    return out


__all__ = [
    "Assumption",
    "BestvinaBrady",
    "CircleWedge",
    "EilenbergMacLane",
    "EvenArtin",
    "Known",
    "Raag",
    "Surface",
    "SpaceDescriptor",
    "SurveyTable",
    "classify",
    "parse_assumption",
    "surface_family",
    "survey",
]
