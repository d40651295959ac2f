"""Verdicts and their justification traces."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any


class Status(enum.Enum):
    GOOD = "good"
    BAD = "bad"
    UNKNOWN = "unknown"


# Citation strings attached to trace records, keyed by rule id. Criterion
# labels G1-G6 and theorem labels (th:main, Prop:triv, ...) are kept verbatim
# so a trace can be audited line by line.
CITATIONS = {
    "known:wedge": "wedge of 2 <= n circles is R-bad for R = Z/p and R in Q [BK72 Ch. IV 5.4; IM19]",
    "known:rp2:G2": "G2: finite fundamental group Z/2, so Z/p-good [BK72 Ch. VII 5.1]",
    "known:rp2:G3": "G3: pi_1 = Z/2 is R-perfect when 1/2 in R [BK72 Ch. VII 3.2]",
    "known:rp2:bad": "RP^2 is R-bad for subrings of Q with 1/2 not in R [BK72 Ch. VII Prop. 5.2]",
    "known:klein:G5": "G5: the Klein bottle is virtually nilpotent, so Z/p-good [DDK77 Prop. 3.4]",
    "known:klein:good": "Z[J^-1]-good when 2 in J [Bas03 Sec. 4.4]",
    "known:klein:bad": "Z[J^-1]-bad when 2 not in J [Bas03 Sec. 4.4]",
    "known:sphere": "G4: the sphere is simply connected, hence nilpotent [BK72 Ch. V 3.4, Ch. VI 5.3]",
    "known:torus": "G4: the torus is K(Z^2,1) with abelian pi_1, hence nilpotent [BK72 Ch. V 3.4, Ch. VI 5.3]",
    "known:z*z2": "K(Z * Z/2, 1) is Z/p-good for odd p: Z/p-completion commutes with the free product "
    "and kills the Z/2 factor",
    "surface:clause1": "surface proposition clause 1: sphere and torus are R-good (G4)",
    "surface:clause2:good": "surface proposition clause 2: non-orientable genus 1 or 2 is R-good for Z/p "
    "and for subrings of Q in which 2 is invertible",
    "surface:clause2:bad": "surface proposition clause 2: non-orientable genus 1 or 2 is R-bad for "
    "subrings of Q in which 2 is not invertible [BK72 Ch. VII Prop. 5.2; Bas03 Sec. 4.4]",
    "surface:clause3": "th:main; surface proposition clause 3: orientable genus > 1 and non-orientable "
    "genus > 3 are R-bad",
    "surface:genus3": "non-orientable genus 3 is an open case: pi_1 admits no Prop:triv pair and "
    "[Bas03] needs virtual nilpotence",
    "G1": "G1: finite homotopy groups in each dimension give R-good for R in Q and Z/p [BK72 Ch. VII 4.3]",
    "G2": "G2: finite fundamental group gives Z/p-good [BK72 Ch. VII 5.1]",
    "G3": "G3: R-perfect fundamental group (R (x) G^ab = 0) gives R-good [BK72 Ch. VII 3.2]",
    "G4": "G4: nilpotent spaces are R-good for R in Q and Z/p [BK72 Ch. V 3.4, Ch. VI 5.3]",
    "G5": "G5: virtually nilpotent spaces are R-good for R = Q and Z/p [DDK77 Prop. 3.4]",
    "G6": "G6: p-seminilpotent spaces are Z/p-good [Bo92 Thm. 4.3]",
    "th:main": "th:main: connected X with countable H_2(X;Z) and pi_1(X) ->> F_2 is R-bad; "
    "H_2 countable by lmm:count_schur; surjection certified by Prop:triv",
    "raag": "pr:eAg_epi corollary: a non-commutative RAAG has K(A,1) R-bad (th:main)",
    "even-artin": "pr:eAg_epi: even-type Artin group with two generators in no common relation has "
    "K(A,1) R-bad (th:main)",
    "bestvina-brady:bad": "Bestvina-Brady: H_Gamma finitely presented iff the flag complex is simply "
    "connected; then non-abelian, very large by prop:AM13, R-bad by th:main",
    "bestvina-brady:abelian": "Bestvina-Brady on a complete graph: kernel of Z^n -> Z is Z^(n-1), "
    "abelian, R-good by G4",
    "bestvina-brady:not-fp": "Bestvina-Brady: flag complex not simply connected, so H_Gamma is not "
    "finitely presented and lmm:count_schur does not apply",
    "unknown": "no criterion applied",
}


@dataclass(frozen=True)
class TraceRecord:
    rule: str
    citation: str
    facts: dict[str, Any] = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {"rule": self.rule, "citation": self.citation, "facts": self.facts}


def record(rule: str, citation_key: str | None = None, **facts: Any) -> TraceRecord:
    return TraceRecord(rule, CITATIONS[citation_key or rule], facts)


@dataclass(frozen=True)
class Verdict:
    status: Status
    trace: tuple[TraceRecord, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "trace", tuple(self.trace))
        if self.status is not Status.UNKNOWN and not self.trace:
            raise ValueError("a Good or Bad verdict needs a trace naming the deciding rule")

    @property
    def deciding_rule(self) -> str | None:
        return self.trace[0].rule if self.status is not Status.UNKNOWN else None

    def to_json(self, space: str, ring: str) -> dict:
        return {
            "space": space,
            "ring": ring,
            "status": self.status.value,
            "trace": [r.as_dict() for r in self.trace],
        }


VERDICT_SCHEMA = {
    "type": "object",
    "required": ["space", "ring", "status", "trace"],
    "additionalProperties": False,
    "properties": {
        "space": {"type": "string"},
        "ring": {"type": "string"},
        "status": {"enum": ["good", "bad", "unknown"]},
        "trace": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["rule", "citation", "facts"],
                "additionalProperties": False,
                "properties": {
                    "rule": {"type": "string"},
                    "citation": {"type": "string"},
                    "facts": {"type": "object"},
                },
            },
        },
    },
}
