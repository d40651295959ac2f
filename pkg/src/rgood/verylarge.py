"""Certifying surjections onto the free group of rank two.

A pair of generators ``{x, y}`` is accepted when every relator becomes the
empty word after deleting all other generators and freely reducing; the
assignment ``x, y -> free basis, others -> 1`` is then a well-defined
epimorphism onto F2. The test is sufficient only, so failure means Unknown.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations

from rgood import words
from rgood.presentations import DEFAULT_BUDGET, Presentation, tietze_simplify


@dataclass(frozen=True)
class F2Witness:
    kept_pair: tuple[str, str]
    checked_relators: int
    presentation: Presentation

    def __post_init__(self) -> None:
        x, y = self.kept_pair
        if x == y or x not in self.presentation.generators or y not in self.presentation.generators:
            raise ValueError(f"witness pair {self.kept_pair} is not two declared generators")

    def as_dict(self) -> dict:
        return {
            "pair": list(self.kept_pair),
            "checked_relators": self.checked_relators,
            "presentation": str(self.presentation),
        }


class Status(enum.Enum):
    YES = "yes"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class VeryLargeStatus:
    status: Status
    witness: F2Witness | None = None

    def __post_init__(self) -> None:
        if (self.status is Status.YES) != (self.witness is not None):
            raise ValueError("a witness is present exactly when the status is YES")


def pair_criterion(p: Presentation, pair: tuple[str, str]) -> bool:
    x, y = pair
    if x == y or x not in p.generators or y not in p.generators:
        raise ValueError(f"{pair} is not a pair of distinct declared generators")
    keep = frozenset(pair)
    return all(not words.project(r, keep) for r in p.relators)


def _scan(p: Presentation) -> F2Witness | None:
    for pair in combinations(p.generators, 2):
        if pair_criterion(p, pair):
            return F2Witness(pair, len(p.relators), p)
    return None


def find_f2_surjection(p: Presentation, try_tietze_first: bool = False) -> F2Witness | None:
    """Return the first accepted generator pair in declaration order.

    With ``try_tietze_first`` the scan runs on ``tietze_simplify(p)`` and the
    witness refers to that presentation. Nothing is lost: an eliminated
    generator occurs once in some relator, so it is in no accepted pair, and
    substitution keeps every other accepted pair accepted.
    """
    if try_tietze_first:
        p = tietze_simplify(p, DEFAULT_BUDGET)
    return _scan(p)


def very_large_status(p: Presentation) -> VeryLargeStatus:
    witness = find_f2_surjection(p, try_tietze_first=True)
    if witness is None:
        return VeryLargeStatus(Status.UNKNOWN)
    return VeryLargeStatus(Status.YES, witness)
