"""Finite group presentations.

Text format (``.grp`` files, line breaks insignificant, ``#`` starts a comment)::

    gens: a, b; rels: [a,b]; a^2 b^-1
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from itertools import combinations

from rgood import words
from rgood.errors import DuplicateGeneratorError, ParseError, UnknownGeneratorError, ValidationError
from rgood.words import Letter, Word

DEFAULT_BUDGET = 1000


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "relators", tuple(tuple(r) for r in self.relators))
        seen = set()
        for g in self.generators:
            if not words.is_identifier(g):
                raise ValidationError(f"invalid generator name {g!r}")
            if g in seen:
                raise DuplicateGeneratorError(f"duplicate generator {g!r}")
            seen.add(g)
        for r in self.relators:
            for x in r:
                if x.gen not in seen:
                    raise UnknownGeneratorError(f"relator uses undeclared generator {x.gen!r}")
                if x.sign not in (1, -1):
                    raise ValidationError(f"bad letter {x!r}")

    def __str__(self) -> str:
        return format_presentation(self)


def presentation(generators, *relators: str) -> Presentation:
    """Convenience constructor: relators given as strings in word syntax."""
    gens = tuple(generators.replace(",", " ").split()) if isinstance(generators, str) else tuple(generators)
    return Presentation(gens, tuple(words.parse_word(r, gens) for r in relators))


def format_presentation(p: Presentation) -> str:
    rels = "; ".join(words.format_word(r) for r in p.relators)
    return f"gens: {', '.join(p.generators)}; rels: {rels}".rstrip()


# the generator list may span lines; it ends at ';' or at a line starting with "rels:"
_HEADER = re.compile(r"^\s*gens\s*:(?P<gens>[^;]*?)(?:;|\n)\s*rels\s*:(?P<rels>.*)$", re.DOTALL)


def parse_presentation(text: str) -> Presentation:
    text = "\n".join(line.split("#", 1)[0] for line in text.splitlines())
    m = _HEADER.match(text)
    if m is None:
        raise ParseError("expected 'gens: ...; rels: ...'")
    gens = [g.strip() for g in m.group("gens").split(",")]
    if gens == [""]:
        gens = []
    for g in gens:
        if not words.is_identifier(g):
            raise ParseError(f"invalid generator name {g!r}")
    if len(set(gens)) != len(gens):
        dup = next(g for g in gens if gens.count(g) > 1)
        raise DuplicateGeneratorError(f"duplicate generator {dup!r}")
    relators = []
    for chunk in m.group("rels").split(";"):
        if chunk.strip():
            relators.append(words.parse_word(chunk, gens))
    return Presentation(tuple(gens), tuple(relators))


def deficiency(p: Presentation) -> int:
    """Generators minus relators of this presentation (a lower bound for the group's deficiency)."""
    return len(p.generators) - len(p.relators)


class HintStatus(enum.Enum):
    YES = "yes"
    UNKNOWN = "unknown"


class HintReason(enum.Enum):
    DEFICIENCY_TWO = "deficiency >= 2"
    PROPER_POWER = "deficiency 1 with proper-power relator"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class LargenessHint:
    status: HintStatus
    reason: HintReason

    def __post_init__(self) -> None:
        if self.status is HintStatus.YES and self.reason is HintReason.INCONCLUSIVE:
            raise ValueError("a positive largeness hint needs a reason")


def largeness_hint(p: Presentation) -> LargenessHint:
    """Baumslag-Pride (deficiency >= 2) and Stohr (deficiency 1 plus a proper power).

    Informational only: large groups need not be very large.
    """
    d = deficiency(p)
    if d >= 2:
        return LargenessHint(HintStatus.YES, HintReason.DEFICIENCY_TWO)
    if d == 1 and any(words.proper_power_root(r) is not None for r in p.relators):
        return LargenessHint(HintStatus.YES, HintReason.PROPER_POWER)
    return LargenessHint(HintStatus.UNKNOWN, HintReason.INCONCLUSIVE)


def exponent_matrix(p: Presentation) -> list[list[int]]:
    """Rows are relators, columns generators, entries exponent sums."""
    index = {g: j for j, g in enumerate(p.generators)}
    rows = []
    for r in p.relators:
        row = [0] * len(p.generators)
        for x in r:
            row[index[x.gen]] += x.sign
        rows.append(row)
    return rows


def is_syntactically_abelian(p: Presentation) -> bool:
    """True when every pair of distinct generators has a commutator relator.

    Rotations and inversion of the relator are allowed. Sound but incomplete:
    a True answer proves the group abelian.
    """
    keys = {words.cyclic_class_key(words.cyclic_reduce(r)) for r in p.relators}
    for x, y in combinations(p.generators, 2):
        comm = words.commutator((Letter(x, 1),), (Letter(y, 1),))
        if words.cyclic_class_key(comm) not in keys:
            return False
    return True


# -- Tietze simplification ---------------------------------------------------


def _substitute(w: Word, gen: str, image: Word) -> Word:
    out: list[Letter] = []
    inverse_image = words.invert(image)
    for x in w:
        if x.gen == gen:
            out.extend(image if x.sign == 1 else inverse_image)
        else:
            out.append(x)
    return tuple(out)


def _solve_for(r: Word, gen: str) -> Word:
    """Given a relator in which ``gen`` occurs once, return the word equal to ``gen``."""
    k = next(i for i, x in enumerate(r) if x.gen == gen)
    rest = r[k + 1 :] + r[:k]  # r is conjugate to gen^s * rest
    return words.invert(rest) if r[k].sign == 1 else rest


def _step(gens: list[str], rels: list[Word]) -> bool:
    """Apply one move in place; False when no move applies."""
    # deletions: empty relators, then duplicates up to rotation/inversion
    for i, r in enumerate(rels):
        if not r:
            del rels[i]
            return True
    seen = set()
    for i, r in enumerate(rels):
        key = words.cyclic_class_key(words.cyclic_reduce(r))
        if key in seen:
            del rels[i]
            return True
        seen.add(key)
    for i, r in enumerate(rels):
        c = words.cyclic_reduce(r)
        if c != r:
            rels[i] = c
            return True
    best = None
    for i, r in enumerate(rels):
        for j, g in enumerate(gens):
            if words.occurrences(r, g) == 1:
                key = (len(r), j, i)
                if best is None or key < best:
                    best = key
    if best is None:
        return False
    _, j, i = best
    gen = gens[j]
    image = _solve_for(rels[i], gen)
    del rels[i]
    del gens[j]
    rels[:] = [words.cyclic_reduce(_substitute(r, gen, image)) for r in rels]
    return True


def tietze_simplify(p: Presentation, move_budget: int = DEFAULT_BUDGET) -> Presentation:
    """Simplify ``p`` by at most ``move_budget`` Tietze moves.

    Moves, in priority order: delete an empty relator; delete a relator that
    repeats an earlier one up to rotation and inversion; replace a relator by
    its cyclic reduction; eliminate a generator occurring exactly once in some
    relator (shortest relator first, then generator order).
    """
    if move_budget < 1:
        raise ValueError("move_budget must be positive")
    gens = list(p.generators)
    rels = list(p.relators)
    for _ in range(move_budget):
        if not _step(gens, rels):
            break
    return Presentation(tuple(gens), tuple(rels))
