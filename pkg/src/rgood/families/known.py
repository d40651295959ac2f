"""Database of spaces whose goodness is settled in the literature."""

from __future__ import annotations

import re
from dataclasses import dataclass

from rgood.errors import ValidationError
from rgood.presentations import Presentation, presentation
from rgood.rings import PrimeField, RingDescriptor, inverts_prime, is_prime_field
from rgood.verdicts import Status, Verdict, record

TAGS = ("sphere", "torus", "rp2", "klein", "z*z2")

_ALIASES = {
    "s2": "sphere",
    "t2": "torus",
    "rp^2": "rp2",
    "projective-plane": "rp2",
    "klein-bottle": "klein",
    "z*z/2": "z*z2",
    "z-free-z2": "z*z2",
}

_WEDGE = re.compile(r"wedge-?(\d+)")


@dataclass(frozen=True)
class KnownSpace:
    tag: str
    label: str
    presentation: Presentation | None
    aspherical: bool


def wedge_tag(n: int) -> str:
    return f"wedge-{n}"


def canonical_tag(text: str) -> str:
    t = text.strip().lower()
    t = _ALIASES.get(t, t)
    if m := _WEDGE.fullmatch(t):
        n = int(m.group(1))
        if n < 2:
            raise ValidationError("a wedge of circles needs at least 2 circles")
        return wedge_tag(n)
    if t not in TAGS:
        raise ValidationError(f"unknown space tag {text!r}; known: {', '.join(TAGS)}, wedge-N")
    return t


def known_space(tag: str) -> KnownSpace:
    t = canonical_tag(tag)
    if t.startswith("wedge-"):
        n = int(t.split("-")[1])
        gens = tuple(f"x{i}" for i in range(1, n + 1))
        return KnownSpace(t, f"wedge of {n} circles", Presentation(gens, ()), True)
    return {
        "sphere": KnownSpace(t, "sphere", Presentation((), ()), False),
        "torus": KnownSpace(t, "torus", presentation("a b", "[a,b]"), True),
        "rp2": KnownSpace(t, "RP2", presentation("c", "c^2"), False),
        "klein": KnownSpace(t, "Klein bottle", presentation("c d", "c d c^-1 d"), True),
        "z*z2": KnownSpace(t, "K(Z*Z/2,1)", presentation("a b", "b^2"), True),
    }[t]


def known_space_verdict(tag: str, r: RingDescriptor) -> Verdict | None:
    """Hardcoded verdict for a known space, or None when there is no entry."""
    t = canonical_tag(tag)
    ring = str(r)
    if t.startswith("wedge-"):
        return Verdict(Status.BAD, [record("known:wedge", circles=int(t.split("-")[1]), ring=ring)])
    if t == "sphere":
        return Verdict(Status.GOOD, [record("known:sphere")])
    if t == "torus":
        return Verdict(Status.GOOD, [record("known:torus")])
    if t == "rp2":
        if is_prime_field(r):
            return Verdict(Status.GOOD, [record("known:rp2:G2", ring=ring)])
        if inverts_prime(r, 2):
            return Verdict(Status.GOOD, [record("known:rp2:G3", ring=ring, half_in_ring=True)])
        return Verdict(Status.BAD, [record("known:rp2:bad", ring=ring, half_in_ring=False)])
    if t == "klein":
        if is_prime_field(r):
            return Verdict(Status.GOOD, [record("known:klein:G5", ring=ring)])
        if inverts_prime(r, 2):
            return Verdict(Status.GOOD, [record("known:klein:good", ring=ring, two_inverted=True)])
        return Verdict(Status.BAD, [record("known:klein:bad", ring=ring, two_inverted=False)])
    if t == "z*z2":
        if isinstance(r, PrimeField) and r.p != 2:
            return Verdict(Status.GOOD, [record("known:z*z2", ring=ring)])
        return None
    raise AssertionError(t)
