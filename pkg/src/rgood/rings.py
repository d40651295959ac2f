"""Coefficient rings: Z, Q, Z/p and Z with finitely many primes inverted.

Every representable descriptor is a solid ring, so each one is its own core
apart from the empty localization, which is just Z.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from sympy import isprime, primefactors

from rgood.errors import CompositeModulusError, ParseError, UnsupportedRingError


@dataclass(frozen=True)
class Integers:
    def __str__(self) -> str:
        return "Z"


@dataclass(frozen=True)
class Rationals:
    def __str__(self) -> str:
        return "Q"


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self) -> None:
        if not isprime(self.p):
            raise CompositeModulusError(f"Z/{self.p}: modulus must be prime")

    def __str__(self) -> str:
        return f"Z/{self.p}"


@dataclass(frozen=True)
class LocalizedIntegers:
    inverted: frozenset[int] = frozenset()

    def __post_init__(self) -> None:
        object.__setattr__(self, "inverted", frozenset(self.inverted))
        for q in self.inverted:
            if not isprime(q):
                raise UnsupportedRingError(f"1/{q}: only primes may be inverted")

    def __str__(self) -> str:
        return "Z[" + ",".join(f"1/{q}" for q in sorted(self.inverted)) + "]"


RingDescriptor = Union[Integers, Rationals, PrimeField, LocalizedIntegers]

_MOD = re.compile(r"Z\s*/\s*(\d+)")
_LOC = re.compile(r"Z\s*\[(.*)\]")
_FRACTION = re.compile(r"1\s*/\s*(\d+)")


def parse_ring(text: str) -> RingDescriptor:
    """Parse ``Z``, ``Q``, ``Z/p`` or ``Z[1/p1,...,1/pk]``.

    >>> parse_ring("Z[1/3, 1/2]")
    LocalizedIntegers(inverted=frozenset({2, 3}))
    """
    s = text.strip()
    if s == "Z":
        return Integers()
    if s == "Q":
        return Rationals()
    if m := _MOD.fullmatch(s):
        return PrimeField(int(m.group(1)))
    if m := _LOC.fullmatch(s):
        primes = set()
        for entry in m.group(1).split(","):
            f = _FRACTION.fullmatch(entry.strip())
            if f is None:
                raise ParseError(f"cannot parse inverted element {entry.strip()!r} in {text!r}")
            primes.add(int(f.group(1)))
        return LocalizedIntegers(frozenset(primes))
    raise ParseError(f"cannot parse ring {text!r}; expected Z, Q, Z/p or Z[1/p,...]")


def normalize_ring(r: RingDescriptor) -> RingDescriptor:
    if isinstance(r, LocalizedIntegers) and not r.inverted:
        return Integers()
    return r


def render_ring(r: RingDescriptor) -> str:
    return str(normalize_ring(r))


def inverts_prime(r: RingDescriptor, p: int) -> bool:
    match r:
        case Integers():
            return False
        case Rationals():
            return True
        case LocalizedIntegers(inverted=primes):
            return p in primes
        case PrimeField(p=q):
            return p != q
    raise TypeError(f"unsupported ring descriptor {r!r}")


def is_prime_field(r: RingDescriptor) -> bool:
    return isinstance(r, PrimeField)


def is_subring_of_rationals(r: RingDescriptor) -> bool:
    return isinstance(r, (Integers, Rationals, LocalizedIntegers))


def theorem_supported(r: object) -> bool:
    """Gate for verdicts: True only for the four known descriptor variants."""
    return isinstance(r, (Integers, Rationals, PrimeField, LocalizedIntegers))


def prime_factors(n: int) -> list[int]:
    return primefactors(n)
