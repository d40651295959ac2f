"""Closed surfaces and their fundamental group presentations.

Non-orientable surfaces use the split form: genus ``2k+1`` is
``[a_1,b_1]...[a_k,b_k] c^2`` and genus ``2k+2`` is
``[a_1,b_1]...[a_k,b_k] c d c^-1 d``.
"""

from __future__ import annotations

from dataclasses import dataclass

from rgood import words
from rgood.errors import ValidationError
from rgood.presentations import Presentation
from rgood.words import Letter


@dataclass(frozen=True)
class SurfaceDescriptor:
    orientable: bool
    genus: int

    def __post_init__(self) -> None:
        if self.genus < 0:
            raise ValidationError("surface genus must be nonnegative")
        if not self.orientable and self.genus == 0:
            raise ValidationError("a non-orientable surface has genus >= 1")

    @property
    def label(self) -> str:
        if self.orientable:
            named = {0: "sphere", 1: "torus"}
            return named.get(self.genus, f"orientable genus {self.genus}")
        named = {1: "RP2", 2: "Klein bottle"}
        return named.get(self.genus, f"non-orientable genus {self.genus}")

    @property
    def aspherical(self) -> bool:
        """Whether the surface is a K(pi_1, 1); false only for the sphere and RP2."""
        return self.genus >= 2 or (self.orientable and self.genus == 1)


def _commutator_product(k: int) -> words.Word:
    w: words.Word = ()
    for i in range(1, k + 1):
        w += words.commutator((Letter(f"a_{i}", 1),), (Letter(f"b_{i}", 1),))
    return w


def _ab_generators(k: int) -> tuple[str, ...]:
    return tuple(f"a_{i}" for i in range(1, k + 1)) + tuple(f"b_{i}" for i in range(1, k + 1))


def surface_presentation(s: SurfaceDescriptor) -> Presentation:
    if s.orientable:
        if s.genus == 0:
            return Presentation((), ())
        return Presentation(_ab_generators(s.genus), (_commutator_product(s.genus),))
    k, odd = divmod(s.genus - 1, 2)
    if odd == 0:
        c = Letter("c", 1)
        return Presentation(_ab_generators(k) + ("c",), (_commutator_product(k) + (c, c),))
    c, d = Letter("c", 1), Letter("d", 1)
    tail = (c, d, c.inverse(), d)
    return Presentation(_ab_generators(k) + ("c", "d"), (_commutator_product(k) + tail,))
