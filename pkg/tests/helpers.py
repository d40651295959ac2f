"""Shared generators for random words and presentations."""

from __future__ import annotations

import random

from hypothesis import strategies as st

from rgood.presentations import Presentation
from rgood.words import Letter


def letters_over(gens):
    return st.builds(Letter, st.sampled_from(list(gens)), st.sampled_from([1, -1]))


def words_over(gens, max_size=8):
    return st.lists(letters_over(gens), max_size=max_size).map(tuple)


@st.composite
def presentations(draw, max_gens=4, max_rels=4, max_len=8):
    n = draw(st.integers(1, max_gens))
    gens = tuple("abcdefgh"[:n])
    rels = draw(st.lists(words_over(gens, max_len), max_size=max_rels))
    return Presentation(gens, tuple(rels))


def random_presentation(rng: random.Random, max_gens=4, max_rels=4, max_len=8) -> Presentation:
    n = rng.randint(1, max_gens)
    gens = tuple("abcd"[:n])
    rels = []
    for _ in range(rng.randint(0, max_rels)):
        length = rng.randint(0, max_len)
        rels.append(tuple(Letter(rng.choice(gens), rng.choice((1, -1))) for _ in range(length)))
    return Presentation(gens, tuple(rels))
