from __future__ import annotations

import pytest
from hypothesis import assume, given

from rgood.abelian import h1_invariants
from rgood.families import SurfaceDescriptor, surface_presentation
from rgood.presentations import Presentation, presentation
from rgood.verylarge import Status, VeryLargeStatus, find_f2_surjection, pair_criterion, very_large_status
from tests.helpers import presentations

GENUS_2 = surface_presentation(SurfaceDescriptor(True, 2))


def test_pair_criterion_examples():
    assert pair_criterion(GENUS_2, ("a_1", "a_2"))
    assert not pair_criterion(GENUS_2, ("a_1", "b_1"))
    assert not pair_criterion(presentation("a b", "b^2"), ("a", "b"))
    assert not pair_criterion(presentation("a b c", "a^2 b^2 c^2"), ("a", "b"))


def test_pair_criterion_rejects_bad_pairs():
    with pytest.raises(ValueError):
        pair_criterion(GENUS_2, ("a_1", "a_1"))
    with pytest.raises(ValueError):
        pair_criterion(GENUS_2, ("a_1", "z"))


def test_find_examples():
    assert find_f2_surjection(GENUS_2).kept_pair == ("a_1", "a_2")
    assert find_f2_surjection(presentation("a b", "b^2")) is None
    w = find_f2_surjection(presentation("a b c", "c"))
    assert w.kept_pair == ("a", "b") and w.checked_relators == 1


def test_find_with_tietze_reports_simplified_presentation():
    # a and c both occur once; the tie goes to the earlier generator, a
    p = presentation("a b c", "c a^-1")
    w = find_f2_surjection(p, try_tietze_first=True)
    assert w.kept_pair == ("b", "c")
    assert w.presentation == presentation("b c")
    assert find_f2_surjection(p) is None


def test_tietze_exposes_a_pair():
    p = presentation("a b c", "c a^-1 b^-1")
    assert find_f2_surjection(p) is None
    w = find_f2_surjection(p, try_tietze_first=True)
    assert w.kept_pair == ("b", "c") and w.presentation.relators == ()


@given(presentations(max_gens=4, max_rels=3, max_len=6))
def test_tietze_keeps_raw_witnesses(p):
    raw = find_f2_surjection(p)
    assume(raw is not None)
    simplified = find_f2_surjection(p, try_tietze_first=True)
    assert simplified is not None
    assert set(raw.kept_pair) <= set(simplified.presentation.generators)
    assert pair_criterion(simplified.presentation, raw.kept_pair)


def test_very_large_status_examples():
    odd5 = surface_presentation(SurfaceDescriptor(False, 5))
    even4 = surface_presentation(SurfaceDescriptor(False, 4))
    s = very_large_status(odd5)
    assert s.status is Status.YES and s.witness.kept_pair == ("a_1", "a_2")
    s = very_large_status(even4)
    assert s.status is Status.YES and s.witness.kept_pair == ("a_1", "c")
    s = very_large_status(presentation("a b", "b^2"))
    assert s.status is Status.UNKNOWN and s.witness is None


def test_status_enum_has_no_negative():
    assert {s.value for s in Status} == {"yes", "unknown"}
    with pytest.raises(ValueError):
        VeryLargeStatus(Status.YES)


@pytest.mark.parametrize("g", [2, 3, 4])
def test_orientable_family_all_a_pairs(g):
    p = surface_presentation(SurfaceDescriptor(True, g))
    for i in range(1, g + 1):
        for j in range(1, g + 1):
            if i != j:
                assert pair_criterion(p, (f"a_{i}", f"a_{j}"))


@given(presentations(max_gens=4, max_rels=3, max_len=6))
def test_acceptance_implies_rank_two(p):
    w = find_f2_surjection(p)
    assume(w is not None)
    assert h1_invariants(p).free_rank >= 2


@given(presentations(max_gens=4, max_rels=4, max_len=6))
def test_monotone_under_relator_deletion(p):
    assume(p.relators)
    smaller = Presentation(p.generators, p.relators[1:])
    for pair in [(x, y) for i, x in enumerate(p.generators) for y in p.generators[i + 1 :]]:
        if pair_criterion(p, pair):
            assert pair_criterion(smaller, pair)


@given(presentations())
def test_never_no(p):
    assert very_large_status(p).status in (Status.YES, Status.UNKNOWN)
