import time
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from frolicher.catalog import preset
from frolicher.random_complexes import random_complex
from frolicher.spectral import (FrolicherSequence, cohomology, degeneration_page, euler_characteristics, page,
                                theory_name)
from frolicher.zigzag import square, zigzag

COLUMNS = [(1, 0), (0, 1), (2, 0), (1, 1), (0, 2), (3, 0), (2, 1), (1, 2), (0, 3), (3, 1), (2, 2), (1, 3), (3, 2), (2, 3)]

# published page tables, typed independently of the package data
PRINTED = {
    "iwasawa": [[3, 2, 3, 6, 2, 1, 6, 6, 1, 2, 6, 3, 2, 3], [2, 2, 2, 4, 2, 1, 4, 4, 1, 2, 4, 2, 2, 2]],
    "deform-b": [[2, 2, 2, 5, 2, 1, 5, 5, 1, 2, 5, 2, 2, 2], [2, 2, 2, 4, 2, 1, 4, 4, 1, 2, 4, 2, 2, 2]],
    "deform-c": [[2, 2, 1, 5, 2, 1, 4, 4, 1, 2, 5, 1, 2, 2]],
    "deform-d": [[2, 2, 1, 5, 2, 1, 4, 4, 1, 2, 5, 1, 2, 2]],
}
DEGENERATION = {"torus": 1, "iwasawa": 2, "deform-b": 2, "deform-c": 1, "deform-d": 1}


@pytest.mark.parametrize("name", sorted(PRINTED))
def test_printed_rows(name, preset_complexes):
    seq = FrolicherSequence(preset_complexes[name])
    for r, row in enumerate(PRINTED[name], 1):
        assert [seq.page(r)[c] for c in COLUMNS] == row
        assert seq.page(r)[(0, 0)] == seq.page(r)[(3, 3)] == 1


@pytest.mark.parametrize("name", sorted(DEGENERATION))
def test_degeneration_pages(name, preset_complexes):
    assert degeneration_page(preset_complexes[name]) == DEGENERATION[name]


def test_torus_is_binomial(preset_complexes):
    t = page(preset_complexes["torus"], 1)
    assert all(n == comb(3, p) * comb(3, q) for (p, q), n in t.entries.items())
    assert cohomology(preset_complexes["torus"], "deRham").entries == {k: comb(6, k) for k in range(7)}


def test_iwasawa_pages_under_a_second():
    dc = preset("iwasawa").complex()
    start = time.perf_counter()
    FrolicherSequence(dc).pages(2)
    assert time.perf_counter() - start < 1.0


def test_iwasawa_betti_numbers(preset_complexes):
    assert cohomology(preset_complexes["iwasawa"], "derham").entries == {0: 1, 1: 4, 2: 8, 3: 10, 4: 8, 5: 4, 6: 1}


def test_dolbeault_is_first_page(preset_complexes):
    for dc in preset_complexes.values():
        assert cohomology(dc, "Dolbeault").entries == page(dc, 1).entries


def test_bott_chern_and_aeppli_are_conjugation_symmetric(preset_complexes):
    for dc in preset_complexes.values():
        for theory in ("BottChern", "Aeppli"):
            t = cohomology(dc, theory)
            assert all(t[(p, q)] == t[(q, p)] for p, q in t.entries)


def test_dolbeault_is_not_conjugation_symmetric(preset_complexes):
    t = cohomology(preset_complexes["iwasawa"], "Dolbeault")
    assert (t[(1, 0)], t[(0, 1)]) == (3, 2)


@pytest.mark.parametrize("name", sorted(DEGENERATION))
def test_serre_symmetry_every_page(name, preset_complexes):
    seq = FrolicherSequence(preset_complexes[name])
    for t in seq.pages(seq.scan_limit):
        assert all(n == t[(3 - p, 3 - q)] for (p, q), n in t.entries.items())


def test_square_contributes_nothing():
    dc = square(0, 0).model()
    seq = FrolicherSequence(dc)
    assert all(not any(seq.page(r).entries.values()) for r in range(1, 4))
    assert not any(cohomology(dc, "deRham").entries.values())


def test_length_two_zigzag_dies_on_second_page():
    dc = zigzag(0, 0, "h").model()
    seq = FrolicherSequence(dc)
    assert (seq.page(1)[(0, 0)], seq.page(1)[(1, 0)]) == (1, 1)
    assert (seq.page(2)[(0, 0)], seq.page(2)[(1, 0)]) == (0, 0)
    assert seq.page(1).dr_ranks[(0, 0)] == 1


def test_odd_zigzags_carry_one_de_rham_class():
    for shape in (zigzag(0, 1, "vh"), zigzag(0, 0, "hvhv"), zigzag(1, 1)):
        assert sum(cohomology(shape.model(), "deRham").entries.values()) == 1
    assert sum(cohomology(zigzag(0, 1, "vhv").model(), "deRham").entries.values()) == 0


def test_theory_aliases():
    assert theory_name("bott-chern") == "BottChern"
    assert theory_name("dolbeault") == "Dolbeault"
    with pytest.raises(ValueError):
        theory_name("hodge")


@given(st.integers(0, 10_000))
def test_page_recursion(seed):
    _, dc = random_complex(seed)
    seq = FrolicherSequence(dc)
    p0, p1, q0, q1 = dc.bounds
    for r in range(1, seq.scan_limit):
        cur, nxt = seq.page(r), seq.page(r + 1)
        for (p, q), n in cur.entries.items():
            into = cur.dr_ranks.get((p - r, q + r - 1), 0)
            assert nxt[(p, q)] == n - cur.dr_ranks[(p, q)] - into


@given(st.integers(0, 10_000))
def test_limit_page_is_de_rham(seed):
    _, dc = random_complex(seed)
    seq = FrolicherSequence(dc)
    limit = seq.limit_page()
    derham = cohomology(dc, "deRham")
    assert all(limit.total(k) == n for k, n in derham.entries.items())
    assert limit.differential_vanishes()
    r = seq.degeneration_page()
    assert seq.page(r).entries == limit.entries
    chis = euler_characteristics(seq.pages(seq.scan_limit))
    assert len(set(chis)) == 1
