import random
from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from frolicher import spectral
from frolicher.complex import DoubleComplex
from frolicher.errors import ValidationError
from frolicher.linalg import Mat
from frolicher.random_complexes import random_complex, random_shapes, scrambled
from frolicher.zigzag import (Decomposition, Shape, census_summary, census_tables, decompose,
                              identity_decomposition, square, verification_errors, verify, zigzag)


def lengths(dec):
    return dict(dec.census_by_length())


def test_shape_cells_and_arrows():
    z = zigzag(1, 0, "vh")
    assert z.cells() == [(1, 1), (1, 0), (2, 0)]
    assert z.length == 3 and z.name() == "L3"
    assert [(a, b, d) for a, b, d, _ in z.arrows()] == [(1, 0, "v"), (1, 2, "h")]
    assert square(0, 0).cells() == [(0, 0), (1, 0), (0, 1), (1, 1)]
    assert str(zigzag(0, 0)) == "L1@(0,0)"
    with pytest.raises(ValueError):
        zigzag(0, 0, "hh")
    with pytest.raises(ValueError):
        Shape("triangle", (0, 0))


def test_single_dot():
    dc = DoubleComplex((0, 0, 0, 0), {(0, 0): 1})
    dec = decompose(dc)
    assert dec.summands == (zigzag(0, 0),)
    assert verify(dc, dec)


def test_iwasawa_census(preset_complexes):
    dec = decompose(preset_complexes["iwasawa"])
    assert lengths(dec) == {"L1": 36, "L2": 12, "square": 1}
    assert census_summary(dec.census_by_length()) == "36 × L1, 12 × L2, 1 × square"
    assert verify(preset_complexes["iwasawa"], dec)


def test_deform_b_census(preset_complexes):
    dec = decompose(preset_complexes["deform-b"])
    # the stated 28 length-1 zigzags would leave two of the 64 dimensions unaccounted for
    assert lengths(dec) == {"L1": 30, "L2": 4, "L3": 4, "L5": 2, "square": 1}


def test_deform_c_and_d_censuses(preset_complexes):
    c = lengths(decompose(preset_complexes["deform-c"]))
    d = lengths(decompose(preset_complexes["deform-d"]))
    assert c == {"L1": 26, "L3": 8, "L5": 2, "square": 1}
    assert d == {"L1": 24, "L3": 12, "square": 1}
    assert d["L3"] - c["L3"] == 2 * c["L5"]


def test_every_preset_accounts_for_all_dimensions(preset_complexes):
    for dc in preset_complexes.values():
        dec = decompose(dc)
        assert sum(s.length for s in dec.summands) == 64
        assert verify(dc, dec)


def test_tampered_census_fails():
    dc = zigzag(0, 0, "h").model()
    fake = Decomposition((zigzag(0, 0), zigzag(1, 0)), {(0, 0): Mat.identity(1), (1, 0): Mat.identity(1)}, dc.bounds)
    assert not verify(dc, fake)
    assert "not block diagonal" in verification_errors(dc, fake)[0]


def test_wrong_dimensions_and_singular_witness_fail():
    dc = zigzag(0, 0, "h").model()
    assert not verify(dc, Decomposition((zigzag(0, 0),), {(0, 0): Mat.identity(1)}, dc.bounds))
    zero = Mat.zero(1, 1)
    assert "singular" in verification_errors(dc, Decomposition((zigzag(0, 0, "h"),),
                                                                {(0, 0): zero, (1, 0): zero}, dc.bounds))[0]


def test_identity_witness_on_split_complex():
    shapes = [square(0, 0), zigzag(0, 1, "vhv"), zigzag(1, 1)]
    model, dec = identity_decomposition(shapes)
    assert verify(model, dec)


def test_invalid_complex_is_rejected():
    from test_complex import broken_square

    with pytest.raises(ValidationError):
        decompose(broken_square())


def test_witness_changes_with_basis_but_census_does_not():
    rng = random.Random(7)
    shapes = [square(0, 0), square(0, 0), zigzag(0, 1, "vh"), zigzag(1, 0, "h"), zigzag(0, 0)]
    a, b = scrambled(shapes, rng), scrambled(shapes, rng)
    da, db = decompose(a), decompose(b)
    assert da.census == db.census == Counter(shapes)
    assert any(da.witness[pq] != db.witness[pq] for pq in da.witness)


@given(st.integers(0, 100_000))
def test_random_round_trip(seed):
    shapes, dc = random_complex(seed)
    dec = decompose(dc)
    assert verification_errors(dc, dec) == []
    assert dec.census == Counter(shapes)


@given(st.integers(0, 100_000))
def test_dense_random_round_trip(seed):
    rng = random.Random(seed)
    bounds = (0, rng.randint(1, 3), 0, rng.randint(1, 3))
    shapes = random_shapes(rng, bounds, count=rng.randint(5, 30))
    dc = scrambled(shapes, rng)
    dec = decompose(dc)
    assert verify(dc, dec) and dec.census == Counter(shapes)


@given(st.integers(0, 100_000))
def test_census_tables_match_direct_computation(seed):
    _, dc = random_complex(seed)
    ct = census_tables(decompose(dc))
    seq = spectral.FrolicherSequence(dc)
    assert [t.entries for t in ct.pages] == [seq.page(r).entries for r in range(1, len(ct.pages) + 1)]
    for theory in spectral.THEORIES:
        assert ct.cohomology[theory].entries == spectral.cohomology(dc, theory).entries
    assert ct.dolbeault_by_counting == ct.cohomology["Dolbeault"].entries


def test_census_tables_on_presets(preset_complexes):
    for name, dc in preset_complexes.items():
        ct = census_tables(decompose(dc))
        assert ct.dolbeault_by_counting == spectral.cohomology(dc, "Dolbeault").entries, name
        assert ct.cohomology["BottChern"].entries == spectral.cohomology(dc, "BottChern").entries, name


def test_census_rows_are_canonical(preset_complexes):
    rows = decompose(preset_complexes["iwasawa"]).census_rows()
    assert rows[0] == ("square", (1, 1), "", 1)
    assert sum(m for *_, m in rows) == 49
    assert rows == sorted(rows, key=lambda r: (r[0] != "square", sum(r[1]), r[1][0], len(r[2]), r[2]))
