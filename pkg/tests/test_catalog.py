import pytest
from hypothesis import given
from hypothesis import strategies as st

from frolicher.catalog import Catalog, ClassLabel, SigmaSet, classify, preset, preset_names, s_matrix, s_rank
from frolicher.errors import CatalogError, UnclassifiableError
from frolicher.linalg import Mat
from frolicher.scalar import I

from conftest import nonzero_scalars, scalars


def test_s_matrix_examples():
    assert s_rank(SigmaSet()) == 0
    assert s_matrix(SigmaSet(s11b=1)) == Mat.from_rows([[1, 0, 0, 0], [1, 0, 0, 0]], 4)
    assert s_rank(SigmaSet(s11b=1)) == 1
    assert s_matrix(SigmaSet(s21b=1)) == Mat.from_rows([[0, 0, 0, 1], [0, 0, 1, 0]], 4)
    assert s_rank(SigmaSet(s21b=1)) == 2


def test_first_row_is_conjugated():
    assert s_matrix(SigmaSet(s11b=I)).row(0)[0] == -I


@given(st.lists(scalars, min_size=5, max_size=5), nonzero_scalars)
def test_rank_is_scale_invariant(vals, c):
    sigma = SigmaSet(*vals)
    assert s_rank(sigma.scaled(c)) == s_rank(sigma)


def test_classify():
    assert classify(SigmaSet(s12=1), False) == ClassLabel("i", 0)
    assert classify(SigmaSet(s12=1, s11b=1), False) == ClassLabel("ii.a", 1)
    assert classify(SigmaSet(s21b=1), False) == ClassLabel("ii.b", 2)
    assert classify(SigmaSet(s11b=1, s22b=1), True) == ClassLabel("iii.a", 1)
    assert classify(SigmaSet(s11b=I, s22b=1), True) == ClassLabel("iii.b", 2)
    with pytest.raises(UnclassifiableError):
        classify(SigmaSet(s12=1), True)


def test_presets():
    assert preset_names() == ["deform-b", "deform-c", "deform-d", "iwasawa", "torus"]
    for name in preset_names():
        p = preset(name)
        if p.label is not None:
            assert classify(p.sigma, p.d_nonzero) == p.label
    assert preset("deform-b").label == ClassLabel("ii.a", 1)
    assert preset("torus").sigma == SigmaSet()
    assert "ii.b" not in {str(preset(n).label) for n in preset_names()}


def test_unknown_preset():
    with pytest.raises(CatalogError, match="unknown preset 'heisenberg'"):
        preset("heisenberg")


def test_malformed_catalog(tmp_path):
    bad = tmp_path / "presets.toml"
    bad.write_text('[x]\ns13 = "1"\n')
    with pytest.raises(CatalogError):
        Catalog(bad)
    bad.write_text('[x]\ns12 = "1/0"\n')
    with pytest.raises(CatalogError):
        Catalog(bad)
    bad.write_text('[x]\nclass = "iv"\n')
    with pytest.raises(CatalogError):
        Catalog(bad)


def test_sigma_mapping_round_trip():
    sigma = SigmaSet(s12=1, s11b=I, s22b="1/2-i")
    assert SigmaSet.from_mapping(sigma.to_mapping()) == sigma
