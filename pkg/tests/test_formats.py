import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from frolicher.catalog import preset
from frolicher.errors import ParseError
from frolicher.formats import (census_document, dump_complex, dump_equations, load_complex, load_equations,
                               witness_document)
from frolicher.random_complexes import random_complex
from frolicher.zigzag import decompose

SMALL = """double-complex v1
# a length-2 zigzag
bounds 0 1 0 0
space 0 0 1 x
space 1 0 1 y
map 0 0 h
row 1/2+i
"""


def test_small_document():
    dc = load_complex(SMALL)
    assert dc.labels[(0, 0)] == ("x",)
    assert str(dc.map("h", 0, 0)[0, 0]) == "1/2+i"
    assert dump_complex(dc) == SMALL.replace("# a length-2 zigzag\n", "")


def test_presets_round_trip(preset_complexes):
    for dc in preset_complexes.values():
        text = dump_complex(dc)
        again = load_complex(text)
        assert again == dc
        assert dump_complex(again) == text


@given(st.integers(0, 10_000))
def test_random_round_trip(seed):
    _, dc = random_complex(seed)
    text = dump_complex(dc)
    assert dump_complex(load_complex(text)) == text


@pytest.mark.parametrize("text, line, column, fragment", [
    ("nonsense\n", 1, 1, "header"),
    ("double-complex v1\nspace 0 0 1 x\n", 2, 1, "before bounds"),
    ("double-complex v1\nbounds 0 1 0 0\nspace 0 0 1 x\nspace 1 0 1 y\nmap 0 0 h\nrow 1 2\n", 6, 1, "expected 1"),
    ("double-complex v1\nbounds 0 1 0 0\nspace 0 0 1 x\nspace 1 0 1 y\nmap 0 0 h\nrow  1/0\n", 6, 6, "zero denominator"),
    ("double-complex v1\nbounds 0 1 0 0\nspace 0 0 1 x\nspace 1 0 1 y\nmap 0 0 q\n", 5, 9, "h or v"),
    ("double-complex v1\nbounds 0 1 0 0\nspace 0 0 two x\n", 3, 11, "integer"),
    ("double-complex v1\nbounds 0 1 0 0\nspace 5 0 1 x\n", 3, 7, "outside bounds"),
    ("double-complex v1\nbounds 0 1 0 0\nspace 0 0 2 x\n", 3, 11, "labels"),
    ("double-complex v1\nbounds 0 1 0 0\nrow 1\n", 3, 1, "outside of a map"),
    ("double-complex v1\nbounds 0 1 0 0\nspace 0 0 1 x\nmap 0 0 h\nrow 1\n", 4, 1, "rows, expected 0"),
    ("double-complex v1\nbounds 0 1 0 0\nfrobnicate\n", 3, 1, "unknown record"),
])
def test_parse_errors_point_at_the_problem(text, line, column, fragment):
    with pytest.raises(ParseError) as err:
        load_complex(text, "doc.dc")
    assert (err.value.line, err.value.column) == (line, column)
    assert fragment in str(err.value)
    assert str(err.value).startswith(f"doc.dc:line {line}, column {column}")


def test_equations_round_trip():
    eqs = preset("deform-d").equations()
    assert load_equations(dump_equations(eqs)) == eqs


def test_equation_errors():
    with pytest.raises(ParseError):
        load_equations("hol = []")
    with pytest.raises(ParseError):
        load_equations('n = 3\nhol = [[3, 1, 2]]')
    with pytest.raises(ParseError):
        load_equations('n = 3\nhol = [[3, 1, 1, "1"]]')
    with pytest.raises(ParseError):
        load_equations('n = 3\nhol = [[3, 1, 2, "x"]]')
    with pytest.raises(ParseError) as err:
        load_equations("n = = 3")
    assert err.value.line == 1


def test_json_documents(preset_complexes):
    dec = decompose(preset_complexes["iwasawa"])
    doc = json.loads(json.dumps(census_document(dec)))
    assert doc["summary"] == "36 × L1, 12 × L2, 1 × square"
    assert doc["census"][0] == {"kind": "square", "anchor": [1, 1], "arrow_word": "", "multiplicity": 1}
    w = witness_document(dec)
    assert len(w["witness"]["1,1"]) == 9 and len(w["summands"]) == 49
