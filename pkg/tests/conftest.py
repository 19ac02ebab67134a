import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from frolicher.catalog import preset, preset_names
from frolicher.linalg import Mat
from frolicher.scalar import Scalar

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

small_int = st.integers(-4, 4)
scalars = st.builds(Scalar, small_int, small_int)
nonzero_scalars = scalars.filter(bool)
rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
rich_scalars = st.builds(Scalar, rationals, rationals)


@st.composite
def matrices(draw, max_rows=5, max_cols=5, rows=None, cols=None):
    r = draw(st.integers(0, max_rows)) if rows is None else rows
    c = draw(st.integers(0, max_cols)) if cols is None else cols
    # skew towards low rank so kernels are interesting
    entries = draw(st.lists(st.one_of(st.just(Scalar(0)), scalars), min_size=r * c, max_size=r * c))
    return Mat(r, c, tuple(entries))


@pytest.fixture(scope="session")
def preset_complexes():
    return {name: preset(name).complex() for name in preset_names()}


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for n in sorted(lines):
            terminalreporter.write_line(lines[n])
