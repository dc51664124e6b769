import sys
from pathlib import Path

import pytest
from hypothesis import settings, strategies as st

# Add the 'src' directory to the Python path for test discovery
src_path = Path(__file__).resolve().parent.parent / "src"
sys.path.insert(0, str(src_path))

settings.register_profile("majca", deadline=None)
settings.load_profile("majca")

from majca.core.automaton import Configuration, parse_configuration  # noqa: E402


@st.composite
def configurations(draw, min_n=1, max_n=40):
    cells = draw(st.lists(st.integers(0, 1), min_size=min_n, max_size=max_n))
    return Configuration.from_cells(cells)


radii = st.integers(min_value=1, max_value=5)


@pytest.fixture
def ring():
    """Parse a 0/1 string, optionally repeated."""
    return parse_configuration


@pytest.fixture
def weakly_periodic_ring():
    # (0011)^3 is a 2-cycle of the radius-2 majority rule
    return parse_configuration("0011", 3)
