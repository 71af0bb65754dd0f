import random

import pytest
from hypothesis import strategies as st

from surfchar import nilpotent as nil
from surfchar.words import Letter, SurfaceContext, Word


def letters(genus):
    return st.builds(Letter, st.integers(1, 2 * genus), st.sampled_from((1, -1)))


def words(genus, max_size=12):
    return st.lists(letters(genus), max_size=max_size).map(lambda ls: Word(tuple(ls)))


def nil2_elements(genus, bound=9):
    size = len(nil.pair_index_set(genus))
    coord = st.integers(-bound, bound)
    return st.builds(
        lambda n, m: nil.Nil2Element(genus, tuple(n), tuple(m)),
        st.lists(coord, min_size=2 * genus, max_size=2 * genus),
        st.lists(coord, min_size=size, max_size=size),
    )


genera = st.sampled_from((2, 3, 4, 5))


@pytest.fixture
def rng():
    return random.Random(20261016)


@pytest.fixture(params=[2, 3])
def ctx(request):
    return SurfaceContext(request.param)
