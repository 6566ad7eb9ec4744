import random

from hypothesis import strategies as st

from torus_rigidity.exact import IntegerMatrix
from torus_rigidity.random_systems import random_commuting_family, random_unimodular

seeds = st.integers(min_value=0, max_value=2**32 - 1)


@st.composite
def unimodular_matrices(draw, min_dim=1, max_dim=4, entry_bound=3):
    dim = draw(st.integers(min_dim, max_dim))
    return random_unimodular(random.Random(draw(seeds)), dim, entry_bound)


@st.composite
def integer_matrices(draw, min_dim=1, max_dim=4, bound=4):
    n = draw(st.integers(min_dim, max_dim))
    m = draw(st.integers(min_dim, max_dim))
    rows = draw(st.lists(st.lists(st.integers(-bound, bound), min_size=m, max_size=m),
                         min_size=n, max_size=n))
    return IntegerMatrix(tuple(map(tuple, rows)))


@st.composite
def square_matrices(draw, min_dim=1, max_dim=4, bound=4):
    n = draw(st.integers(min_dim, max_dim))
    rows = draw(st.lists(st.lists(st.integers(-bound, bound), min_size=n, max_size=n),
                         min_size=n, max_size=n))
    return IntegerMatrix(tuple(map(tuple, rows)))


@st.composite
def commuting_families(draw, max_dim=4):
    return random_commuting_family(random.Random(draw(seeds)), max_dim)


def vectors(m, bound=5):
    return st.lists(st.integers(-bound, bound), min_size=m, max_size=m).map(tuple)
