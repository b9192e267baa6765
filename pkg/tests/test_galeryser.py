import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chowfactor.discdeg import mu_discriminant_degree
from chowfactor.errors import DomainError
from chowfactor.galeryser import binary_hyperdet_degree_gr, gale_ryser_bruteforce, gale_ryser_count
from chowfactor.partitions import Partition, multinomial


@pytest.mark.parametrize(
    "rows, cols, expected", [((1, 1, 1), (3,), 1), ((1, 1), (1, 1), 2), ((2, 2), (2, 2), 1)]
)
def test_examples(rows, cols, expected):
    assert gale_ryser_count(rows, cols) == expected
    assert gale_ryser_bruteforce(rows, cols) == expected


def test_sum_mismatch():
    with pytest.raises(DomainError):
        gale_ryser_count((1, 1), (3,))


def test_rows_of_ones_give_multinomials():
    for lam in [(4, 2, 2), (3, 3, 2), (5, 3)]:
        assert gale_ryser_count((1,) * 8, lam) == multinomial(8, lam)


@st.composite
def margins(draw):
    r = draw(st.integers(1, 4))
    c = draw(st.integers(1, 4))
    bits = draw(st.lists(st.integers(0, 1), min_size=r * c, max_size=r * c))
    grid = [bits[i * c:(i + 1) * c] for i in range(r)]
    rows = [sum(row) for row in grid]
    cols = sorted((sum(col) for col in zip(*grid)), reverse=True)
    return rows, cols


@settings(max_examples=40, deadline=None)
@given(margins())
def test_matches_bruteforce_and_transpose(data):
    rows, cols = data
    if sum(rows) == 0:
        return
    cols_nz = [c for c in cols if c > 0]
    count = gale_ryser_count(rows, Partition(tuple(cols_nz)))
    assert count == gale_ryser_bruteforce(rows, cols_nz)
    # transpose with labeled margins on both sides
    assert gale_ryser_bruteforce(cols_nz, rows) == count


@settings(max_examples=60, deadline=None)
@given(margins())
def test_transpose_invariance(data):
    rows, cols = data
    rows_nz = tuple(sorted((r for r in rows if r > 0), reverse=True))
    cols_nz = tuple(c for c in cols if c > 0)
    if not rows_nz:
        return
    assert gale_ryser_count(rows_nz, Partition(cols_nz)) == gale_ryser_count(cols_nz, Partition(rows_nz))


def test_binary_hyperdet_examples():
    assert binary_hyperdet_degree_gr(3) == 4
    assert binary_hyperdet_degree_gr(4) == 24
    assert binary_hyperdet_degree_gr(8) == 60032
    with pytest.raises(DomainError):
        binary_hyperdet_degree_gr(1)


@pytest.mark.parametrize("d", range(2, 11))
def test_agrees_with_generating_function(d):
    assert binary_hyperdet_degree_gr(d) == mu_discriminant_degree(Partition((1,) * d), 2)
