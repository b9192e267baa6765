from fractions import Fraction

import pytest

from chowfactor.chowdeg import (
    DegreeRow,
    DegreeTable,
    binary_chow_degree,
    forward_substitute,
    is_hypersurface,
    solve_chow_degrees,
    validate_table,
)
from chowfactor.errors import ConsistencyError, DomainError
from chowfactor.partitions import Partition, enumerate_partitions, refinement_matrix_bruteforce
from chowfactor.symfunc import degree_identity_check


@pytest.mark.parametrize(
    "lam, n, expected",
    [((2, 1), 3, False), ((1, 1, 1), 3, True), ((2, 1), 2, False), ((1, 1), 3, False), ((2,), 5, True)],
)
def test_classifier_examples(lam, n, expected):
    assert is_hypersurface(lam, n) is expected


def test_octic_binary_table():
    table = solve_chow_degrees(8, 2)
    named = [(8,), (6, 2), (5, 3), (4, 4), (4, 2, 2), (3, 3, 2), (2, 2, 2, 2)]
    assert [table.row(p).chow_degree for p in named] == [14, 30, 48, 27, 36, 48, 5]
    others = [r.chow_degree for r in table.rows if r.lam.parts not in named]
    assert others == [0] * (22 - 7)


def test_quartic_ternary_table():
    table = solve_chow_degrees(4, 3)
    assert table.chow_degrees() == {
        Partition((4,)): 27, Partition((3, 1)): 0, Partition((2, 2)): 51,
        Partition((2, 1, 1)): 48, Partition((1, 1, 1, 1)): 15,
    }


def test_plane_cubic_table():
    table = solve_chow_degrees(3, 3)
    assert [r.chow_degree for r in table.rows] == [12, 0, 4]
    assert [r.disc_degree for r in table.rows] == [12, 12, 36]


def test_binary_closed_form_examples():
    assert binary_chow_degree((2, 2, 2, 2)) == 5
    assert binary_chow_degree((6, 2)) == 30
    assert binary_chow_degree((3, 3, 2)) == 48
    with pytest.raises(DomainError):
        binary_chow_degree((3, 1))


@pytest.mark.parametrize("d", range(2, 13))
def test_binary_closed_form_matches_solver(d):
    table = solve_chow_degrees(d, 2)
    for row in table.rows:
        if row.lam.multiplicity(1) == 0:
            assert binary_chow_degree(row.lam) == row.chow_degree
        else:
            assert row.chow_degree == 0


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("d", range(2, 11))
def test_solver_zero_set_matches_classifier(d, n):
    table = solve_chow_degrees(d, n)
    for row in table.rows:
        assert isinstance(row.chow_degree, int) and row.chow_degree >= 0
        assert (row.chow_degree == 0) == (not is_hypersurface(row.lam, n))


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("d", range(2, 8))
def test_tables_satisfy_generating_identity(d, n):
    table = solve_chow_degrees(d, n)
    assert degree_identity_check(d, table.disc_degrees(), table.chow_degrees())
    assert degree_identity_check(d, table.disc_degrees(), table.chow_degrees(), form="hall")


def test_forward_substitution_exact():
    M = refinement_matrix_bruteforce(3)
    assert forward_substitute(M, [12, 12, 36]) == [Fraction(12), Fraction(0), Fraction(4)]
    # non-integral solution stays exact
    assert forward_substitute(M, [1, 1, 2])[-1] == Fraction(1, 6)


def test_validate_table_rejects_tampering():
    table = solve_chow_degrees(3, 3)
    validate_table(table)
    rows = list(table.rows)
    rows[2] = DegreeRow(rows[2].lam, rows[2].disc_degree, 5, True)
    with pytest.raises(ConsistencyError):
        validate_table(DegreeTable(3, 3, tuple(rows)))
    rows = list(table.rows)
    rows[1] = DegreeRow(rows[1].lam, rows[1].disc_degree, 0, True)
    with pytest.raises(ConsistencyError):
        validate_table(DegreeTable(3, 3, tuple(rows)))


def test_solver_domain():
    with pytest.raises(DomainError):
        solve_chow_degrees(1, 3)
    with pytest.raises(DomainError):
        solve_chow_degrees(3, 1)
    with pytest.raises(DomainError):
        is_hypersurface((1,), 3)
