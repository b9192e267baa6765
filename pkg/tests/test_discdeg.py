from itertools import permutations

import pytest

from chowfactor.discdeg import boole_degree, denominator_series, mu_discriminant_degree
from chowfactor.errors import DomainError, ResourceError
from chowfactor.partitions import Partition, enumerate_partitions
from chowfactor.polyalg import inverse_square


@pytest.mark.parametrize("method", ["closed", "series"])
@pytest.mark.parametrize(
    "mu, n, expected",
    [((8,), 2, 14), ((2, 2), 3, 129), ((1, 1, 1), 3, 36), ((4, 1), 3, 48), ((6, 2), 2, 44)],
)
def test_examples(mu, n, expected, method):
    assert mu_discriminant_degree(mu, n, method=method) == expected


def test_boole_examples():
    assert boole_degree(8, 2) == 14
    assert boole_degree(4, 3) == 27
    for n in range(2, 7):
        assert boole_degree(2, n) == n


@pytest.mark.parametrize("d", range(2, 11))
@pytest.mark.parametrize("n", range(2, 6))
def test_boole_calibration(d, n):
    assert mu_discriminant_degree((d,), n) == boole_degree(d, n)
    assert mu_discriminant_degree((d,), n, method="series") == boole_degree(d, n)


def test_printed_exponent_would_be_wrong():
    # extracting z^n instead of z^(n-1) gives (n+1)(d-1)^n, not Boole's value
    d, n = 8, 2
    inv = inverse_square(denominator_series((d,), n + 1))
    assert inv.coefficient((n,)) == (n + 1) * (d - 1) ** n != boole_degree(d, n)


@pytest.mark.parametrize("d", range(2, 8))
@pytest.mark.parametrize("n", [2, 3])
def test_closed_and_series_agree(d, n):
    for mu in enumerate_partitions(d):
        if n ** mu.parts_count <= 800:
            closed = mu_discriminant_degree(mu, n)
            assert closed == mu_discriminant_degree(mu, n, method="series")
            assert closed > 0


@pytest.mark.parametrize("mu", [(3, 2, 1), (4, 1, 1), (2, 2, 1)])
def test_permutation_invariance(mu):
    n = 3
    target = (n - 1,) * len(mu)
    values = {inverse_square(denominator_series(p, n)).coefficient(target) for p in permutations(mu)}
    assert values == {mu_discriminant_degree(mu, n)}


def test_positive_for_all_inputs():
    for n in (2, 3, 4):
        for d in range(2, 10):
            assert all(mu_discriminant_degree(mu, n) > 0 for mu in enumerate_partitions(d))


def test_domain_errors():
    with pytest.raises(DomainError):
        mu_discriminant_degree((3,), 1)
    with pytest.raises(DomainError):
        mu_discriminant_degree((1,), 3)
    with pytest.raises(DomainError):
        mu_discriminant_degree((3,), 3, method="newton")
    with pytest.raises(DomainError):
        boole_degree(1, 3)


def test_resource_guard():
    with pytest.raises(ResourceError):
        mu_discriminant_degree(Partition((1,) * 10), 5, max_terms=10**6)
    assert mu_discriminant_degree(Partition((1,) * 3), 5, max_terms=125) > 0
    with pytest.raises(ResourceError):
        mu_discriminant_degree(Partition((1,) * 3), 5, max_terms=124)
