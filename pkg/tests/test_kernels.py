"""Kernel backends must agree with each other and with the slow reference."""

import itertools

import pytest

from godellab import kernels
from godellab.kernels import (
    cantor_pair,
    cantor_unpair,
    mu_search,
    mu_search_numpy,
    mu_search_python,
)


@pytest.fixture(autouse=True)
def restore_backend():
    before = kernels.active_backend()
    yield
    kernels.set_backend(before)


def test_cantor_round_trip_exhaustive():
    for x in range(3000):
        u, v = cantor_unpair(x)
        assert cantor_pair(u, v) == x


def test_cantor_pair_bijective_on_grid():
    seen = set()
    for u in range(60):
        for v in range(60):
            seen.add(cantor_pair(u, v))
    assert len(seen) == 3600


def test_cantor_unpair_handles_big_values():
    x = 10**40 + 12345
    u, v = cantor_unpair(x)
    assert cantor_pair(u, v) == x


CASES = [
    [0],
    [1, 1],
    [1, 3],
    [2, 3, 1],
    [2, 1, 4],
    [3, 2, 0, 2],
    [3, 4, 4, 4],
    [2, 0, 0],
]


@pytest.mark.parametrize("targets", CASES, ids=repr)
def test_backends_agree(targets):
    cutoff = 3_000_000
    expected = mu_search_python(targets, cutoff)
    assert mu_search_numpy(targets, cutoff) == expected
    kernels.set_backend("numba")
    assert mu_search(targets, cutoff) == expected
    kernels.set_backend("numpy")
    assert mu_search(targets, cutoff) == expected
    kernels.set_backend("python")
    assert mu_search(targets, cutoff) == expected


def test_not_found_returns_minus_one():
    # beta(x, i) <= x - 1, so a target of 60 cannot appear below 60
    assert mu_search_python([60], 50) == -1
    assert mu_search_numpy([60], 50) == -1
    kernels.set_backend("numba")
    assert mu_search([60], 50) == -1


def test_start_offset_skips_earlier_witnesses():
    first = mu_search_python([1, 1], 1000)
    second = mu_search_python([1, 1], 100000, start=first + 1)
    assert second > first
    assert mu_search_numpy([1, 1], 100000, start=first + 1) == second
    kernels.set_backend("numba")
    assert mu_search([1, 1], 100000, start=first + 1) == second


def test_huge_cutoff_falls_back_to_python_path():
    kernels.set_backend("numba")
    # cutoff beyond the int64 guard; the answer sits at 4 so the python
    # fallback returns quickly
    assert mu_search([1, 1], 1 << 60) == 4


def test_set_backend_validates():
    with pytest.raises(ValueError):
        kernels.set_backend("fortran")


def test_env_flag_selects_backend(monkeypatch):
    monkeypatch.setenv("GODELLAB_KERNEL", "numpy")
    monkeypatch.setattr(kernels, "_backend", None)
    assert kernels.active_backend() == "numpy"
    monkeypatch.setenv("GODELLAB_KERNEL", "cobol")
    monkeypatch.setattr(kernels, "_backend", None)
    with pytest.raises(ValueError):
        kernels.active_backend()


def test_numpy_chunk_boundaries():
    # witnesses straddling chunk growth boundaries must still be least
    for targets in ([1, 2], [2, 2, 2]):
        expected = mu_search_python(targets, 400_000)
        assert mu_search_numpy(targets, 400_000, max_chunk=1 << 13) == expected


def test_exhaustive_agreement_small_space():
    # every length-1 and length-2 target vector over 0..3
    for n, entries in [(1, range(4)), (2, itertools.product(range(4), range(4)))]:
        for entry in entries:
            targets = [n] + (list(entry) if isinstance(entry, tuple) else [entry])
            expected = mu_search_python(targets, 500_000)
            got = mu_search_numpy(targets, 500_000)
            assert got == expected, targets
