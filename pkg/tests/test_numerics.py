"""Primes and certified magnitude comparisons."""

import random

import pytest

from godellab.numerics import (
    Magnitude,
    Ordering,
    compare_certified,
    compare_floor_requirements,
    is_prime,
    nth_prime,
    pow2_exceeds,
    prime_index,
    saturating_pow2,
)


def oracle_is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def oracle_nth_prime(n: int) -> int:
    count, candidate = 0, 1
    while count < n:
        candidate += 1
        if oracle_is_prime(candidate):
            count += 1
    return candidate


@pytest.mark.parametrize("n, expected", [(1, 2), (4, 7), (8, 19)])
def test_nth_prime_anchors(n, expected):
    assert nth_prime(n) == expected


def test_nth_prime_matches_oracle():
    for n in range(1, 120):
        assert nth_prime(n) == oracle_nth_prime(n)


def test_nth_prime_strictly_increasing_to_100():
    values = [nth_prime(n) for n in range(1, 101)]
    assert all(a < b for a, b in zip(values, values[1:]))


def test_nth_prime_rejects_zero():
    with pytest.raises(ValueError):
        nth_prime(0)


def test_is_prime_matches_oracle():
    for n in range(0, 500):
        assert is_prime(n) == oracle_is_prime(n)


def test_prime_index_inverts_nth_prime():
    for n in (1, 2, 7, 25, 60):
        assert prime_index(nth_prime(n)) == n
    with pytest.raises(ValueError):
        prime_index(15)


def test_magnitude_validation():
    with pytest.raises(ValueError):
        Magnitude()
    with pytest.raises(ValueError):
        Magnitude(exact_value=1, low2=1)
    with pytest.raises(ValueError):
        Magnitude(exact_value=-1)


def test_magnitude_json_forms():
    assert Magnitude.exact(8).to_json_dict() == {"exact": "8"}
    assert Magnitude.lower_bound(10).to_json_dict() == {"lowerBoundLog2": "10"}


@pytest.mark.parametrize("a, b, expected", [
    (Magnitude.exact(8), Magnitude.exact(8), Ordering.EQUAL),
    (Magnitude.lower_bound(10), Magnitude.exact(100), Ordering.GREATER),
    (Magnitude.lower_bound(3), Magnitude.exact(100), Ordering.UNKNOWN),
    (Magnitude.exact(3), Magnitude.exact(9), Ordering.LESS),
    (Magnitude.exact(100), Magnitude.lower_bound(10), Ordering.LESS),
    (Magnitude.exact(100), Magnitude.lower_bound(3), Ordering.UNKNOWN),
    (Magnitude.lower_bound(5), Magnitude.lower_bound(90), Ordering.UNKNOWN),
    (Magnitude.lower_bound(90), Magnitude.lower_bound(5), Ordering.UNKNOWN),
])
def test_compare_certified_table(a, b, expected):
    assert compare_certified(a, b) is expected


def test_compare_certified_never_contradicts_exact_recomputation():
    rng = random.Random(20240811)
    for _ in range(500):
        va = rng.randrange(0, 1 << 40)
        vb = rng.randrange(0, 1 << 40)
        verdict = compare_certified(Magnitude.exact(va), Magnitude.exact(vb))
        truth = (Ordering.LESS if va < vb
                 else Ordering.GREATER if va > vb else Ordering.EQUAL)
        assert verdict is truth
    for _ in range(500):
        e = rng.randrange(0, 50)
        # any true value consistent with the bound
        true_value = (1 << e) + rng.randrange(0, 1 << e)
        vb = rng.randrange(0, 1 << 52)
        verdict = compare_certified(Magnitude.lower_bound(e), Magnitude.exact(vb))
        if verdict is Ordering.GREATER:
            assert true_value > vb


def test_pow2_exceeds_matches_direct_comparison():
    for e in range(0, 70):
        for n in range(0, 130):
            assert pow2_exceeds(e, n) == ((1 << e) > n)


def test_saturating_pow2_small_exact_and_large_sound():
    for e in range(0, 20):
        assert saturating_pow2(e) == 1 << e
    big = (1 << 22) + 123
    assert saturating_pow2(big) == 2 * big
    # soundness shape: 2**e >= 2e wherever both are materializable
    for e in range(0, 1000):
        assert (1 << e) >= 2 * e


def test_compare_floor_requirements_total():
    assert compare_floor_requirements(
        Magnitude.exact(5), Magnitude.exact(9)) is Ordering.LESS
    assert compare_floor_requirements(
        Magnitude.lower_bound(4), Magnitude.lower_bound(3)) is Ordering.GREATER
    assert compare_floor_requirements(
        Magnitude.lower_bound(3), Magnitude.exact(8)) is Ordering.EQUAL
    assert compare_floor_requirements(
        Magnitude.lower_bound(3), Magnitude.exact(9)) is Ordering.LESS
    assert compare_floor_requirements(
        Magnitude.exact(9), Magnitude.lower_bound(3)) is Ordering.GREATER
    assert compare_floor_requirements(
        Magnitude.lower_bound(100000), Magnitude.exact(10**30)) is Ordering.GREATER


def test_magnitude_exceeds():
    assert Magnitude.exact(10).exceeds(9)
    assert not Magnitude.exact(10).exceeds(10)
    assert Magnitude.lower_bound(10).exceeds(1023)
    assert not Magnitude.lower_bound(10).exceeds(1024)
