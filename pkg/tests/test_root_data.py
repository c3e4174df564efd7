import random

import pytest

from siegel_weights import (
    InputBoundExceeded,
    NotDominant,
    ParityViolation,
    POSITIVE_ROOTS,
    RHO,
    ROOT_DATUM,
    WeightTriple,
    is_dominant,
    is_regular,
    k_invariant,
    levi_restriction_weight,
    levi_root,
    make_weight,
    motivic_weight,
    nilradical_roots,
)
from siegel_weights.errors import BadParabolicIndex
from siegel_weights.root_data import COORDINATE_BOUND, pairing


def test_make_weight_accepts_even_parity():
    lam = make_weight(3, 1, 4)
    assert (lam.k1, lam.k2, lam.r) == (3, 1, 4)
    assert make_weight(0, 0, 0) == WeightTriple(0, 0, 0)
    assert make_weight(2, 1, -3).is_character()


def test_make_weight_rejects_odd_parity():
    with pytest.raises(ParityViolation):
        make_weight(1, 0, 0)
    with pytest.raises(ParityViolation):
        make_weight(2, 1, 4)
    with pytest.raises(ParityViolation):
        make_weight(0, 0, 1)


def test_make_weight_rejects_non_integers():
    with pytest.raises(ParityViolation):
        make_weight(1.0, 0, 1)
    with pytest.raises(ParityViolation):
        make_weight(True, 0, 1)


def test_make_weight_enforces_coordinate_bound():
    make_weight(COORDINATE_BOUND, 0, COORDINATE_BOUND)
    with pytest.raises(InputBoundExceeded):
        make_weight(COORDINATE_BOUND + 1, 0, 1)
    with pytest.raises(InputBoundExceeded):
        make_weight(0, 0, -COORDINATE_BOUND - 2)


def test_lattice_arithmetic_is_componentwise():
    a = WeightTriple(3, 1, 4)
    b = WeightTriple(1, -1, 0)
    assert a + b == WeightTriple(4, 0, 4)
    assert a - b == WeightTriple(2, 2, 4)
    assert -b == WeightTriple(-1, 1, 0)


def test_positive_roots_are_the_expected_four():
    assert POSITIVE_ROOTS == (
        WeightTriple(1, -1, 0),
        WeightTriple(0, 2, 0),
        WeightTriple(1, 1, 0),
        WeightTriple(2, 0, 0),
    )


def test_roots_kill_the_center_and_lie_in_the_character_lattice():
    for beta in POSITIVE_ROOTS:
        assert beta.r == 0
        assert beta.is_character()


def test_rho_is_the_half_sum_and_is_not_a_character():
    total = WeightTriple(0, 0, 0)
    for beta in POSITIVE_ROOTS:
        total = total + beta
    assert total == WeightTriple(4, 2, 0)
    assert RHO + RHO == total
    assert not RHO.is_character()


def test_parabolic_root_partition():
    for m in (0, 1):
        gamma = levi_root(m)
        nil = nilradical_roots(m)
        assert len(nil) == 3
        assert gamma not in nil
        assert set(nil) | {gamma} == set(POSITIVE_ROOTS)
    assert levi_root(0) == WeightTriple(1, -1, 0)
    assert levi_root(1) == WeightTriple(0, 2, 0)
    with pytest.raises(BadParabolicIndex):
        levi_root(2)
    with pytest.raises(BadParabolicIndex):
        nilradical_roots(-1)


def test_root_datum_record_matches_module_constants():
    assert ROOT_DATUM.positive_roots == POSITIVE_ROOTS
    assert ROOT_DATUM.rho == RHO
    assert ROOT_DATUM.levi_root(1) == levi_root(1)
    assert ROOT_DATUM.nilradical_roots(0) == nilradical_roots(0)
    assert ROOT_DATUM.similitude_weight == WeightTriple(0, 0, -2)


def test_dominance_and_regularity():
    assert is_dominant(make_weight(3, 1, 4))
    assert is_dominant(make_weight(0, 0, 0))
    assert is_dominant(make_weight(2, 2, 4))
    assert not is_dominant(make_weight(1, 2, 3))
    assert not is_dominant(make_weight(1, -1, 0))
    assert is_regular(make_weight(3, 1, 4))
    assert not is_regular(make_weight(2, 2, 4))
    assert not is_regular(make_weight(3, 0, 3))
    assert not is_regular(make_weight(0, 0, 0))


def test_k_invariant_examples():
    assert k_invariant(make_weight(3, 1, 4)) == 1
    assert k_invariant(make_weight(5, 2, 7)) == 2
    assert k_invariant(make_weight(2, 2, 4)) == 0
    assert k_invariant(make_weight(4, 0, 4)) == 0
    with pytest.raises(NotDominant):
        k_invariant(make_weight(1, 2, 3))


def test_k_invariant_positive_iff_regular():
    for k1 in range(0, 9):
        for k2 in range(0, k1 + 1):
            lam = make_weight(k1, k2, k1 + k2)
            assert (k_invariant(lam) >= 1) == is_regular(lam)


def test_motivic_weight_examples():
    assert motivic_weight(WeightTriple(3, -3, 4), 0) == 4
    assert motivic_weight(WeightTriple(0, 4, 4), 1) == 4
    assert motivic_weight(WeightTriple(3, 1, 4), 0) == 0
    assert motivic_weight(WeightTriple(3, 1, 4), 1) == 1
    with pytest.raises(BadParabolicIndex):
        motivic_weight(WeightTriple(3, 1, 4), 2)


def test_levi_restriction_weight_examples():
    assert levi_restriction_weight(WeightTriple(3, -3, 4), 0) == 6
    assert levi_restriction_weight(WeightTriple(3, 1, 4), 0) == 2
    assert levi_restriction_weight(WeightTriple(0, 4, 4), 1) == 4
    assert levi_restriction_weight(WeightTriple(3, 1, 4), 1) == 1
    with pytest.raises(BadParabolicIndex):
        levi_restriction_weight(WeightTriple(3, 1, 4), 5)


def test_pairing_norms():
    # type C2: short roots have squared length 2, long roots 4
    short = {WeightTriple(1, -1, 0), WeightTriple(1, 1, 0)}
    for beta in POSITIVE_ROOTS:
        assert pairing(beta, beta) == (2 if beta in short else 4)


def test_similitude_weight_parity_and_randomized_lattice_closure():
    rng = random.Random(11)
    for _ in range(100):
        k1 = rng.randint(0, 40)
        k2 = rng.randint(0, k1)
        r = k1 + k2 + 2 * rng.randint(-10, 10)
        lam = make_weight(k1, k2, r)
        for beta in POSITIVE_ROOTS:
            assert (lam + beta).is_character()
            assert (lam - beta).is_character()
