import pytest

from qrsort.selftest import quotient_order_violations, variant_equivalence_mismatches


def test_quotient_order_property_holds():
    assert quotient_order_violations(5_000, seed=3) == 0


def test_quotient_order_different_seeds():
    for seed in (0, 1, 99):
        assert quotient_order_violations(500, seed=seed) == 0


def test_variant_equivalence_holds():
    assert variant_equivalence_mismatches(800, seed=3) == 0


def test_case_counts_validated():
    with pytest.raises(ValueError):
        quotient_order_violations(-1, seed=0)
    with pytest.raises(ValueError):
        variant_equivalence_mismatches(-5, seed=0)
    assert quotient_order_violations(0, seed=0) == 0