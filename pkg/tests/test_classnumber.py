"""Class number of discriminant -4p by reduced-form counting."""

import pytest

from cm_octic.classnumber import DEFAULT_CAP, class_number
from cm_octic.harness import primes_1_mod_8
from cm_octic.modular import Prime

from conftest import box_class_number


class TestClassNumber:
    @pytest.mark.parametrize("v,h", [(17, 4), (41, 8), (73, 4), (89, 12), (97, 4), (113, 8)])
    def test_examples(self, v, h):
        assert class_number(Prime(v)) == h

    def test_matches_box_enumeration_oracle(self):
        for p in primes_1_mod_8(0, 5000):
            assert class_number(p) == box_class_number(p.value), p.value

    def test_always_even(self):
        # genus theory: -4p has two prime discriminant divisors
        for p in primes_1_mod_8(0, 20000):
            assert class_number(p) % 2 == 0

    def test_cap_enforced(self):
        with pytest.raises(ValueError):
            class_number(Prime(1000033), cap=10**6)

    def test_default_cap_value(self):
        assert DEFAULT_CAP == 10_000_000

    def test_rejects_wrong_residue_class(self):
        with pytest.raises(ValueError):
            class_number(Prime(13))

    def test_moderate_size(self):
        # h(-4 * 100057); cross-checked against the box oracle once, then frozen
        assert class_number(Prime(100057)) == 168
