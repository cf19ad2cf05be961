from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qnilpotent.cartan import (
    EXPECTED_POSITIVE_ROOTS,
    all_types,
    build_root_system,
    fz_identity_check,
    parse_type,
    root_system,
)
from qnilpotent.errors import InputError

TYPES = all_types(8)


@pytest.mark.parametrize("fam,n", TYPES)
def test_positive_root_counts(fam, n):
    system = build_root_system(fam, n)
    assert len(system.positive_roots) == EXPECTED_POSITIVE_ROOTS[fam](n)


def test_small_examples(A2, B2):
    assert len(A2.positive_roots) == 3
    assert len(B2.positive_roots) == 4
    assert B2.symmetrizers == (2, 1)  # alpha_1 long, alpha_2 short
    assert len(root_system("G2").positive_roots) == 6


def test_inner_products(A2, B2):
    assert A2.inner_product(A2.simple_root(1), A2.simple_root(2)) == -1
    assert B2.inner_product(B2.simple_root(2), B2.simple_root(2)) == 2
    for system in (A2, B2, root_system("G2")):
        for i in range(1, system.rank + 1):
            for j in range(1, system.rank + 1):
                expected = system.symmetrizers[j - 1] if i == j else 0
                assert system.inner_product(system.fundamental_weight(i), system.simple_root(j)) == expected


@pytest.mark.parametrize("bad", ["A0", "B1", "D3", "E5", "E9", "F3", "G3", "X2", "A", ""])
def test_invalid_types(bad):
    with pytest.raises(InputError):
        parse_type(bad)


@pytest.mark.parametrize("fam,n", TYPES)
def test_fz_identity(fam, n):
    system = build_root_system(fam, n)
    for i in range(1, n + 1):
        assert fz_identity_check(system, i).is_zero


_systems = [build_root_system(f, n) for f, n in all_types(4)]


@given(st.sampled_from(_systems), st.data())
def test_form_is_symmetric_and_weyl_invariant(system, data):
    n = system.rank
    x = data.draw(st.lists(st.integers(-4, 4), min_size=n, max_size=n))
    y = data.draw(st.lists(st.integers(-4, 4), min_size=n, max_size=n))
    i = data.draw(st.integers(1, n))
    fx = system.form_weights(x, y)
    assert fx == system.form_weights(y, x)
    assert system.form_weights(system.reflect_weight(i, x), system.reflect_weight(i, y)) == fx
    assert isinstance(fx, Fraction)


def test_mismatched_systems(A2, B2):
    with pytest.raises(InputError):
        A2.inner_product(A2.simple_root(1), B2.simple_root(1))
