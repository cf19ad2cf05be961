import pytest
from hypothesis import given
from hypothesis import strategies as st

from qnilpotent.cartan import all_types, build_root_system, root_system
from qnilpotent.errors import GuardExceeded, InputError
from qnilpotent.weyl import (
    WeylElement,
    beta_grid,
    coset_decompose,
    dual_levi,
    enumerate_group,
    in_parabolic_quotient,
    is_saturated,
    kostant_scan,
    length_and_reduced,
    longest_and_parabolic,
    longest_element,
    matrix_algebra_word,
    nilradical_roots,
    parse_word,
    phi_set,
    reflection_factorization_holds,
)


def test_action_examples(A2):
    s1 = WeylElement.simple(A2, 1)
    assert s1.act_root((1, 0)) == (-1, 0)
    assert s1.act_root((0, 1)) == (1, 1)
    assert longest_element(A2).act_weight((1, 0)) == (0, -1)


def test_length_examples(A2):
    assert length_and_reduced(A2, (1, 2, 1)) == (3, True)
    assert length_and_reduced(A2, (1, 1)) == (0, False)
    assert length_and_reduced(root_system("A3"), (1, 2, 3, 1, 2, 1)) == (6, True)


def test_phi_examples(A2):
    assert phi_set(WeylElement.identity(A2)) == frozenset()
    assert phi_set(WeylElement.simple(A2, 1)) == {(1, 0)}
    assert phi_set(longest_element(A2)) == {(1, 0), (1, 1), (0, 1)}


def test_beta_grid_examples(A2, B2):
    g = beta_grid(A2, (1, 2, 1))
    assert g.betas == ((1, 0), (1, 1), (0, 1))
    assert g.labels == ((1, 1), (2, 1), (1, 2))
    assert beta_grid(A2, (2,)).betas == ((0, 1),)
    gb = beta_grid(B2, (1, 2, 1, 2))
    assert set(gb.betas) == set(B2.positive_roots)


def test_beta_grid_rejects_nonreduced(A2):
    with pytest.raises(InputError):
        beta_grid(A2, (1, 1))
    with pytest.raises(InputError):
        beta_grid(A2, (3,))


def test_parse_word():
    assert parse_word("1,2,1") == (1, 2, 1)
    assert parse_word("") == ()
    with pytest.raises(InputError):
        parse_word("1;2")


_small = [build_root_system(f, n) for f, n in all_types(3)] + [root_system("F4"), root_system("D4")]


@given(st.sampled_from(_small), st.lists(st.integers(1, 4), max_size=14))
def test_grid_invariants(system, letters):
    word = [i for i in letters if i <= system.rank]
    w = WeylElement.from_word(system, word)
    g = beta_grid(system, w.reduced_word)
    assert len(set(g.betas)) == g.r
    assert set(g.betas) == w.phi()
    assert all(system.is_positive_root(b) for b in g.betas)
    assert reflection_factorization_holds(g)
    for s, cnt in g.counts.items():
        lam = system.fundamental_weight(s).coords
        diff = tuple(a - b for a, b in zip(lam, w.act_weight(lam)))
        assert system.root_to_weight(g.partial_sum(s, cnt)) == diff


def test_longest_and_parabolic_examples(A2):
    _, _, wp = longest_and_parabolic(A2, [])
    assert wp == longest_element(A2) and wp.length == 3
    assert longest_and_parabolic(A2, [1, 2])[2].is_identity()
    assert longest_and_parabolic(root_system("A3"), [1, 3])[2].length == 4


def test_parabolic_inversion_set_uses_dual_levi(A2):
    # w^p = w0 w_L sends Delta^+(u) negative; its own inversion set lives over -w0(L)
    _, _, wp = longest_and_parabolic(A2, [1])
    assert dual_levi(A2, [1]) == [2]
    assert wp.phi() == nilradical_roots(A2, [2])
    assert wp.inverse().phi() == nilradical_roots(A2, [1])


def test_coset_decompose(A2):
    s1 = WeylElement.simple(A2, 1)
    assert coset_decompose(s1, [1]) == (s1, WeylElement.identity(A2))
    w = WeylElement.from_word(A2, (2, 1))
    wl, rest = coset_decompose(w, [1])
    assert wl.is_identity() and rest == w
    w0 = longest_element(A2)
    left, right = coset_decompose(w0, [1])
    assert left == longest_element(A2, [1])
    assert left.length + right.length == 3 and in_parabolic_quotient(right, [1])


@pytest.mark.parametrize("name,order", [("A1", 2), ("A2", 6), ("B2", 8), ("G2", 12)])
def test_kostant_small(name, order):
    rep = kostant_scan(name[0], int(name[1:]))
    assert rep.group_order == order == rep.doubly_saturated
    assert rep.bijection


def test_kostant_guard():
    with pytest.raises(GuardExceeded):
        kostant_scan("A", 5)


@pytest.mark.parametrize("a,b,rank", [(1, 1, 1), (2, 2, 3), (2, 1, 2), (3, 4, 6)])
def test_matrix_algebra_word(a, b, rank):
    system, word = matrix_algebra_word(a, b)
    assert system.rank == rank and len(word) == a * b
    w = WeylElement.from_word(system, word)
    assert w.length == a * b
    levi = [i for i in range(1, rank + 1) if i != a]
    assert w.phi() == nilradical_roots(system, levi)


def test_prefix_property():
    system, word = matrix_algebra_word(3, 3)
    levi = [1, 2, 4, 5]
    for k in range(len(word) + 1):
        assert in_parabolic_quotient(WeylElement.from_word(system, word[:k]), levi)


def test_phi_sets_are_doubly_saturated():
    system = root_system("B3")
    pos = set(system.positive_roots)
    for w in enumerate_group(system):
        p = w.phi()
        assert is_saturated(system, p) and is_saturated(system, pos - p)


@pytest.mark.parametrize("fam,n", all_types(8))
def test_longest_is_minus_one_outside_exceptions(fam, n):
    system = build_root_system(fam, n)
    w0 = longest_element(system)
    minus = all(
        w0.act_weight(system.fundamental_weight(s).coords) == tuple(-int(k == s - 1) for k in range(n))
        for s in range(1, n + 1)
    )
    exceptional = (fam == "A" and n > 1) or (fam == "D" and n % 2) or (fam, n) == ("E", 6)
    assert minus == (not exceptional)
