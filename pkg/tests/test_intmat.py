import sympy
from hypothesis import given
from hypothesis import strategies as st

from qnilpotent.intmat import (
    det,
    hnf,
    in_lattice,
    integer_kernel,
    matvec,
    rank,
    smith_invariants,
    solve_integer,
    solve_rational,
)

small = st.integers(-6, 6)


def matrices(max_rows=5, max_cols=5):
    return st.integers(1, max_rows).flatmap(
        lambda m: st.integers(1, max_cols).flatmap(
            lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=m, max_size=m)
        )
    )


square = st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)
)


@given(square)
def test_det_matches_sympy(m):
    assert det(m) == sympy.Matrix(m).det()


@given(matrices())
def test_rank_matches_sympy(m):
    assert rank(m) == sympy.Matrix(m).rank()


@given(matrices())
def test_kernel_is_saturated_basis(m):
    n = len(m[0])
    ker = integer_kernel(m, n)
    assert len(ker) == n - sympy.Matrix(m).rank()
    for v in ker:
        assert not any(matvec(m, v))
    if ker:
        # saturated: every invariant factor of the basis is 1
        assert all(x == 1 for x in smith_invariants(ker) if x)


@given(matrices())
def test_smith_matches_sympy(m):
    from sympy.matrices.normalforms import invariant_factors

    ours = [x for x in smith_invariants(m) if x]
    theirs = [abs(int(x)) for x in invariant_factors(sympy.Matrix(m), domain=sympy.ZZ) if x]
    assert sorted(ours) == sorted(theirs)


def test_kernel_examples():
    assert integer_kernel([[0, 1, -1], [-1, 0, 1], [1, -1, 0]], 3) == [[1, 1, 1]]
    assert sorted(integer_kernel([[0, 0], [0, 0]], 2)) == [[0, 1], [1, 0]]


@given(matrices(4, 4), st.lists(small, min_size=4, max_size=4))
def test_solvers_agree_with_image(m, x):
    n = len(m[0])
    x = x[:n]
    b = matvec(m, x)
    xi = solve_integer(m, b)
    assert xi is not None and matvec(m, xi) == b
    xq = solve_rational(m, b)
    assert xq is not None and [sum(a * c for a, c in zip(row, xq)) for row in m] == b


def test_lattice_membership():
    basis = hnf([[2, 0], [1, 1]])
    assert in_lattice(basis, [3, 1])
    assert not in_lattice(basis, [1, 0])
