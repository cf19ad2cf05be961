import pytest
from hypothesis import given
from hypothesis import strategies as st

from qnilpotent.cartan import root_system
from qnilpotent.errors import InputError
from qnilpotent.lattice_forms import build_L0
from qnilpotent.twisted_laurent import FAMILIES, TwistedAlgebra, formula_audit, monomial_commutation
from qnilpotent.weyl import beta_grid, longest_element


@pytest.fixture
def alg_a2(A2):
    return TwistedAlgebra(build_L0(beta_grid(A2, (1, 2, 1))))


def test_multiply_examples(alg_a2):
    z1, z2, z3 = (alg_a2.generator(i) for i in range(3))
    assert z2 * z1 == alg_a2.monomial((1, 1, 0), qpow=-1)
    assert z1 * z1 == alg_a2.monomial((2, 0, 0))
    lhs = z2 * (z1 * z3)
    rhs = (z1 * z3) * z2
    assert lhs == rhs


def test_commutation_examples(alg_a2):
    assert alg_a2.commutation_exponent((1, 2, 0), (1, 2, 0)) == 0
    assert alg_a2.commutation_exponent((0, 1, 0), (1, 0, 1)) == 0
    assert alg_a2.commutation_exponent((1, 0, 0), (0, 1, 0)) == 1


def test_centrality_examples(alg_a2):
    assert alg_a2.centrality_test((1, 1, 1))
    assert not alg_a2.centrality_test((1, 0, 0))
    assert alg_a2.centrality_test((3, 0, 0), 3)
    assert not alg_a2.centrality_test((2, 0, 0), 3)


def test_dimension_mismatch(alg_a2):
    with pytest.raises(InputError):
        alg_a2.commutation_exponent((1, 0), (0, 1))
    other = TwistedAlgebra([[0]])
    with pytest.raises(InputError):
        alg_a2.multiply(alg_a2.one(), other.one())


def skew_matrices(n):
    return st.lists(st.integers(-3, 3), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2).map(
        lambda xs: _fill(n, xs)
    )


def _fill(n, xs):
    m = [[0] * n for _ in range(n)]
    it = iter(xs)
    for i in range(n):
        for j in range(i + 1, n):
            v = next(it)
            m[i][j], m[j][i] = v, -v
    return m


def elements(alg, n):
    term = st.tuples(
        st.lists(st.integers(-2, 2), min_size=n, max_size=n).map(tuple),
        st.integers(-2, 2),
        st.integers(-3, 3),
    )
    return st.lists(term, min_size=1, max_size=3).map(
        lambda ts: sum((alg.monomial(e, q, c) for e, q, c in ts), alg.monomial((0,) * n, 0, 0))
    )


@given(st.data())
def test_associativity(data):
    n = data.draw(st.integers(1, 4))
    alg = TwistedAlgebra(data.draw(skew_matrices(n)))
    x, y, z = (data.draw(elements(alg, n)) for _ in range(3))
    assert (x * y) * z == x * (y * z)


@given(st.data())
def test_group_commutator(data):
    n = data.draw(st.integers(1, 4))
    mat = data.draw(skew_matrices(n))
    alg = TwistedAlgebra(mat)
    a = data.draw(st.lists(st.integers(-3, 3), min_size=n, max_size=n))
    b = data.draw(st.lists(st.integers(-3, 3), min_size=n, max_size=n))

    def inverse(v):
        # z^v z^-v = q^(-kappa(v, v)), so the inverse carries q^kappa(v, v)
        return alg.monomial([-x for x in v], qpow=alg.kappa(v, v))

    assert (alg.monomial(a) * inverse(a)) == alg.one()
    prod = alg.monomial(a) * alg.monomial(b) * inverse(a) * inverse(b)
    (exps, poly), = prod.terms.items()
    assert exps == (0,) * n
    (qpow, coeff), = poly.items()
    assert coeff == 1
    assert qpow == alg.kappa(a, b) - alg.kappa(b, a)
    assert qpow == sum(a[i] * mat[i][j] * b[j] for i in range(n) for j in range(n))
    assert monomial_commutation(alg, a, b) == alg.commutation_exponent(a, b)


@pytest.mark.parametrize("name", ["A2", "B2", "G2", "A3", "C3"])
@pytest.mark.parametrize("convention", [1, -1])
def test_formula_audit_longest(name, convention):
    system = root_system(name)
    rep = formula_audit(system, longest_element(system).reduced_word, convention)
    assert rep.passed, rep.summary()
    assert set(rep.checks) == set(FAMILIES)
    assert all(c.checked for name_, c in rep.checks.items() if name_ != "minor-exchange" or name != "A1")


def test_formula_audit_vacuous(A2):
    rep = formula_audit(A2, (2,))
    assert rep.passed and rep.checks["minor-exchange"].checked == 0


def test_convention_flip_is_caught(A2):
    """Running one convention's engine against the other's closed forms must fail."""
    word = (1, 2, 1)
    g = beta_grid(A2, word)
    flipped = TwistedAlgebra([[-x for x in row] for row in build_L0(g).entries])
    straight = TwistedAlgebra(build_L0(g))
    a, b = (1, 0, 0), (0, 1, 0)
    assert flipped.commutation_exponent(a, b) == -straight.commutation_exponent(a, b) != 0
