import json
from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from heckeposet.compositions import Composition, compositions_of, partitions_of, sort_to_partition
from heckeposet.qsym import (
    QsymElement,
    convert,
    coproduct,
    counit,
    expand_in_psi,
    format_rational,
    fundamental_to_monomial,
    invol_psi,
    invol_rho,
    monomial_to_fundamental,
    parse_rational,
    power_sum_p,
    product,
    psi_in_monomial,
    tensor,
    to_monomial,
)

from strategies import compositions

C = Composition
M = lambda *a: QsymElement.basis_element("M", a)  # noqa: E731
F = lambda *a: QsymElement.basis_element("F", a)  # noqa: E731
Psi = lambda *a: QsymElement.basis_element("Psi", a)  # noqa: E731


@st.composite
def elements(draw, basis="M", max_size=5):
    terms = draw(st.lists(st.tuples(compositions(max_size=max_size), st.integers(-3, 3)), max_size=4))
    return QsymElement(basis, {a: Fraction(c, 2) for a, c in terms})


def test_psi_in_monomial():
    got = psi_in_monomial((2, 3, 1))
    want = QsymElement("M", {C((2, 3, 1)): 1, C((5, 1)): Fraction(3, 5), C((2, 4)): Fraction(1, 4), C((6,)): Fraction(1, 10)})
    assert got == want
    assert str(got) == "M_(2,3,1) + 1/4 M_(2,4) + 3/5 M_(5,1) + 1/10 M_(6)"
    assert psi_in_monomial((4,)) == M(4)
    assert psi_in_monomial((1, 1)) == M(1, 1).scale(2) + M(2)


def test_f_to_m():
    assert fundamental_to_monomial(F(2)) == M(2) + M(1, 1)
    assert fundamental_to_monomial(F(1, 1, 1)) == M(1, 1, 1)


@given(compositions())
def test_basis_round_trips(alpha):
    f = F(*alpha)
    assert monomial_to_fundamental(fundamental_to_monomial(f)).coeffs == f.coeffs
    assert expand_in_psi(psi_in_monomial(alpha)).coeffs == Psi(*alpha).coeffs
    assert convert(convert(f, "Psi"), "F").coeffs == f.coeffs


def test_expand_in_psi_examples():
    assert expand_in_psi(F(2)) == QsymElement("Psi", {C((2,)): Fraction(1, 2), C((1, 1)): Fraction(1, 2)})
    p21 = expand_in_psi(power_sum_p((2, 1)))
    assert p21.coeffs == {C((2, 1)): 1, C((1, 2)): 1}


def test_power_sums():
    for n in range(1, 7):
        for lam in partitions_of(n):
            want = {a: 1 for a in compositions_of(n) if sort_to_partition(a) == lam}
            assert expand_in_psi(power_sum_p(lam)).coeffs == want


def test_product():
    assert product(M(1), M(1)) == M(1, 1).scale(2) + M(2)
    assert product(M(2, 1), QsymElement.one()) == M(2, 1)
    assert product(F(1), F(1)) == F(2) + F(1, 1)


@given(elements(max_size=3), elements(max_size=3), elements(max_size=3))
def test_product_is_associative_and_commutative(x, y, z):
    assert product(x, y) == product(y, x)
    assert product(product(x, y), z) == product(x, product(y, z))


@given(compositions(max_size=4), compositions(max_size=4))
def test_psi_product_is_multiplicative_on_power_sums(a, b):
    # p_a p_b = p_{a u b}
    lam = sort_to_partition(C(a + b))
    assert product(power_sum_p(sort_to_partition(a)), power_sum_p(sort_to_partition(b))) == power_sum_p(lam)


def test_coproduct():
    one = C(())
    assert coproduct(M(2)) == {(one, C((2,))): 1, (C((2,)), one): 1}
    assert coproduct(M(1, 2)) == {(one, C((1, 2))): 1, (C((1,)), C((2,))): 1, (C((1, 2)), one): 1}


@given(elements())
def test_counit_axiom(x):
    left: dict = {}
    for (a, b), c in coproduct(x).items():
        if not a:
            left[b] = left.get(b, 0) + c
    assert QsymElement("M", left) == x
    assert counit(x) == x.coeffs.get(C(()), 0)


@given(elements(basis="F", max_size=4), elements(basis="F", max_size=3))
def test_coproduct_is_an_algebra_map(x, y):
    lhs = coproduct(product(x, y))
    acc: dict = {}
    for (a1, b1), c1 in coproduct(x).items():
        for (a2, b2), c2 in coproduct(y).items():
            for (a, b), c in tensor(product(M(*a1), M(*a2)), product(M(*b1), M(*b2))).items():
                acc[(a, b)] = acc.get((a, b), 0) + c * c1 * c2
    assert lhs == {k: v for k, v in acc.items() if v}


def test_involutions():
    assert invol_rho(F(3, 1)) == F(1, 3)
    assert invol_psi(F(4)) == F(1, 1, 1, 1)


@given(elements(basis="F", max_size=7))
def test_involutions_commute(x):
    assert invol_rho(invol_psi(x)) == invol_psi(invol_rho(x))
    assert invol_rho(invol_rho(x)) == x
    assert invol_psi(invol_psi(x)) == x


def test_rational_format():
    assert format_rational(Fraction(3, 5)) == "3/5"
    assert format_rational(Fraction(4, 2)) == "2"
    assert parse_rational("-1/4") == Fraction(-1, 4)


@given(elements())
def test_json_roundtrip(x):
    data = json.loads(json.dumps(x.to_json()))
    assert QsymElement.from_json(data) == x


def test_cross_basis_equality():
    assert F(2) == M(2) + M(1, 1)
    assert to_monomial(Psi(2, 3, 1)) == psi_in_monomial((2, 3, 1))
