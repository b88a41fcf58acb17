from ramcc.algebra.ratfun import RationalFunction
from ramcc.fields.laurent import LaurentSeries, laurentValuation
from ramcc.formats.document import parseLaurent


def test_big_o_sets_the_precision():
    s = parseLaurent("t^-1 + O(t^3)", 3)
    assert s.precision == 3
    assert not s.isExact()
    assert s.valuation() == -1
    assert s.toString() == "t^-1 + O(t^3)"


def test_valuations_add():
    p = 3
    a = parseLaurent("t^2 + x*t^3", p)
    b = parseLaurent("(x + 1)*t^-1 - t + O(t^5)", p)
    assert laurentValuation(a * b) == laurentValuation(a) + laurentValuation(b)
    assert (a * b).coefficient(1) == RationalFunction.generator(p) + 1


def test_truncation_is_pessimistic():
    p = 2
    a = parseLaurent("1 + t + O(t^4)", p)
    b = parseLaurent("t^2 + O(t^3)", p)
    assert (a + b).precision == 3
    assert (a * b).precision == 3
    assert (a - a).isEmpty()
    assert not (a - a).isExact()


def test_monomials():
    p = 5
    x = RationalFunction.generator(p)
    m = LaurentSeries.monomial(x, -2, p)
    assert m.isExact()
    assert m.shift(3).valuation() == 1
    assert (m ** 2).valuation() == -4
    assert m.scaled(x.inverse()).coefficient(-2).isOne()
