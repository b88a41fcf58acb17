from ramcc.algebra.ratfun import RationalFunction
from ramcc.algebra.differentials import DifferentialForm, differential


def test_tensor_algebra():
    p = 3
    x = RationalFunction.generator(p)
    a = DifferentialForm(x)
    b = DifferentialForm(x.inverse())
    product = a * b
    assert product.power == 2
    assert product.coefficient.isOne()
    assert (a / a) == DifferentialForm.scalar(1, p)
    assert (a ** 3).coefficient == x**3
    assert a.inverse().power == -1


def test_printing():
    p = 3
    x = RationalFunction.generator(p)
    assert DifferentialForm(RationalFunction.constant(-1, p)).toString() == "-dx"
    assert DifferentialForm(RationalFunction.constant(1, p)).toString() == "dx"
    assert DifferentialForm(x + 1, 2).toString() == "(x + 1)*(dx)^2"
    assert DifferentialForm(x / (x + 1)).toJson() == {"numerator": "x", "denominator": "x + 1", "power": 1}


def test_base_change_and_descent():
    p, n = 2, 2
    x = RationalFunction.generator(p)
    form = DifferentialForm(x**2 + x)
    lifted = form.baseChanged(n)
    assert lifted.coefficient.variable == "u"
    assert lifted.isRational(n)
    assert lifted.descended(n) == form

    u = RationalFunction.generator(p, "u")
    assert not DifferentialForm(u).isRational(n)


def test_exterior_derivative():
    p = 5
    x = RationalFunction.generator(p)
    assert differential(x**5).isZero()
    assert differential(x**2).coefficient == x*2
