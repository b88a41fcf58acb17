import pytest
import random

from ramcc.algebra.ratfun import RationalFunction
from ramcc.fields.laurent import LaurentSeries, EXACT_PRECISION
from ramcc.fields.extension import ExtensionSpec, differentViaDerivative, applyAutomorphism, orderMultiply, orderValuation, \
    residue
from ramcc.formats.document import parseLaurent
from ramcc.errors import InvalidExtension, PrecisionExhausted


def anchor(a0: str="-x", a1: str="-t^2", precision: int=40) -> ExtensionSpec:
    return ExtensionSpec.create(3, 1, [parseLaurent(a0, 3), parseLaurent(a1, 3), LaurentSeries.zero(3)], precision)


def test_conjugates_are_roots():
    spec = anchor()
    t = LaurentSeries.monomial(1, 1, 3)
    for root in [spec.h(), spec.h() + t, spec.h() - t]:
        assert spec.evaluate(root).isZeroToPrecision()
    assert not spec.evaluate(spec.h() + t*t).isZeroToPrecision()


def test_valuation_and_residue():
    spec = anchor()
    t = LaurentSeries.monomial(1, 1, 3)
    h = spec.h()
    assert h.valuation() == 0
    assert residue(h) == RationalFunction.generator(3, "u")
    assert (h - (h + t)).valuation() == 1

    a = h + t
    b = h.shift(2) + t
    assert (a * b).valuation() == a.valuation() + b.valuation()

    with pytest.raises(PrecisionExhausted):
        spec.zero().valuation()


def test_different_from_the_derivative():
    # f'(h) = 3h^2 - t^2 = -t^2.
    v, unit = differentViaDerivative(anchor())
    assert v == 2
    assert unit == RationalFunction.constant(-1, 3, "u")


@pytest.mark.parametrize("a0, a1", [
    ("-t", "-t^2"),     # ā₀ = 0
    ("-x^3", "-t^2"),   # ā₀ is a cube
    ("-x", "-1"),       # ā₁ ≠ 0
    ("-x", "0")         # f is a polynomial in T^3
])
def test_rejected_extensions(a0, a1):
    with pytest.raises(InvalidExtension):
        anchor(a0, a1)


def test_default_precision_follows_the_rule():
    spec = ExtensionSpec.create(3, 1, [parseLaurent("-x", 3), parseLaurent("-t^2", 3), LaurentSeries.zero(3)])
    assert spec.precision == 4*3*(1 + 2) + 8


def test_automorphisms_act_through_h():
    spec = anchor()
    t = LaurentSeries.monomial(1, 1, 3)
    h = spec.h()
    sigma_h = h + t
    assert applyAutomorphism(sigma_h, h*h).equalsToPrecision(sigma_h*sigma_h)
    assert applyAutomorphism(sigma_h, sigma_h).equalsToPrecision(h - t)
    assert applyAutomorphism(sigma_h, spec.one()).equalsToPrecision(spec.one())


def _randomElement(spec: ExtensionSpec, rng: random.Random):
    x = RationalFunction.generator(spec.p)
    coordinates = []
    for _ in range(spec.degree):
        start = rng.randrange(3)
        terms = {k: RationalFunction.constant(rng.randrange(spec.p), spec.p) + x*rng.randrange(spec.p) for k in range(start, 4)}
        coordinates.append(LaurentSeries.create(spec.p, terms, EXACT_PRECISION))
    return spec.fromCoordinates(coordinates)


def test_valuations_are_multiplicative_on_random_pairs():
    spec = anchor()
    rng = random.Random(0)
    tested = 0
    while tested < 200:
        a, b = _randomElement(spec, rng), _randomElement(spec, rng)
        if a.isZeroToPrecision() or b.isZeroToPrecision():
            continue
        assert orderValuation(orderMultiply(a, b)) == orderValuation(a) + orderValuation(b)
        tested += 1
