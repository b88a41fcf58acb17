"""
All roots of f in O_L, found by Newton-polygon lifting around h: the roots of f are h + S for the roots S of
g(S) = f(h + S), and every such S other than 0 has positive valuation because f̄ has the single root h̄.
"""
from typing import List

from tktkt.util.printing import warn

from ..algorithms.newton import newtonPolygon
from ..algebra.residuepoly import ResiduePolynomial, residueRoots
from ..fields.extension import ExtensionSpec, OrderElement
from ..fields.laurent import LaurentSeries
from ..errors import RootsNotFound, PrecisionExhausted

PolynomialOverOrder = List[OrderElement]  # Lowest degree first.


def _taylorShift(coefficients: PolynomialOverOrder, shift: OrderElement) -> PolynomialOverOrder:
    """Coefficients of G(S + shift), by Horner's scheme on polynomials."""
    spec = shift.spec
    result: PolynomialOverOrder = []
    for c in reversed(coefficients):
        # result := result·(S + shift) + c
        shifted = [spec.zero()] + result
        for k in range(len(result)):
            shifted[k] = shifted[k] + result[k] * shift
        shifted[0] = shifted[0] + c
        result = shifted
    return result


def _isEmpty(a: OrderElement) -> bool:
    return a.isZeroToPrecision()


def _rootsAbove(coefficients: PolynomialOverOrder, minimal_valuation: int, seed: int, depth: int) -> List[OrderElement]:
    """Roots S of the polynomial with v(S) ≥ minimal_valuation."""
    spec = coefficients[0].spec
    if depth > spec.precision:
        raise PrecisionExhausted("Root lifting did not converge within the working precision.")

    roots = []
    if _isEmpty(coefficients[0]):
        roots.append(spec.zero())
        coefficients = coefficients[1:]
        if len(coefficients) > 1 and _isEmpty(coefficients[0]):
            if coefficients[0].precision() >= spec.precision:
                raise RootsNotFound("f has a repeated root, so L/K is not separable of the expected degree.")
            raise PrecisionExhausted("Two roots coincide up to the working precision.")
    if len(coefficients) <= 1:
        return roots

    valuations = [None if _isEmpty(c) else c.valuation() for c in coefficients]
    for segment in newtonPolygon(valuations):
        slope = segment.rootValuation()
        if slope < minimal_valuation:
            continue
        if slope.denominator != 1:
            raise RootsNotFound(f"Newton polygon has fractional slope {slope}; the extension is not of type (II).")
        lam = int(slope)

        # Residual polynomial: S = t^λ S', keep the terms on the segment.
        level = segment.start.valuation + lam*segment.start.degree
        residual = []
        for k in range(segment.start.degree, segment.end.degree + 1):
            c = coefficients[k]
            if valuations[k] is not None and segment.contains(k, valuations[k]):
                residual.append(c.shift(lam*k - level).residue())
            else:
                residual.append(spec.zero().residue())
        residual_polynomial = ResiduePolynomial.create(residual, spec.p, "u")

        for r in residueRoots(residual_polynomial, seed=seed):
            if r.isZero():
                continue
            start = spec.liftResidue(r).shift(lam)
            translated = _taylorShift(coefficients, start)
            for deeper in _rootsAbove(translated, lam + 1, seed, depth + 1):
                roots.append(start + deeper)
    return roots


def _findOnce(spec: ExtensionSpec, seed: int) -> List[OrderElement]:
    f = list(spec.coefficients) + [LaurentSeries.constant(1, spec.p)]
    g = _taylorShift([spec.fromSeries(a) for a in f], spec.h())
    differences = _rootsAbove(g, 1, seed, 0)
    if len(differences) != spec.degree:
        raise RootsNotFound(f"Found {len(differences)} of the {spec.degree} roots of f in O_L; "
                            f"L/K is not Galois or the conjugates are not defined over the residue field E.")
    return [spec.h() + s for s in differences]


def findConjugates(spec: ExtensionSpec, seed: int=0) -> List[OrderElement]:
    """
    The p^n conjugates of h, with h first. On PrecisionExhausted the search is retried once at twice the precision;
    the returned elements then belong to the refined ExtensionSpec.
    """
    try:
        return _findOnce(spec, seed)
    except PrecisionExhausted as e:
        warn(f"Conjugate search ran out of precision at O(t^{spec.precision}) ({e}); retrying at O(t^{2*spec.precision}).")
        return _findOnce(spec.withPrecision(2*spec.precision), seed)
