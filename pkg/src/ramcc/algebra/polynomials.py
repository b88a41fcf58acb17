"""
Dense univariate polynomials over GF(p), as tuples of coefficients from the highest degree down (the layout of
sympy's galoistools, which does the actual arithmetic). The zero polynomial is the empty tuple.
"""
from typing import Tuple, List, Iterable, Sequence
import itertools
import random

from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_strip, gf_trunc, gf_add, gf_sub, gf_mul, gf_neg, gf_div, gf_rem, gf_quo, \
    gf_gcd, gf_monic, gf_pow, gf_pow_mod, gf_diff, gf_eval, gf_compose, gf_mul_ground, gf_sqf_list, \
    gf_ddf_zassenhaus, gf_irreducible_p

from ..errors import ZeroPolynomial, DivisionByZero

Poly = Tuple[int, ...]

EXHAUSTIVE_DEGREE = 4       # Equal-degree blocks below this degree are split by trial division...
EXHAUSTIVE_CANDIDATES = 4096  # ...as long as there are at most this many monic candidates.


def _t(f: Iterable) -> Poly:
    return tuple(int(c) for c in f)


def toPoly(coefficients: Iterable[int], p: int) -> Poly:
    return _t(gf_strip(gf_trunc([int(c) for c in coefficients], p)))


def fromLowFirst(coefficients: Sequence[int], p: int) -> Poly:
    return toPoly(reversed(list(coefficients)), p)


def monomial(c: int, k: int, p: int) -> Poly:
    return toPoly([c] + [0]*k, p)


def polyDegree(f: Poly) -> int:
    return len(f) - 1


def polyAdd(f: Poly, g: Poly, p: int) -> Poly:
    return _t(gf_add(list(f), list(g), p, ZZ))


def polySub(f: Poly, g: Poly, p: int) -> Poly:
    return _t(gf_sub(list(f), list(g), p, ZZ))


def polyNeg(f: Poly, p: int) -> Poly:
    return _t(gf_neg(list(f), p, ZZ))


def polyMul(f: Poly, g: Poly, p: int) -> Poly:
    if not f or not g:
        return ()
    if f == (1,):
        return g
    if g == (1,):
        return f
    return _t(gf_mul(list(f), list(g), p, ZZ))


def polyScale(f: Poly, c: int, p: int) -> Poly:
    return _t(gf_mul_ground(list(f), c % p, p, ZZ))


def polyDivmod(f: Poly, g: Poly, p: int) -> Tuple[Poly, Poly]:
    if not g:
        raise DivisionByZero("Polynomial division by zero.")
    q, r = gf_div(list(f), list(g), p, ZZ)
    return _t(q), _t(r)


def polyQuo(f: Poly, g: Poly, p: int) -> Poly:
    if not g:
        raise DivisionByZero("Polynomial division by zero.")
    if g == (1,):
        return f
    return _t(gf_quo(list(f), list(g), p, ZZ))


def polyRem(f: Poly, g: Poly, p: int) -> Poly:
    if not g:
        raise DivisionByZero("Polynomial division by zero.")
    return _t(gf_rem(list(f), list(g), p, ZZ))


def polyDivides(g: Poly, f: Poly, p: int) -> bool:
    return polyRem(f, g, p) == ()


def polyGcd(f: Poly, g: Poly, p: int) -> Poly:
    return _t(gf_gcd(list(f), list(g), p, ZZ))


def polyMonic(f: Poly, p: int) -> Tuple[int, Poly]:
    lc, monic = gf_monic(list(f), p, ZZ)
    return int(lc), _t(monic)


def polyPow(f: Poly, k: int, p: int) -> Poly:
    return _t(gf_pow(list(f), k, p, ZZ))


def polyDerivative(f: Poly, p: int) -> Poly:
    return _t(gf_diff(list(f), p, ZZ))


def polyEval(f: Poly, a: int, p: int) -> int:
    return int(gf_eval(list(f), a % p, p, ZZ))


def polyCompose(f: Poly, g: Poly, p: int) -> Poly:
    """f(g(x))."""
    return _t(gf_compose(list(f), list(g), p, ZZ))


def polyShift(f: Poly, c: int, p: int) -> Poly:
    """f(x + c)."""
    if c % p == 0 or len(f) <= 1:
        return f
    return polyCompose(f, (1, c % p), p)


def polyInflate(f: Poly, k: int) -> Poly:
    """f(x^k)."""
    if k == 1 or not f:
        return f
    result = []
    for c in f[:-1]:
        result.append(c)
        result.extend([0]*(k-1))
    result.append(f[-1])
    return tuple(result)


def polyIsInflated(f: Poly, k: int) -> bool:
    """Whether only exponents divisible by k appear."""
    d = len(f) - 1
    return all(c == 0 or (d - i) % k == 0 for i, c in enumerate(f))


def polyDeflate(f: Poly, k: int) -> Poly:
    if k == 1 or not f:
        return f
    if not polyIsInflated(f, k):
        raise ValueError(f"Polynomial has exponents that are not multiples of {k}.")
    return f[::k]


def polyTrailingZeros(f: Poly) -> int:
    if not f:
        raise ZeroPolynomial("The zero polynomial has no order of vanishing.")
    k = 0
    while f[-1-k] == 0:
        k += 1
    return k


def polyIsIrreducible(f: Poly, p: int) -> bool:
    return bool(gf_irreducible_p(list(f), p, ZZ))


def polyToString(f: Poly, p: int, variable: str="x") -> str:
    """
    Coefficients are printed as balanced residues, so that -1 reads as -1 rather than p-1.
    """
    if not f:
        return "0"
    terms = []
    d = len(f) - 1
    for i, c in enumerate(f):
        if c == 0:
            continue
        k = d - i
        c = c - p if 2*c > p else c
        if k == 0:
            body = str(abs(c))
        else:
            power = variable if k == 1 else f"{variable}^{k}"
            body = power if abs(c) == 1 else f"{abs(c)}*{power}"
        if not terms:
            terms.append(("-" if c < 0 else "") + body)
        else:
            terms.append(("- " if c < 0 else "+ ") + body)
    return " ".join(terms)


########################################################################################################################


def polyFactorWithUnit(f: Poly, p: int, seed: int=0) -> Tuple[int, List[Tuple[Poly, int]]]:
    """
    Factorisation into monic irreducibles, sorted by (degree, coefficients), together with the leading coefficient.

    Square-free and distinct-degree splitting come from galoistools. The equal-degree step is done here: trial division
    by all monic candidates when the degree is small and there are few candidates, otherwise Cantor-Zassenhaus with a
    seeded generator so that the output order never depends on luck.
    """
    if not f:
        raise ZeroPolynomial("Cannot factor the zero polynomial.")
    lc, squarefree_parts = gf_sqf_list(list(f), p, ZZ)

    rng = random.Random(seed)
    factors = []
    for part, multiplicity in squarefree_parts:
        for block, d in gf_ddf_zassenhaus(part, p, ZZ):
            block = _t(block)
            for irreducible in _splitEqualDegree(block, d, p, rng):
                factors.append((irreducible, multiplicity))

    factors.sort(key=lambda pair: (len(pair[0]), pair[0]))
    return int(lc), factors


def polyFactor(f: Poly, p: int, seed: int=0) -> List[Tuple[Poly, int]]:
    return polyFactorWithUnit(f, p, seed)[1]


def _splitEqualDegree(block: Poly, d: int, p: int, rng: random.Random) -> List[Poly]:
    if polyDegree(block) == d:
        return [block]
    if d < EXHAUSTIVE_DEGREE and p**d <= EXHAUSTIVE_CANDIDATES:
        return _trialSplit(block, d, p)
    return _cantorZassenhaus(block, d, p, rng)


def _trialSplit(block: Poly, d: int, p: int) -> List[Poly]:
    found = []
    for tail in itertools.product(range(p), repeat=d):
        candidate = (1,) + tail
        if polyDivides(candidate, block, p):
            found.append(candidate)
            block = polyQuo(block, candidate, p)
            if polyDegree(block) == 0:
                break
    return found


def _cantorZassenhaus(block: Poly, d: int, p: int, rng: random.Random) -> List[Poly]:
    if polyDegree(block) == d:
        return [block]

    degree = polyDegree(block)
    while True:
        r = toPoly([rng.randrange(p) for _ in range(degree)], p)
        if polyDegree(r) < 1:
            continue

        if p == 2:  # Trace map instead of the quadratic character.
            power = r
            h = r
            for _ in range(d-1):
                power = polyRem(polyMul(power, power, p), block, p)
                h = polyAdd(h, power, p)
            candidate = polyGcd(block, h, p)
        else:
            h = _t(gf_pow_mod(list(r), (p**d - 1)//2, list(block), p, ZZ))
            candidate = polyGcd(block, polySub(h, (1,), p), p)

        if 0 < polyDegree(candidate) < degree:
            return _cantorZassenhaus(candidate, d, p, rng) \
                 + _cantorZassenhaus(polyQuo(block, candidate, p), d, p, rng)


def monicDivisors(factors: List[Tuple[Poly, int]], p: int) -> List[Poly]:
    """All monic divisors of a product of prime powers."""
    divisors = [(1,)]
    for irreducible, multiplicity in factors:
        extended = []
        for divisor in divisors:
            power = divisor
            for _ in range(multiplicity + 1):
                extended.append(power)
                power = polyMul(power, irreducible, p)
        divisors = extended
    return divisors
