"""
Every failure RamCC can report. All of them are ValueErrors, so code that only knows that bad input raises a
ValueError keeps working. There are two families:
    - InputError: the document, the data or the requested precision cannot support the computation;
    - MathematicalMismatch: two computations that should agree by a theorem did not. These are findings, not
      user mistakes, and the CLI reports them with a different exit code.
"""
from typing import Tuple, Any


class RamccError(ValueError):
    pass


class InputError(RamccError):
    exit_code = 2


class MathematicalMismatch(RamccError):
    exit_code = 1


########################################################################################################################


class ParseError(InputError):

    def __init__(self, line: int, col: int, expected: str, found: str=""):
        self.line = line
        self.col  = col
        self.expected = expected
        self.found    = found
        super().__init__(f"line {line}, column {col}: expected {expected}" + f" but found '{found}'"*bool(found))


class DivisionByZero(InputError):
    pass


class ZeroPolynomial(InputError):
    pass


class ZeroTensor(InputError):
    pass


class VariableMismatch(InputError):
    pass


class UnsupportedPrime(InputError):
    pass


class NotIntegral(InputError):
    pass


class PrecisionExhausted(InputError):
    pass


class InvalidExtension(InputError):
    pass


class NotARoot(InputError):

    def __init__(self, index: int, message: str=""):
        self.index = index
        super().__init__(f"conjugate #{index} is not a root of f" + f": {message}"*bool(message))


class NotClosed(InputError):

    def __init__(self, pair: Tuple[int,int], message: str=""):
        self.pair = pair
        super().__init__(f"conjugates {pair} break closure" + f": {message}"*bool(message))


class RootsNotFound(InputError):
    pass


class CharacterNotWild(InputError):
    pass


class NegativeDimension(InputError):
    pass


class IntermediateFieldUnavailable(InputError):
    pass


class SpanConditionViolated(InputError):
    pass


class NonIntegralInnerProduct(InputError):
    pass


########################################################################################################################


class IdentityViolated(MathematicalMismatch):

    def __init__(self, identity: str, witness: Any=None):
        self.identity = identity
        self.witness  = witness
        super().__init__(f"{identity} does not hold" + f" (witness: {witness})"*(witness is not None))


class MismatchWitness(MathematicalMismatch):

    def __init__(self, left: Any, right: Any, what: str="cc = kcc"):
        self.left  = left
        self.right = right
        super().__init__(f"{what} fails: {left} != {right}")


class AdditivityViolation(MathematicalMismatch):
    pass


class IntegralityFailure(MathematicalMismatch):
    pass


class NonIntegerConductorPart(MathematicalMismatch):
    pass


class InconsistentExtension(MathematicalMismatch):
    pass
