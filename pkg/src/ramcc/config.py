import os
from typing import Optional

ENVIRONMENT_PRECISION = "RAMCC_PRECISION"


class Defaults:

    @staticmethod
    def maximalPrime() -> int:
        return 97

    @staticmethod
    def seed() -> int:
        return 0

    @staticmethod
    def psiExponent() -> int:
        """
        ψ₀ sends 1 ∈ F_p to ζ_p^k, and this is the default k.
        """
        return 1

    @staticmethod
    def precisionRule(p: int, n: int, max_valuation: int) -> int:
        """
        Working precision when nobody asks for one: four times the degree-weighted conductor bound p^n·(1 + max v(a_i)),
        plus a constant.
        """
        return 4 * p**n * (1 + max(0, max_valuation)) + 8

    @staticmethod
    def environmentPrecision() -> Optional[int]:
        value = os.environ.get(ENVIRONMENT_PRECISION)
        if value is None or not value.strip():
            return None
        try:
            precision = int(value)
        except ValueError:
            raise ValueError(f"{ENVIRONMENT_PRECISION} must be an integer, not '{value}'.")
        if precision <= 0:
            raise ValueError(f"{ENVIRONMENT_PRECISION} must be positive.")
        return precision

    @staticmethod
    def resolvePrecision(flag: Optional[int], document: Optional[int]) -> Optional[int]:
        """
        Flag beats environment beats document. None means "use the rule of the extension".
        """
        if flag is not None:
            return flag
        env = Defaults.environmentPrecision()
        if env is not None:
            return env
        return document
