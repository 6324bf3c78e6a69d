"""Exception types shared across the package."""

from __future__ import annotations


class MatroidSweepError(Exception):
    """Base class for all errors raised by this package."""


class EmptyBases(MatroidSweepError):
    pass


class RankMismatch(MatroidSweepError):
    pass


class NotAMatroid(MatroidSweepError):
    """The basis exchange axiom fails for some pair of bases."""


class BadParameters(MatroidSweepError):
    pass


class DependentContraction(MatroidSweepError):
    pass


class OverlappingSets(MatroidSweepError):
    pass


class TooLarge(MatroidSweepError):
    """Instance exceeds the size bound of an enumeration-backed oracle."""


class NotABasis(MatroidSweepError):
    pass


class NotAShellingStep(MatroidSweepError):
    def __init__(self, step: int, message: str = ""):
        self.step = step
        super().__init__(message or f"order fails the shelling condition at step {step}")


class NotAPartialShelling(MatroidSweepError):
    pass


class NotAnIdeal(MatroidSweepError):
    """Prefix is not an order ideal of the internal-activity poset; no verdict."""


class NonGenericFunctional(MatroidSweepError):
    def __init__(self, pair=None, message: str = ""):
        self.pair = pair
        super().__init__(message or f"functional takes equal weights on basis pair {pair}")


class InitialNotPinned(MatroidSweepError):
    pass


class ExhaustedMisses(MatroidSweepError):
    pass


class WitnessMismatch(MatroidSweepError):
    pass


class DuplicateRestrictionSets(MatroidSweepError):
    pass


class CyclicOrientation(MatroidSweepError):
    pass


class CorruptStore(MatroidSweepError):
    pass
