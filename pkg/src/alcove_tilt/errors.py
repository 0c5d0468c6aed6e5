"""Exception hierarchy shared by all modules."""


class AlcoveTiltError(Exception):
    """Base class for errors raised by this package."""


class RootDatumError(AlcoveTiltError, ValueError):
    pass


class BadPairing(RootDatumError):
    """The Cartan matrix built from the pairing is not a generalized Cartan matrix."""


class NotFiniteType(RootDatumError):
    """The reflection closure of the simple roots did not terminate."""


class NotDominant(AlcoveTiltError, ValueError):
    pass


class NotInClosure(AlcoveTiltError, ValueError):
    """A vector expected in the closed fundamental alcove lies outside it."""


class NotParametrizing(AlcoveTiltError, ValueError):
    pass


class BadGeneratorIndex(AlcoveTiltError, IndexError):
    pass


class InfiniteParabolic(AlcoveTiltError, ValueError):
    pass


class EmptyFacet(AlcoveTiltError, ValueError):
    pass


class NotMinimalInCoset(AlcoveTiltError, ValueError):
    pass


class NoXi(AlcoveTiltError, ValueError):
    """No coweight pairs to 1 with every simple root."""


class PTooSmall(AlcoveTiltError, ValueError):
    pass


class OutsideFrontier(AlcoveTiltError, LookupError):
    """A p-KL query fell outside the set of elements a table covers."""


class PKLValidationError(AlcoveTiltError, ValueError):
    """An ingested p-KL table violates one of its invariants.

    ``line`` is the 1-based line of the offending row in the source file and
    ``word`` the serialized element heading that row.
    """

    def __init__(self, message, line=None, word=None):
        self.line = line
        self.word = word
        where = []
        if line is not None:
            where.append(f"line {line}")
        if word is not None:
            where.append(f"w={list(word)}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)


class ParseError(PKLValidationError):
    pass


class NotUnitriangular(PKLValidationError):
    pass


class NotSelfDual(PKLValidationError):
    pass


class NegativeKLCoefficient(PKLValidationError):
    pass


class CacheCorrupted(AlcoveTiltError):
    pass
