"""Exception types. Every domain error is a ValueError so callers can catch broadly."""


class GenusFormsError(ValueError):
    pass


# algebra
class DegenerateGcd(GenusFormsError):
    pass


class NonCoprimeModuli(GenusFormsError):
    pass


class BadModulus(GenusFormsError):
    pass


class ZeroReduction(GenusFormsError):
    pass


# forms
class NonUnitDet(GenusFormsError):
    pass


class BadParity(GenusFormsError):
    pass


class SearchExhausted(GenusFormsError):
    pass


class DiscMismatch(GenusFormsError):
    pass


class NotPrimitive(GenusFormsError):
    pass


# reduction
class WrongDiscSign(GenusFormsError):
    pass


class DegenerateDisc(GenusFormsError):
    pass


# genus
class ZeroDisc(GenusFormsError):
    pass


class NotCoprime(GenusFormsError):
    pass


class NotFound(GenusFormsError):
    """No certificate below the prime bound; ``missing`` lists the uncovered unit classes."""

    def __init__(self, message, missing=()):
        super().__init__(message)
        self.missing = tuple(missing)


# jacobian
class ZeroLead(GenusFormsError):
    pass


class NotOnCurve(GenusFormsError):
    pass


class BadPrime(GenusFormsError):
    pass


class BadCurve(GenusFormsError):
    pass


# specialize
class ImprimitiveSpecialization(GenusFormsError):
    pass


class NotSIntegral(GenusFormsError):
    pass


# cli
class ParseError(GenusFormsError):
    pass
