"""Exception types shared across the package."""


class TwistCohomError(Exception):
    pass


class SubgroupNotContained(TwistCohomError, ValueError):
    """A sub-generator is not an integer combination of the ambient basis."""


class UnknownGenerator(TwistCohomError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class WordSyntaxError(TwistCohomError, ValueError):
    pass


class DuplicateGenerator(TwistCohomError, ValueError):
    pass


class EmptyGeneratorList(TwistCohomError, ValueError):
    pass


class GenusMismatch(TwistCohomError, ValueError):
    pass


class InvalidGenus(TwistCohomError, ValueError):
    pass


class UnsupportedGenus(TwistCohomError, ValueError):
    pass


class IndexOutOfRange(TwistCohomError, IndexError):
    pass


class NotACocycle(TwistCohomError, ValueError):
    pass


class NotAdaptedToS(TwistCohomError, ValueError):
    pass


class NotProportional(TwistCohomError, ValueError):
    pass
