"""Exception hierarchy shared by the library, the CLI and the API."""


class PascalDetError(Exception):
    """Root of every error raised by pascaldet."""


# --- Malformed requests ---

class SpecError(PascalDetError, ValueError):
    """A specification is malformed or cannot be served."""


class SpecMismatch(SpecError):
    """Parts of a specification disagree (e.g. alpha_0 != beta_0)."""


class UnsupportedFamily(SpecError):
    """Unknown oracle family, identity tag or parameter set."""


# --- Domain errors ---

class DomainError(PascalDetError, ValueError):
    """An argument lies outside the domain of an operation."""


class NegativeInput(DomainError):
    pass


class NotAPerfectSquare(DomainError):
    pass


class NotAntisymmetric(DomainError):
    pass


class OddOrder(DomainError):
    pass


class OrderTooLarge(DomainError):
    pass


class InsufficientTerms(DomainError):
    pass


# --- Outcomes of searches and checks ---

class NoRecursionFound(PascalDetError):
    """No recursion of order <= d_max fits the supplied window."""


class DegenerateKernel(PascalDetError):
    """The Hankel matrix is singular but no kernel vector ends in -1."""


class InvariantViolated(PascalDetError):
    pass


class QuadraticFitFailed(PascalDetError):
    pass


class PatternViolated(PascalDetError):
    pass


class DegreeAssertionFailed(PascalDetError):
    pass
