"""Exception types shared across the package."""


class OrbicalcError(Exception):
    """Base class for domain errors (bad inputs, violated preconditions)."""


class ValidationError(OrbicalcError):
    """Input data fails a structural invariant."""


class InternalCheckError(OrbicalcError):
    """A computation produced data violating an identity it must satisfy.

    Raised by the built-in cross checks (orthogonality, indicator range,
    partition identities, ...).  Seeing one of these means a bug, not bad
    user input.
    """
