"""Exception types shared across the package.

The CLI maps each class to a distinct exit code, so raising the right type
is part of the external contract.
"""


class SymmpowError(Exception):
    """Base class for all package-specific failures."""


class ParseError(SymmpowError):
    """A problem document is malformed or violates the input schema."""


class CapExceeded(SymmpowError):
    """Group enumeration or symmetric-power dimension passed its ceiling."""


class NotARepresentation(SymmpowError):
    """Generator images do not extend to a homomorphism on the whole group."""


class MeataxeInconclusive(SymmpowError):
    """The randomized irreducibility test exhausted its retry budget."""


class TheoremViolation(SymmpowError):
    """A claim the engine is supposed to certify failed exact verification."""
