"""Exception taxonomy shared by the whole engine.

The CLI maps InputError to exit code 2 and VerificationError to exit code 1.
"""


class SyzalError(Exception):
    pass


class InputError(SyzalError):
    """Malformed or inconsistent input: bad polynomial text, ring mismatch,
    inhomogeneous matrices, out-of-range arguments, unknown fixtures."""


class InhomogeneousError(InputError):
    """A matrix or element violates the graded degree invariant."""


class VerificationError(SyzalError):
    """A re-verification (--check) or internal certificate failed."""


class ZeroModuleError(SyzalError):
    """Raised where an invariant is undefined for the zero module
    (depth, dimension, Cohen-Macaulay test)."""
