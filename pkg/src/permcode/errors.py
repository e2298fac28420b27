"""Exception types shared across the package."""


class ParameterError(ValueError):
    """A function argument or parameter set violates a documented precondition."""


class EnumerationCapError(ParameterError):
    """An exhaustive enumeration was requested beyond the configured size cap."""


class DecodeFailure(Exception):
    """Decoding could not produce a codeword consistent with the received data.

    The ``reason`` attribute carries a short machine-readable tag so callers
    can distinguish failure modes (inconsistent linear system, repeated or
    irrational roots, syndrome mismatch, ...).  Every reason means the same
    thing operationally: the received word is corrupted beyond the number of
    errors the code was designed to correct, or the parameters are unsound.
    """

    def __init__(self, reason: str, detail: str = ""):
        self.reason = reason
        self.detail = detail
        super().__init__(f"{reason}: {detail}" if detail else reason)
