"""Exception hierarchy shared by all modules."""


class BurstCodesError(Exception):
    """Base class for errors raised by this package."""


class DomainError(BurstCodesError, ValueError):
    """Input outside an operation's domain: bad length, divisibility, cap, range."""


class DecodeFailure(BurstCodesError):
    """Received word has no (or no unique) valid preimage under the given code."""


class CodeIntegrityError(BurstCodesError):
    """A codebook that was assumed verified produced ambiguous decoding."""
