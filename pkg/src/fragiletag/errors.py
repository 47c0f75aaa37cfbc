"""Exception types shared across the toolkit."""


class FragileTagError(Exception):
    """Base class for all toolkit errors."""


class ChaosError(FragileTagError):
    """Keystream left the open unit interval or got pinned to a fixed point."""


class CapacityError(FragileTagError):
    """Cover cannot host the requested payload."""


class RecordError(FragileTagError):
    """Position record inconsistent with the image or payload it is applied to."""


class KeyFileError(FragileTagError):
    """Bytes are not a valid serialized position record."""


class ImageFormatError(FragileTagError):
    """Unsupported or malformed image file."""


class AttackSpecError(FragileTagError):
    """Attack parameters missing or out of range."""
