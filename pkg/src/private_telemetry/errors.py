"""Exception types shared across the telemetry stack.

Server code maps these onto HTTP status classes; nothing here ever carries
payload bytes, so the classes are safe to log.
"""


class TelemetryError(Exception):
    """Base class for every error raised by this package."""


class ParameterError(TelemetryError, ValueError):
    """A numeric or structural parameter is out of its allowed range."""


class ValidationError(TelemetryError, ValueError):
    """Input data (event strings, dictionaries, distributions) is invalid."""


class RecordRejected(TelemetryError):
    """A privatized record does not belong to this sketch configuration."""


class MergeError(TelemetryError):
    """Two sketch states with different parameters cannot be merged."""


class SnapshotError(TelemetryError):
    """A sketch snapshot file is missing, truncated, or corrupt."""


class WireDecodeError(TelemetryError):
    """The 7-byte inner record encoding is malformed."""


class FrameParseError(TelemetryError):
    """An encapsulated request frame is too short or structurally invalid."""


class NegotiationError(TelemetryError):
    """The frame or key config names an unsupported cipher suite."""


class KeyMismatchError(TelemetryError):
    """The frame references a key id this server does not hold."""


class AuthenticationError(TelemetryError):
    """AEAD open failed: the blob was tampered with or sealed to another key."""


class KeyGenerationError(TelemetryError):
    """The OS randomness source failed while generating a key pair."""
