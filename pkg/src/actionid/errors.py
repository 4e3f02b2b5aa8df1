"""Exception types shared across the package."""


class ActionIdError(Exception):
    """Base class for all actionid errors."""


class ConfigError(ActionIdError):
    """Invalid configuration value, unknown field, or out-of-range parameter."""


class ShapeError(ActionIdError):
    """Array shape does not match what an operation requires."""


class DecodeError(ActionIdError):
    """Image payload could not be decoded."""


class IoError(ActionIdError):
    """Filesystem read/write failure."""


class NoClassesFound(ActionIdError):
    """Dataset root contains no class subdirectories."""


class EmptyClass(ActionIdError):
    """A class directory contains no decodable images."""

    def __init__(self, name: str):
        super().__init__(f"class directory {name!r} contains no decodable images")
        self.name = name


class InsufficientImages(ActionIdError):
    """A class has fewer images than the requested split needs."""

    def __init__(self, class_name: str, have: int, need: int):
        super().__init__(
            f"class {class_name!r} has {have} images, split needs {need}"
        )
        self.class_name = class_name
        self.have = have
        self.need = need


class NumericError(ActionIdError):
    """Non-finite value encountered during training."""


class WeightLoadError(ActionIdError):
    """Backbone weight archive is missing, corrupt, or mis-shaped."""


class VersionError(ActionIdError):
    """Serialized artifact has an unsupported format version."""


class FormatError(ActionIdError):
    """Serialized artifact is corrupt or internally inconsistent."""
