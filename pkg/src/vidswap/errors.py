"""Exception types shared across the pipeline."""


class VidswapError(Exception):
    """Base class for all pipeline errors."""


class ConfigurationError(VidswapError):
    """A config value is outside its allowed range or inconsistent."""


class ContractError(VidswapError):
    """An operation was called with inputs violating its preconditions."""


class DetectionFailure(VidswapError):
    """No face was found in one or more frames."""

    def __init__(self, frame_indices):
        self.frame_indices = list(frame_indices)
        super().__init__(f"no face detected in frames {self.frame_indices}")


class ProviderFailure(VidswapError):
    """A pluggable provider (renderer, embedder, ...) failed."""
