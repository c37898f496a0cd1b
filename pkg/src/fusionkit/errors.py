"""Exception hierarchy shared by every fusionkit module."""


class FusionkitError(Exception):
    pass


class DegreeMismatchError(FusionkitError, ValueError):
    pass


class NotAPermutationError(FusionkitError, ValueError):
    pass


class NotASubgroupError(FusionkitError, ValueError):
    pass


class ScaleLimitError(FusionkitError):
    """An enumeration would exceed a configured cap."""

    def __init__(self, what, size, cap_name, cap):
        self.size = size
        self.cap_name = cap_name
        self.cap = cap
        super().__init__(
            f"scale limit: {what} has size {size}, above the {cap_name} cap of {cap} "
            f"(raise it via FUSIONKIT_CAPS, e.g. FUSIONKIT_CAPS={cap_name}={size})"
        )


class InconsistencyError(FusionkitError):
    """A computed result contradicts a fact that must hold (a finding, not a usage error)."""


class GroupFileError(FusionkitError, ValueError):
    pass
