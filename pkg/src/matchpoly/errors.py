"""Exception types shared across the package."""


class InvalidParameters(ValueError):
    """Arguments outside a constructor's documented range."""


class NotCoherent(ValueError):
    """A weight matrix ties on some Pluecker form, so it induces no matching field."""

    def __init__(self, subset):
        self.subset = tuple(subset)
        super().__init__(f"weight matrix ties on subset {self.subset}")


class LowerDimensional(ValueError):
    """A point set is not full-dimensional where full dimension is required."""


class StepVerificationError(RuntimeError):
    """A mutation step failed one of its certification checks."""

    def __init__(self, label, check, detail):
        self.label = label
        self.check = check
        self.detail = detail
        super().__init__(f"step {label}: {check} failed: {detail}")
