"""Exception types shared across the toolkit."""


class InvalidArgument(ValueError):
    """An argument violates a documented precondition."""


class DegenerateInput(ValueError):
    """Input is structurally valid but makes the requested quantity undefined
    (e.g. a constant signal fed to a correlation coefficient)."""


class UnknownWavelet(ValueError):
    """Requested wavelet name is not in the shipped filter tables."""


class InsufficientExtrema(ValueError):
    """Too few extrema to build an envelope; the sifting residual has been
    reached."""


class MissingClass(ValueError):
    """A pipeline input directory lacks files for a declared class label."""


class SignalParseError(ValueError):
    """A signal file could not be parsed; carries file and line context."""

    def __init__(self, path, line_no, detail):
        super().__init__(f"{path}:{line_no}: {detail}")
        self.path = str(path)
        self.line_no = line_no
        self.detail = detail
