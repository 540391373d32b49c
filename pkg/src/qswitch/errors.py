"""Exception types raised by the library."""


class QSwitchError(ValueError):
    pass


class NotHermitian(QSwitchError):
    pass


class NotUnitary(QSwitchError):
    pass


class NotDensity(QSwitchError):
    pass


class NotNormalized(QSwitchError):
    pass


class DimensionMismatch(QSwitchError):
    pass


class InvalidSpec(QSwitchError):
    """A sweep specification failed validation.

    ``field`` names the offending setting so the CLI can report it.
    """

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"{field}: {message}")
