"""Exception hierarchy shared by all tabkit modules."""


class TabkitError(ValueError):
    """Base class for every error raised by tabkit."""


class ShapeMismatch(TabkitError):
    pass


class NotIncreasing(TabkitError):
    pass


class MissingValue(TabkitError):
    pass


class NotStandard(TabkitError):
    pass


class NotHook(TabkitError):
    pass


class AlreadyStandard(TabkitError):
    pass


class NotSmall(TabkitError):
    pass


class DomainError(TabkitError):
    pass


class DivisionNotExact(TabkitError):
    pass


class ActionOrderMismatch(TabkitError):
    pass


class NotFixed(TabkitError):
    pass
