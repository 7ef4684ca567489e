"""Exception hierarchy shared by every droidmut stage."""


class DroidmutError(Exception):
    """Base class for all errors raised by droidmut."""


class NoManifest(DroidmutError):
    pass


class NotADirectory(DroidmutError):
    pass


class ParseFailure(DroidmutError):
    """A source file could not be parsed.

    ``path`` is the project-relative path and ``position`` the byte offset
    where the parser gave up (``None`` when unknown).
    """

    def __init__(self, path, message, position=None):
        self.path = path
        self.position = position
        where = f"{path}" if position is None else f"{path}@{position}"
        super().__init__(f"{where}: {message}")


class NotFound(DroidmutError):
    pass


class UnknownOperator(DroidmutError):
    pass


class TransformationFailure(DroidmutError):
    pass


class IoFailure(DroidmutError):
    pass


class PatchConflict(DroidmutError):
    pass


class HookNotExecutable(DroidmutError):
    pass


class UnknownMutantId(DroidmutError):
    pass


class InconsistentManifest(DroidmutError):
    pass


class DocumentError(DroidmutError):
    """A persisted document is missing fields or has an unsupported version."""
