"""Bridge failure modes."""


class BridgeError(Exception):
    """Base class for everything this package raises on purpose."""


class InvalidJob(BridgeError):
    """An inference job's fields are out of range."""


class MalformedDataset(BridgeError):
    """A dataset file violates the documented instance format."""


class FrameworkUnavailable(BridgeError):
    """The external model framework cannot be reached or started."""


class PartialOutput(BridgeError):
    """Inference stopped before every instance was answered.

    ``completed`` counts the records that were durably written; passing the
    same job again resumes after them.
    """

    def __init__(self, message: str, completed: int):
        super().__init__(message)
        self.completed = completed

    @property
    def resume_token(self) -> str:
        return f"records={self.completed}"
