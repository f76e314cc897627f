"""Exception hierarchy.

Every error raised by the library derives from :class:`SimdiffError`; the CLI
maps each family to its own exit code.
"""


class SimdiffError(Exception):
    """Base class for all library errors."""


class PipelineError(SimdiffError):
    pass


class EmptyInputError(PipelineError, ValueError):
    pass


class NGramError(SimdiffError):
    pass


class OrderError(NGramError, ValueError):
    """n-gram order outside 1..3, or two tables of different order."""


class DictError(SimdiffError):
    pass


class DictFileNotFoundError(DictError, FileNotFoundError):
    pass


class DictParseError(DictError, ValueError):
    def __init__(self, path, lineno, message):
        super().__init__(f"{path}:{lineno}: {message}")
        self.path = path
        self.lineno = lineno


class DictTooSmallError(DictError, ValueError):
    pass


class EmptyCorpusError(DictError, ValueError):
    pass


class WeightDomainError(SimdiffError, ValueError):
    pass


class ReportError(SimdiffError):
    pass


class MissingOrderError(ReportError, KeyError):
    pass


class EmptyReportError(ReportError, ValueError):
    pass


class IngestError(SimdiffError):
    pass


class SourceError(IngestError):
    """Malformed source locator or unreadable local file."""


class MarkerNotFoundError(IngestError, ValueError):
    pass


class NetworkError(IngestError):
    pass


class NotFoundError(IngestError):
    pass


class CacheWriteError(IngestError):
    pass
