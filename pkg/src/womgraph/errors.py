"""Exception types shared across the package."""


class WomGraphError(Exception):
    """Base class for all package errors."""


class MalformedRecord(WomGraphError):
    def __init__(self, line_no, message):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class DanglingReference(WomGraphError):
    def __init__(self, line_no, missing_id):
        super().__init__(f"line {line_no}: reference to unknown id {missing_id!r}")
        self.line_no = line_no
        self.missing_id = missing_id


class DuplicateContentId(WomGraphError):
    def __init__(self, line_no, content_id):
        super().__init__(f"line {line_no}: duplicate content id {content_id!r}")
        self.line_no = line_no
        self.content_id = content_id


class EmptyCorpus(WomGraphError):
    pass


class NegativeRelevance(WomGraphError):
    pass


class UnsupportedFormat(WomGraphError):
    pass


class NonConvergence(UserWarning):
    """Iteration hit max_iter; the (unconverged) result is still returned."""


class ZeroVector(WomGraphError):
    pass


class ZeroVariance(WomGraphError):
    pass


class LengthMismatch(WomGraphError):
    pass


class NoRelevantUsers(WomGraphError):
    pass


class UnknownUser(WomGraphError):
    pass


class InvalidParams(WomGraphError):
    pass


class BudgetInfeasible(WomGraphError):
    """Raised when the influencer budget cannot cover every targeted sub-group.

    Carries the partial plan built greedily for the largest sub-groups.
    """

    def __init__(self, message, partial_plan):
        super().__init__(message)
        self.partial_plan = partial_plan


class ConfigError(WomGraphError):
    pass
