"""Exception types shared across the toolkit."""


class RiskKitError(Exception):
    """Base class for every error riskkit raises on purpose."""


class ParseError(RiskKitError):
    """An input document is malformed (bad syntax, wrong columns, unknown keys)."""


class ValidationError(RiskKitError):
    """Well-formed data violates a catalog or survey invariant."""


class ScaleError(ValidationError):
    """A rating lies outside the declared rating scale."""


class DuplicateError(ValidationError):
    """The same key was supplied twice (respondent x risk, saved name, ...)."""


class UnknownRiskError(ValidationError):
    """A rating references a risk that the catalog does not define."""


class MissingRiskError(ValidationError):
    """A catalog risk has no score and partial assessment was not requested."""


class ConfigError(RiskKitError):
    """The assessment configuration is unusable (zero respondents, bad override)."""


class DomainError(RiskKitError):
    """A value is outside the domain of the requested computation."""


class DegenerateError(RiskKitError):
    """The computation is undefined for the given inputs (e.g. all-zero cost model)."""


class WorkspaceError(RiskKitError):
    """A saved-assessment lookup or write failed."""
