"""Exception types raised by the generator and evaluation harness.

Everything inherits from :class:`BenchmarkError` so callers can catch one
base class at CLI boundaries.  Exceptions carry plain-English messages; the
CLI maps validation problems to exit code 2 and resource exhaustion
(pools/retries) to exit code 3.
"""


class BenchmarkError(Exception):
    """Base class for all errors raised by this package."""


# --- schema ---------------------------------------------------------------

class MalformedTemplate(BenchmarkError):
    """A template is missing a placeholder or repeats one."""


class DanglingInverse(BenchmarkError):
    """A relation names an inverse partner that does not exist or disagrees."""


class DuplicateName(BenchmarkError):
    """Two relation definitions share a name."""


class UnknownRelation(BenchmarkError):
    """A relation name is not part of the schema or partition in scope."""


# --- world ----------------------------------------------------------------

class InsufficientPool(BenchmarkError):
    """Too few persons to satisfy the requested population layout."""


class ConflictingFact(BenchmarkError):
    """Closure would assign two distinct values to a functional slot."""


class UnsupportedKind(BenchmarkError):
    """No value generator exists for the requested tail kind."""


class EmptyProfile(BenchmarkError):
    """A person owns no facts on the requested side."""


# --- paths ----------------------------------------------------------------

class EmptyResult(BenchmarkError):
    """Enumeration produced no paths under the given constraints."""


class InsufficientPaths(BenchmarkError):
    """Sampling could not reach the requested pool size."""


# --- splits ---------------------------------------------------------------

class UnsatisfiableSplit(BenchmarkError):
    """No hold-out draw produced a split satisfying all invariants."""


# --- qa -------------------------------------------------------------------

class MissingTemplate(BenchmarkError):
    """A relation lacks the template needed to phrase this hop."""


class NoRealization(BenchmarkError):
    """No entity chain in the graph realizes the requested path."""


class InvalidType(BenchmarkError):
    """The operation does not apply to this reasoning type."""


# --- eval -----------------------------------------------------------------

class UnknownInstanceId(BenchmarkError):
    """A prediction references an instance id absent from the dataset."""


class DuplicateInstanceId(BenchmarkError):
    """Two prediction records claim the same instance id."""


class InvalidCounts(BenchmarkError):
    """pass@k called with impossible (n, c, k)."""


# --- diagnose ---------------------------------------------------------------

class EmptyInput(BenchmarkError):
    """An aggregate was requested over zero records."""


class IndexOutOfRange(BenchmarkError):
    """A hop index does not exist on the given path."""


# --- pipeline / cli ---------------------------------------------------------

class EmptyPool(BenchmarkError):
    """A subset was requested from a pool with no instances."""


class MissingArtifact(BenchmarkError):
    """An expected file is absent from the artifact directory."""


class ArtifactLocked(BenchmarkError):
    """Another pipeline run owns the output directory."""
