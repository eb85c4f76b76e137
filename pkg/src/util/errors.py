class SemnetError(Exception):
    """Base class for all semnet exceptions."""
    exit_code = 1

class InputError(SemnetError):
    """Malformed or unusable input (files, flags, words)."""
    exit_code = 1

class ParseError(InputError):
    """File content could not be parsed."""
    pass

class ConfigError(InputError):
    """Configuration related errors."""
    pass

class UnknownNodeError(InputError, KeyError):
    """A node id that does not exist in the network."""

    def __str__(self):
        return Exception.__str__(self)

class UnresolvableError(InputError):
    """Words that resolve to no node of the network."""
    pass

class NotRelatedError(SemnetError):
    """Distance requested between nodes with no ancestor relation."""
    pass

class ValidationError(SemnetError):
    """Input that parses but violates a structural invariant."""
    exit_code = 2
