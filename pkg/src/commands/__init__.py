from .core import CommandRunner

__all__ = ["CommandRunner"]
