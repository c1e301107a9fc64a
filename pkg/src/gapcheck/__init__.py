"""gapcheck: exact-arithmetic verification of finitely checkable prime-gap claims."""

__version__ = "0.1.0"
