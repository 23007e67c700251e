"""Binary LCD and reversible group codes from group-ring matrices."""

__version__ = "0.1.0"
