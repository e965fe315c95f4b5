"""Oriented tangles, their isotopy moves and the action of GT pairs on knots."""

__version__ = "0.1.0"
