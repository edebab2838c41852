"""Symplectic characters and auto-correlation of Sato-Tate groups, computed exactly."""

__version__ = "0.1.0"
