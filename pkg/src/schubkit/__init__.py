"""Grothendieck, Schubert, Lascoux and Castelnuovo-Mumford polynomials, with diagram models."""
from __future__ import annotations

__version__ = "0.1.0"
