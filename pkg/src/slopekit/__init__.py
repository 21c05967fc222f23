"""Exceptional Dehn surgery slopes, boundary slopes and the conjectures relating them."""
from __future__ import annotations

__version__ = "0.1.0"

from .conjectures import SlopeDataset, Status, Verdict, check_conj1, check_conj6, verify
from .slope import MERIDIAN, AnnotatedSlope, Slope, SlopeTag

__all__ = [
    "MERIDIAN",
    "AnnotatedSlope",
    "Slope",
    "SlopeDataset",
    "SlopeTag",
    "Status",
    "Verdict",
    "check_conj1",
    "check_conj6",
    "verify",
]
