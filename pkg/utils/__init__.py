"""Utilidades del sistema Deutsch."""

from .validators import DataValidator
from .report_generator import ReportGenerator, RunReport

__all__ = ["DataValidator", "ReportGenerator", "RunReport"]
