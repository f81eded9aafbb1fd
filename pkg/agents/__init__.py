"""Resolutores del sistema Deutsch: cuántico y de-cuantizados."""

from .quantum_solver import run_deutsch, trace_deutsch
from .dequant_solver import solve_gauss, solve_gauss_family, solve_surd

__all__ = ["run_deutsch", "trace_deutsch", "solve_gauss", "solve_gauss_family", "solve_surd"]
