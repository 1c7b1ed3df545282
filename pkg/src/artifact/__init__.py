"""Exact calculus of singularity classes on Hurwitz spaces of meromorphic functions."""

from .algebra import LinearSystem, Polynomial, SolveStatus, parse, solve_linear, var, weighted_degree
from .partitions import MultiPartition, ReducedPartition, aut_order, aut_set_order, codim, m_count
from .local_models import LocalModel, residual, solve_Q, thom_Ai, thom_R
from .ring import genus0_reduce, p_push, reduce, verify_thm33
from .grr import grr_rhs, td_series
from .strata import assemble, degree, hurwitz_number, sigma_g0, sigma_general
from .oracle import FactorizationSpec, count_all, count_connected, hurwitz_oracle

__version__ = "0.1.0"

__all__ = [
    "LinearSystem", "Polynomial", "SolveStatus", "parse", "solve_linear", "var", "weighted_degree",
    "MultiPartition", "ReducedPartition", "aut_order", "aut_set_order", "codim", "m_count",
    "LocalModel", "residual", "solve_Q", "thom_Ai", "thom_R",
    "genus0_reduce", "p_push", "reduce", "verify_thm33",
    "grr_rhs", "td_series",
    "assemble", "degree", "hurwitz_number", "sigma_g0", "sigma_general",
    "FactorizationSpec", "count_all", "count_connected", "hurwitz_oracle",
]
