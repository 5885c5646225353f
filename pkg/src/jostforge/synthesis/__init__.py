"""Synthesis of closed-form reflectionless potentials and Jost solutions
from discrete spectral data."""

from .exprat import ExpRational, ExpRing, MPoly, PoleEvaluation, mpoly_gcd
from .residue import ResidueForm, SpectralEntry, potential_weights, residue_at
from .build import (
    BoundStateSystem,
    JostExpression,
    SpectralData,
    assemble_system,
    asymptotic_leading,
    jost_psi_expr,
    potential_expr,
    schrodinger_residual,
    solve_system,
    synthesize,
)

__all__ = [
    "ExpRational",
    "ExpRing",
    "MPoly",
    "PoleEvaluation",
    "mpoly_gcd",
    "ResidueForm",
    "SpectralEntry",
    "potential_weights",
    "residue_at",
    "BoundStateSystem",
    "JostExpression",
    "SpectralData",
    "assemble_system",
    "asymptotic_leading",
    "jost_psi_expr",
    "potential_expr",
    "schrodinger_residual",
    "solve_system",
    "synthesize",
]
