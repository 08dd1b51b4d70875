"""Equivariant gocha series, Lie algebra ranks and spectra.

Report functions take JSON text and return JSON text; errors raise
GochaError, whose ``exit_code`` matches the command line tool.
"""

from ._core import (
    GochaError,
    fab,
    kronecker_split,
    lyndon_counts,
    mobius,
    oracle,
    ranks,
    series,
    spectrum,
)

__all__ = [
    "GochaError",
    "fab",
    "kronecker_split",
    "lyndon_counts",
    "mobius",
    "oracle",
    "ranks",
    "series",
    "spectrum",
]
