"""Relativistic Landau-Aharonov-Casher spectra for a neutral magnetic dipole."""

from ._core import *  # noqa: F401,F403
