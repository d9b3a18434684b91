"""Multiplier spectra of correspondences on P^1, degree bounds for multiplier
maps, and the finite-field injectivity check for cubic maps."""

__version__ = "0.1.0"
