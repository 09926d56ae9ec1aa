"""Generating graphs of dihedral groups: structure, exact spectra, invariants and indices."""

__version__ = "0.1.0"
