"""Reconstruction and error-correcting codes for strings observed as
composition multisets (the polymer-storage readout model)."""

__version__ = "0.1.0"
