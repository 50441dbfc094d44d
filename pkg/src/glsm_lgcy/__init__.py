"""Chamber combinatorics, I-functions and LG/CY wall crossing for the
cubic (C*)^4 gauged linear sigma model on C^13."""

__version__ = "0.1.0"
