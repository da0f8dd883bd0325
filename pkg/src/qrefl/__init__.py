"""Exact noncommutative verification of the tetrahedron and 3D
reflection operator identities built from quantum cluster data."""

__version__ = "0.1.0"
