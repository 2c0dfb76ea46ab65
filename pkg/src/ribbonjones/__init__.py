"""Jones polynomials, band diagrams and ribbon surface determinants."""

__version__ = "0.1.0"
