# Quaternionic minimal polynomials of structured 4x4 matrices
__version__ = "1.0.0"
