"""maninalg: exact rational computations with quadratic algebras,
Manin matrices, pairing operators and noncommutative minors."""

__version__ = "0.1.0"
