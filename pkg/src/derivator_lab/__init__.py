"""Executable finite category theory: Kan extensions, (co)ends, distributors,
weighted (co)limits, and additivity/center/linearity checks over concrete
computation targets (finite sets and matrices over a prime field)."""

__version__ = "0.1.0"
