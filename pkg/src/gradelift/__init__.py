"""Noncommutative Groebner bases, monomial algebras and property transfer."""

__version__ = "0.1.0"
