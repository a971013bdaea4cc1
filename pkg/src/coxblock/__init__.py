"""Exact Lie-theoretic combinatorics for Coxeter-case principal blocks."""

from .rootsystem import CartanType, RootSystem, build_root_system, coxeter_element, coxeter_number

__version__ = "0.1.0"

__all__ = ["CartanType", "RootSystem", "build_root_system", "coxeter_element", "coxeter_number", "__version__"]
