"""
Contact Invariants Core Module

This package contains the computational core:
- Exact rational arithmetic and binary forms
- Fixed-point graph enumeration and canonical forms
- Localization factors and invariant computation
- Legendrian curve checks
- Reducible configuration counts
"""

__version__ = '1.0.0'

from .errors import ContactInvariantsError
from .graphs import GraphClass, WeightedColoredTree, enumerate_fixed_graphs
from .invariants import InvariantEngine, InvariantKind, InvariantRequest, compute
from .localization import ClassSelector, TorusSpec

__all__ = [
    'ContactInvariantsError',
    'GraphClass',
    'WeightedColoredTree',
    'enumerate_fixed_graphs',
    'InvariantEngine',
    'InvariantKind',
    'InvariantRequest',
    'compute',
    'ClassSelector',
    'TorusSpec'
]
