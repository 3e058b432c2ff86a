"""Clifford Workbench: verify the mass intertwining transform of Clifford analysis and its integral theorems."""

from clifford_workbench.algebra.multivector import AlgebraSignature, Multivector, ScalarMode
from clifford_workbench.algebra.point import Point
from clifford_workbench.config.conventions import SignConvention
from clifford_workbench.config.suite_config import SuiteConfig
from clifford_workbench.mass.terms import MassTerm
from clifford_workbench.operators.field import CliffordField, FieldClass

__all__ = [
    "AlgebraSignature",
    "CliffordField",
    "FieldClass",
    "MassTerm",
    "Multivector",
    "Point",
    "ScalarMode",
    "SignConvention",
    "SuiteConfig",
]
__version__ = "0.1.0"
