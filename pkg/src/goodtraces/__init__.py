"""Exact computation toolkit for finitely generated simple dimension groups:
trace classification (good / ugly / bad), density and closure of embedded
subgroups, ordered tensor products, quotient orderings and unperforation
certificates, point-evaluation traces on polynomial rings, and ordered
Bratteli diagrams with Vershik dynamics.
"""

from .domain import DomainElement, DomainSpec, q_coordinates, sign
from .errors import (
    BudgetExceeded,
    CyclicFactor,
    DepthMismatch,
    GoodTracesError,
    IncompatibleDomains,
    InconsistentRelation,
    InvalidPath,
    KernelMeetsCone,
    NonPolynomial,
    NotInDomain,
    NotIrreducible,
    RootNotInBox,
    SchemaError,
    UnknownExample,
    UnknownSymbol,
    UnsupportedRule,
)
from .exprparse import parse_element, parse_qpoly

__all__ = [
    "DomainElement",
    "DomainSpec",
    "q_coordinates",
    "sign",
    "parse_element",
    "parse_qpoly",
    "GoodTracesError",
    "BudgetExceeded",
    "NonPolynomial",
    "UnknownSymbol",
    "CyclicFactor",
    "IncompatibleDomains",
    "InconsistentRelation",
    "InvalidPath",
    "DepthMismatch",
    "KernelMeetsCone",
    "NotInDomain",
    "NotIrreducible",
    "RootNotInBox",
    "SchemaError",
    "UnknownExample",
    "UnsupportedRule",
]
