#!/usr/bin/env python3
"""
Core engine of flagorbit: root data, Weyl group elements, Bruhat order,
Schubert smoothness and the orbit classification built on them.
"""

from .errors import FlagOrbitError
from .rootdata import CartanDatum, RootSystem, Weight, build_root_system, parse_cartan_datum
from .coxeter import CoxeterElement, enumerate_elements, from_word, longest_element
from .bruhat import BruhatInterval, bruhat_leq, lower_interval
from .orbits import ClassificationRecord, classify, classify_all, summarize

__all__ = [
    "FlagOrbitError",
    "CartanDatum",
    "RootSystem",
    "Weight",
    "build_root_system",
    "parse_cartan_datum",
    "CoxeterElement",
    "enumerate_elements",
    "from_word",
    "longest_element",
    "BruhatInterval",
    "bruhat_leq",
    "lower_interval",
    "ClassificationRecord",
    "classify",
    "classify_all",
    "summarize",
]
