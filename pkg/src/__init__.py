"""
flagorbit - orbit classification on complex flag spaces.
"""

__version__ = "1.0.0"
__author__ = "flagorbit developers"
__description__ = "Weyl group, Bruhat order and Schubert smoothness engine for flag-space orbits"
