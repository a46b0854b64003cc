#!/usr/bin/env python3
"""
Export of engine results to external tools.
"""

from .hasse_export import to_dot, write_dot

__all__ = ["to_dot", "write_dot"]
