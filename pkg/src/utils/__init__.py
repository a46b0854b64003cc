#!/usr/bin/env python3
"""
Utility modules: the on-disk interval cache and record formatting.
"""

from .interval_cache import IntervalCache
from .formatting import render_records

__all__ = ["IntervalCache", "render_records"]
