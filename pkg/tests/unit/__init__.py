"""Unit tests for flagorbit."""
