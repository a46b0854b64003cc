"""Unit tests for integration modules."""
