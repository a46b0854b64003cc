"""Test fixtures and reference data."""
