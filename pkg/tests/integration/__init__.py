"""Integration tests for the flagorbit command line."""
