"""
Test suite for flagorbit.

This package contains unit tests, integration tests, and test fixtures
for the orbit classification engine and its command line.
"""
