#!/usr/bin/env python3
"""
Setup script for flagorbit
"""

from setuptools import setup, find_packages
from pathlib import Path

# Read the README file
long_description = (Path(__file__).parent / "README.md").read_text()

setup(
    name="flagorbit",
    version="1.0.0",
    description="Weyl group, Bruhat order and Schubert smoothness engine for orbits on complex flag spaces",
    long_description=long_description,
    long_description_content_type="text/markdown",
    author="flagorbit developers",
    author_email="noreply@example.com",
    packages=find_packages(where="src"),
    package_dir={"": "src"},
    py_modules=["cli"],
    python_requires=">=3.8",
    install_requires=[
        "rich>=13.0.0",                   # Terminal tables and the stderr log handler
        "click>=8.0.0",                   # CLI argument parsing
        "pydantic>=2.0.0",                # Configuration and cache payload validation
        "orjson>=3.9.0",                  # Deterministic JSON output and cache files
        "networkx>=3.0",                  # Hasse diagram graph model
    ],
    extras_require={
        # Development dependencies
        "dev": [
            "pytest>=7.0.0",
            "pytest-cov>=4.0.0",
            "pytest-mock>=3.10.0",
            "black>=22.0.0",
            "flake8>=4.0.0",
            "flake8-docstrings>=1.7.0",
        ],

        # Testing only
        "test": [
            "pytest>=7.0.0",
            "pytest-cov>=4.0.0",
            "pytest-mock>=3.10.0",
        ],
    },
    entry_points={
        "console_scripts": [
            "flagorbit=cli:main",
        ],
    },
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    keywords=[
        "weyl-group", "coxeter", "bruhat-order", "schubert-variety", "flag-variety",
        "root-system", "representation-theory", "combinatorics"
    ],
)
