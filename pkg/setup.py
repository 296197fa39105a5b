#!/usr/bin/env python3
"""
Setup script for the torica package
"""

from setuptools import setup, find_packages


def read_readme():
    with open("README.md", "r", encoding="utf-8") as fh:
        return fh.read()


setup(
    name="torica",
    version="1.0.0",
    description="Toric varieties in homogeneous coordinates: fans, class groups, Cox rings and Hodge numbers of hypersurfaces",
    long_description=read_readme(),
    long_description_content_type="text/markdown",
    packages=find_packages(include=["torica", "torica.*"]),
    package_data={"torica": ["config/*.json"]},
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires=">=3.10",
    install_requires=[
        "numpy>=1.24.2",
        "pandas>=1.3.3",
        "python-json-logger>=2.0.0",
        "colorama>=0.4.6",
        "alive-progress>=3.3.0",
    ],
    extras_require={
        "dev": [
            "pytest>=6.0",
            "pytest-cov>=2.0",
            "black>=21.0",
            "flake8>=3.8",
            "mypy>=0.800",
            "sympy>=1.12",
        ],
    },
    entry_points={
        "console_scripts": [
            "torica=torica.main.main:main",
        ],
    },
)
