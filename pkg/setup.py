# -*- coding: utf-8 -*-
"""
setup.py - Landscape-Atlas
Created by NCagle
2025-02-03
      _
   __(.)<
~~~⋱___)~~~

Exhaustive inventory of low-dimensional pseudo-Boolean rank landscapes:
counting, classification under hypercube automorphisms, topological
properties and exact hill-climber performance.
"""

from setuptools import setup, find_packages

_ = setup(
    name="landscape_atlas",
    version="0.1.0",
    packages=find_packages(where="src"),
    package_dir={"": "src"},
    python_requires=">=3.8",
    install_requires=[
        "numpy>=1.24.0",        # Vectorized canonicalization and simulation
        "networkx>=3.0",        # Neutral network components
        "tqdm>=4.65.0",         # Progress bars for long enumerations
    ],
    extras_require={
        "dev": [
            "pytest>=7.0.0",
            "pytest-cov>=4.1.0",
            "pytest-mock>=3.12.0",
            "pytest-xdist>=3.5.0",
            "pylint>=2.17.0",
            "black>=23.0.0",
            "mypy>=1.0.0",
        ],
    },
    entry_points={
        "console_scripts": [
            "landscape-atlas=landscape_atlas.main:run",
        ],
    },
    author="Jaynathias",
    # author_email="nope@example.com",
    description="An atlas of invariant pseudo-Boolean landscape classes",
    long_description=open("README.md").read(),
    long_description_content_type="text/markdown",
    url="https://github.com/ncagle/Landscape-Atlas",
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
    ],
)
