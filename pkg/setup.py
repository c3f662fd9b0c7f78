#!/usr/bin/env python
from setuptools import find_packages, setup


def read_file(filename):
    try:
        return open(filename, "r").read()
    except IOError:
        return ""


setup(
    name="qextremal",
    description="Desk-scale verification of signless Laplacian spectral extremal results for trees",
    long_description=read_file("README.rst"),
    classifiers=[
        "Development Status :: 4 - Beta",
        "Environment :: Console",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Natural Language :: English",
        "Operating System :: POSIX :: Linux",
        "Operating System :: MacOS :: MacOS X",
        "Operating System :: Microsoft :: Windows",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "Programming Language :: Python :: Implementation :: CPython",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    license="MIT",
    keywords="graph theory spectral radius signless laplacian trees extremal",
    platforms="POSIX",
    packages=find_packages(
        exclude=[
            "*.tests",
            "*.tests.*",
            "tests.*",
            "tests",
        ]
    ),
    entry_points={
        "console_scripts": [
            "qextremal=qextremal.main:main",
        ]
    },
    zip_safe=True,
    python_requires=">=3.8",
    install_requires=[
        "numpy>=1.20",
        "scipy>=1.6",
        "networkx>=2.6",
    ],
    use_scm_version={
        "write_to": "qextremal/version.py",
        "fallback_version": "0.1.0",
    },
    setup_requires=[
        "setuptools_scm"
    ],
    extras_require={"test": ["pytest", "pytest-cov", "pytest-timeout"]},
)
