"""
Build script for pyOperadic.
"""

from setuptools import setup, find_packages

DISTNAME = "pyOperadic"
LICENSE = "BSD-2"
AUTHOR = "pyOperadic developers"
AUTHOR_EMAIL = ""
DESCRIPTION = (
    "Exact computer algebra for binary quadratic regular operads with a splitting of associativity: "
    "unit actions, classification, black-square products and Koszul duals."
)

setup(
    name=DISTNAME,
    version="0.1.0",
    license=LICENSE,
    description=DESCRIPTION,
    author=AUTHOR,
    author_email=AUTHOR_EMAIL,
    packages=find_packages(where="src"),
    package_dir={"": "src"},
    python_requires=">=3.8",
    install_requires=[
        "numpy",
        "sympy",
        "tqdm",
        "cachetools",
    ],
    extras_require={
        "tests": ["pytest", "hypothesis"],
    },
    entry_points={
        "console_scripts": ["operadic = pyOperadic.cli.operadic:main"],
    },
)
