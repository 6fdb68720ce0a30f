from setuptools import setup, find_packages

setup(
    name="bergman_spaces",
    version="0.1.0",
    packages=find_packages(exclude=["tests", "tests.*"]),
    install_requires=[
        "numpy>=1.20",
        "scipy>=1.7",
    ],
    extras_require={
        "test": [
            "pytest",
            "hypothesis",
        ],
    },
    entry_points={
        "console_scripts": [
            "bergman=bergman_spaces.cli.main:main",
        ],
    },
    python_requires=">=3.8",
    description="Numerical characterizations of weighted Bergman spaces on the unit ball",
)
