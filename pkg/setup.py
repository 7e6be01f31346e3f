from setuptools import find_packages, setup

with open("requirements.txt", "r") as f:
    requirements = [l.strip() for l in f.readlines() if l.strip()]

description = """Hammock is a package for computing the exact two-terminal
reliability of hammock (brick-wall) networks and checking their
duality identities."""

setup(
    name="hammock",
    description=description,
    version="0.1.0",
    packages=find_packages(exclude=["*test*", "*examples*"]),
    install_requires=requirements,
    python_requires=">=3.8",
    entry_points={"console_scripts": ["hammock=hammock.cli:main"]},
)
