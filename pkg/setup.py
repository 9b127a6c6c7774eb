from pathlib import Path

import setuptools

import moricone

long_description = Path("README.md").read_text()

setuptools.setup(
    name="moricone.py",
    version=moricone.__version__,
    description="Exact polyhedral cones for divisor and curve class lattices",
    long_description=long_description,
    long_description_content_type="text/markdown",
    author="Giesela Inc.",
    author_email="team@giesela.dev",
    url="https://github.com/gieseladev/moricone.py",

    packages=setuptools.find_packages(exclude=("examples", "docs", "tests")),
    package_data={"moricone": ["data/*.json"]},
    python_requires="~=3.7",

    install_requires=[
        "click",
        "lettercase",
        "networkx",
    ],
    entry_points={
        "console_scripts": ["moricone=moricone.cli:main"],
    },
)
