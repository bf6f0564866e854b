import re

from setuptools import find_packages, setup


DIST_NAME = "equidim"

with open("equidim/version.py") as f:
    txt = f.read()
    try:
        version = re.findall(r'^__version__ = "([^"]+)"\r?$', txt, re.M)[0]
    except IndexError:
        raise RuntimeError("Unable to determine version.")


setup(
    name=DIST_NAME,
    version=version,
    python_requires=">=3.10.0",
    packages=find_packages(exclude=["tests", "tests.*"]),
    install_requires=[
        "click>=8.0",
        "toml>=0.10.0",
        "pyyaml>=3.0",
        "networkx>=3.0",
    ],
    entry_points={
        "console_scripts": [f"{DIST_NAME}={DIST_NAME}:main"],
    },
    zip_safe=False,
    include_package_data=True,
)
