#!/usr/bin/env python3
from pathlib import Path
from typing import List

import setuptools
from setuptools import setup

this_dir = Path(__file__).parent
module_dir = this_dir / "submodule_codes"
version_path = module_dir / "VERSION"
version = version_path.read_text(encoding="utf-8").strip()


def get_requirements(req_path: Path) -> List[str]:
    if not req_path.is_file():
        return []

    requirements: List[str] = []
    with open(req_path, "r", encoding="utf-8") as req_file:
        for line in req_file:
            line = line.strip()
            if not line:
                continue

            requirements.append(line)

    return requirements


install_requires = get_requirements(this_dir / "requirements.txt")
extras_require = {
    "dev": get_requirements(this_dir / "requirements_dev.txt"),
}


# -----------------------------------------------------------------------------

setup(
    name="submodule_codes",
    version=version,
    description="Submodule codes over finite principal ideal rings",
    packages=setuptools.find_packages(exclude=["tests", "tests.*"]),
    package_data={
        "submodule_codes": [str(p.relative_to(module_dir)) for p in (version_path,)]
    },
    python_requires=">=3.9",
    install_requires=install_requires,
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    keywords="network coding submodule codes principal ideal rings",
    extras_require=extras_require,
    entry_points={
        "console_scripts": ["submodule-codes = submodule_codes.__main__:run"]
    },
)
