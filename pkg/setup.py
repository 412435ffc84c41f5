#!/usr/bin/python3
# coding=utf-8
# pylint: disable=I0011,C0103,C0301,W0702

#   Copyright 2024 stablereg authors
#
#   Licensed under the Apache License, Version 2.0 (the "License");
#   you may not use this file except in compliance with the License.
#   You may obtain a copy of the License at
#
#       http://www.apache.org/licenses/LICENSE-2.0
#
#   Unless required by applicable law or agreed to in writing, software
#   distributed under the License is distributed on an "AS IS" BASIS,
#   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#   See the License for the specific language governing permissions and
#   limitations under the License.

"""
    stablereg setup script
"""

import subprocess

from setuptools import setup, find_packages

with open("README.md") as f:
    long_description = f.read()

with open("requirements.txt") as f:
    required_dependencies = [
        line for line in f.read().splitlines() if line.strip() and not line.startswith("#")
    ]

version = "1.0"
try:
    tag = subprocess.check_output(
        ["git", "rev-parse", "--short", "HEAD"], stderr=subprocess.DEVNULL
    )
    version = f"{version}+git.{tag.decode('utf-8').strip()}"
except:
    pass

setup(
    name="stablereg",
    version=version,
    license="Apache License 2.0",
    description="Stable regularity partitions of finite bipartite graphs with exact verification",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=["tests", "tests.*"]),
    include_package_data=True,
    python_requires=">=3.10",
    install_requires=required_dependencies,
    extras_require={"test": ["pytest>=7.0"]},
    entry_points={"console_scripts": ["stablereg = stablereg.main:main"]},
)
