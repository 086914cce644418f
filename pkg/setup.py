#!/usr/bin/env python

import re

from setuptools import setup
from setuptools import find_packages


version = None
with open('fedmcsa/__init__.py', 'r') as f:
    for line in f:
        m = re.match(r'^__version__\s*=\s*(["\'])([^"\']+)\1', line)
        if m:
            version = m.group(2)
            break

if not version:
    raise Exception(
        'Could not determine version number from fedmcsa/__init__.py'
    )


with open('README.rst') as f:
    long_description = f.read()

setup(
    name='fedmcsa',
    version=version,
    description=(
        'Personalized federated learning with model components '
        'self-attention.'
    ),
    long_description=long_description,
    packages=find_packages(exclude=('tests', 'tests.*')),
    license='MIT',
    python_requires='>=3.8',
    install_requires=['numpy>=1.17', 'ply'],
    tests_require=['pytest', 'pytest-benchmark'],
    entry_points={
        'console_scripts': ['fedmcsa = fedmcsa.cli:main'],
    },
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Artificial Intelligence',
    ],
)
