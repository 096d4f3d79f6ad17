#!/usr/bin/env python3
from setuptools import setup

from boolskel import __author__, __email__, __version__

with open("README.md", "r") as fh:
    long_description = fh.read()

setup(name='boolskel',
      version=__version__,
      description='Skeletonization of Boolean networks into coarse dependency graphs',
      long_description=long_description,
      long_description_content_type='text/markdown; charset=UTF-8',
      author=__author__,
      author_email=__email__,
      packages=['boolskel', 'boolskel.formats', 'boolskel.tests'],
      include_package_data=True,
      zip_safe=False,
      license='BSD',
      python_requires='>=3.8',
      install_requires=[
          'networkx>=2.6',
          'pydot>=1.4',
          'bitarray>=2.3',
          'numpy>=1.20',
      ],
      extras_require={
          'tests': ['hypothesis>=6.0'],
      },
      tests_require=['hypothesis>=6.0'],
      entry_points={
          'console_scripts': ['boolskel=boolskel.cli:main'],
      },
      classifiers=[
          "Programming Language :: Python :: 3",
          "Programming Language :: Python :: 3.8",
          "Programming Language :: Python :: 3.9",
          "Programming Language :: Python :: 3.10",
          "Operating System :: OS Independent",
      ])
