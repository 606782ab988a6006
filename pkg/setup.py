#!/usr/bin/env python

from setuptools import setup

setup(name = 'HopfTransverse',
      version = '0.1.0',
      description = 'Exact computations in the Hopf algebra H(1) of transverse '
                    'geometry, its bicrossed relatives and their cyclic '
                    'cohomology.',
      py_modules = ['Kernel', 'HopfH1', 'Enveloping', 'Diffeo', 'MatchedPair',
                    'HopfCyclic', 'LieCohomology', 'FormalCalculus',
                    'Experiment', 'Utility', 'hopf'],
      install_requires = ['numpy', 'scipy', 'sympy'],
      extras_require = {'test': ['pytest', 'hypothesis']},
      entry_points = {'console_scripts': ['hopf = hopf:main']},
      )
