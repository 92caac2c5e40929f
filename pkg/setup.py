#!/usr/bin/env python
from setuptools import find_packages, setup

from salmonrun import __version__


REQUIREMENTS = [
    'django>=3.2,<5.0',
    'numpy>=1.20',
]


CLASSIFIERS = [
    'Development Status :: 4 - Beta',
    'Environment :: Console',
    'Intended Audience :: Developers',
    'Intended Audience :: Science/Research',
    'License :: OSI Approved :: BSD License',
    'Operating System :: OS Independent',
    'Programming Language :: Python',
    'Programming Language :: Python :: 3',
    'Programming Language :: Python :: 3.8',
    'Programming Language :: Python :: 3.9',
    'Programming Language :: Python :: 3.10',
    'Framework :: Django',
    'Framework :: Django :: 3.2',
    'Framework :: Django :: 4.0',
    'Framework :: Django :: 4.1',
    'Topic :: Scientific/Engineering :: Mathematics',
    'Topic :: Software Development :: Libraries',
]


setup(
    name='django-salmonrun',
    version=__version__,
    license='BSD-3-Clause',
    description='A population-based metaheuristic modelled on the salmon run, '
                'with PSO and DE baselines and a reproducible benchmark harness.',
    long_description=open('README.rst').read(),
    packages=find_packages(exclude=('tests', 'tests.*')),
    include_package_data=True,
    package_data={'salmonrun': ['plans/*.ini']},
    zip_safe=False,
    install_requires=REQUIREMENTS,
    python_requires='>=3.8',
    classifiers=CLASSIFIERS,
    entry_points={
        'console_scripts': [
            'salmonrun = salmonrun.cli:main',
        ],
    },
    test_suite='tests.settings.run',
)
