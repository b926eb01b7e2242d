from setuptools import setup
from fermatjac_lib.commands import fermatjac_entry_points

with open('requirements.txt') as f:
    requirements = f.readlines()
requirements = [i.replace('\n', '') for i in requirements]

entry_points = dict(fermatjac_entry_points)
entry_points['console_scripts'] = ['fermatjac = fermatjac_lib.cli:main']

setup(
    name='FermatJac',
    version = '0.1.0a',
    description='Root numbers, Jacobi sums and Selmer groups of Fermat-curve Jacobians.',
    install_requires = requirements,
    keywords=[
        'number theory',
        'fermat curves',
        'root numbers',
        'selmer groups'
    ],
    classifiers=[
        'License :: OSI Approved :: GNU General Public License v3 (GPLv3)',
        'Topic :: Scientific/Engineering :: Mathematics'
    ],
    packages=[
        'fermatjac_lib',
        'fermatjac_lib.core',
        'fermatjac_lib.commands',
        'fermatjac_lib.tests'
    ],
    entry_points = entry_points,
    tests_require = ['hypothesis'],
    test_suite = 'fermatjac_lib.tests'
)
