"""
cydyn setup.py
"""

from setuptools import setup, find_packages
from pathlib import Path
import re

description = 'cydyn is an exact-arithmetic toolkit for the dynamics of birational maps of \
Calabi-Yau threefolds: intersection forms, translation maps, dynamical degrees and primitivity.'

root = Path(__file__).parent.resolve()

init_path = root / 'cydyn' / '__init__.py'
with init_path.open('r', encoding='utf8') as f:
    __version__ = re.findall("__version__ = '(.*)'", f.read())[0]

requires_path = root / 'requirements.txt'
with requires_path.open('r', encoding='utf8') as f:
    install_requires = [line.strip() for line in f if line.strip()]

readme_path = root / 'README.md'
with readme_path.open('r', encoding='utf-8') as f:
    long_description = f.read()

setup_requires = ['pytest-runner']
tests_require = ['pytest', 'pytest-cov', 'sympy']

entry_points = {
    'console_scripts': [
        'cydyn = cydyn.scripts.run:cydyn_main',
    ]
}

setup(
    name='cydyn',
    version=__version__,
    description=description,
    long_description=long_description,
    long_description_content_type='text/markdown',
    license='MIT',
    keywords=[
        'calabi-yau',
        'birational geometry',
        'dynamical degree',
        'exact arithmetic',
        'intersection theory',
    ],
    classifiers=[
        'License :: OSI Approved :: MIT License',
        'Programming Language :: Python :: 3',
        'Operating System :: OS Independent',
        'Topic :: Scientific/Engineering',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    python_requires='>=3.8',
    install_requires=install_requires,
    setup_requires=setup_requires,
    tests_require=tests_require,
    extras_require={'test': tests_require},
    entry_points=entry_points,
    include_package_data=True,
    package_data={'cydyn': ['resources/*.cfg']},
    packages=find_packages(
        exclude=['tests.*', 'tests']
    ),
)
