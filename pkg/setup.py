from setuptools import setup, find_packages
from vsheet import __version__


with open('README.md', 'r', encoding='utf-8') as f:
    readme = f.read()

setup(
    name='vortex-sheets',
    description='Vortex sheets on surfaces of revolution: dynamics, curvatures and invariants',
    long_description=readme,
    long_description_content_type='text/markdown',
    version=__version__,
    packages=find_packages(exclude=['tests']),
    package_data={'vsheet': ['data/*.yaml']},
    install_requires=[
        'Click>=8',
        'numpy>=1.20',
        'tqdm',
        'pyyaml',
    ],
    extras_require={
        'tests': ['pytest', 'hypothesis'],
    },
    python_requires=">=3.8",
    entry_points='''
        [console_scripts]
        vsheet=vsheet.cli:cli
    ''',
)
