from os import path

from setuptools import find_packages, setup

here = path.abspath(path.dirname(__file__))
with open(path.join(here, 'README.md'), encoding='utf-8') as f:
    long_description = f.read()

setup(
    name='DioTorsion',
    version='0.1.0',
    description='Exact elliptic curves with large torsion over quadratic fields from Diophantine triples',
    long_description=long_description,
    long_description_content_type='text/markdown',
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',
        'License :: OSI Approved :: MIT License',
        'Programming Language :: Python :: 3.9',
    ],
    keywords='elliptic curves torsion diophantine triples quadratic fields',
    packages=find_packages(exclude=['docs', 'tests']),
    python_requires='>=3.9, <4',
    install_requires=['gmpy2',
                      'pandas',
                      'sqlalchemy>=1.4',
                      'sympy',
                      'tqdm',
                      ],
    extras_require={
        'test': ['hypothesis'],
    },
    package_data={
        'DioTorsion': ['data/*.json', 'data/corpus/*.json'],
    },
    entry_points={
        'console_scripts': [
            'diotorsion=DioTorsion.cli:main',
        ],
    },
)
