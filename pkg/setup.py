"""Install package."""
import os
from setuptools import setup, find_packages

if os.path.exists('README.md'):
    long_description = open('README.md').read()
else:
    long_description = '''Minimal Engel sinks of finite permutation groups.'''

setup(
    name='engel_sinks',
    version='0.1.0',
    license='MIT',
    description=(
        'Minimal left and right Engel sinks of elements and automorphisms '
        'of finite groups.'
    ),
    long_description=long_description,
    long_description_content_type='text/markdown',
    install_requires=['numpy', 'torch', 'sympy', 'tqdm'],
    extras_require={
        'plot': ['matplotlib', 'seaborn'],
        'test': ['pytest', 'hypothesis'],
    },
    entry_points={
        'console_scripts': ['engel-sinks=engel_sinks.cli:main'],
    },
    python_requires='>=3.8',
    keywords=['group theory', 'Engel sink', 'permutation group', 'PyTorch'],
    packages=find_packages('.', exclude=['examples', 'examples.*']),
    zip_safe=False,
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',
        'License :: OSI Approved :: MIT License',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
    ],
)
