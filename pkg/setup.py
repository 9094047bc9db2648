import setuptools

with open('README.md', 'r', encoding='utf-8') as f:
    long_description = f.read()

setuptools.setup(
    name='twistrecip',
    author='Hydra',
    author_email='navidsoleymani@ymail.com',
    description="High-precision additively twisted L-values of level-1 Hecke eigenforms and "
                "numerical verification of reciprocity for their character-twisted moments.",
    keywords='l-functions modular-forms reciprocity mpmath',
    long_description=long_description,
    long_description_content_type='text/markdown',
    url='https://github.com/navidsoleymani/twistrecip.git',
    project_urls={
        'Documentation': 'https://github.com/navidsoleymani/twistrecip.git',
        'Bug Reports':
            'https://github.com/navidsoleymani/twistrecip.git/issues',
        'Source Code': 'https://github.com/navidsoleymani/twistrecip.git',
    },
    package_dir={'': 'src'},
    packages=setuptools.find_packages(where='src'),
    classifiers=[
        'Development Status :: 4 - Beta',

        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',

        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Programming Language :: Python :: 3 :: Only',
        'License :: OSI Approved :: MIT License',
        'Operating System :: OS Independent',
    ],
    python_requires='>=3.10',
    install_requires=[
        'pydantic>=2',
        'mpmath>=1.3',
        'sympy',
    ],
    extras_require={
        'test': [
            'pytest',
            'hypothesis',
        ],
    },
    entry_points={
        'console_scripts': [
            'twistrecip=twistrecip.cli:main',
        ],
    },
)
