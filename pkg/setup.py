import setuptools


setuptools.setup(
    name='s_eulerian',
    version='0.1.0',
    description='Exact s-Eulerian polynomials, real-rootedness certificates'
                ' and enumeration oracles.',
    packages=setuptools.find_packages(),
    include_package_data=True,
    python_requires='>=3.8',
    install_requires=[
        'numpy>=1.10',
        'pdoc3>=0.9.1',
        'sympy>=1.7'
    ],
    extras_require={
        'test': [
            'hypothesis>=6.0'
        ]
    },
    entry_points={
        'console_scripts': ['s-eulerian=s_eulerian.cli:run']
    }
)
