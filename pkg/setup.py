from setuptools import setup, find_packages

setup(
    name="vacuous_reduct_lab",
    version="0.1.0",
    description="Vacuous reduct semantics for abstract argumentation: solver, principle checker and claim verifier",
    packages=find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    py_modules=["main"],
    python_requires=">=3.10",
    install_requires=[
        "rich"
    ],
    entry_points={
        'console_scripts': [
            'vacuous-reduct=main:main',
        ],
    },
)
