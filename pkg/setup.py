from setuptools import find_namespace_packages, setup


setup(
    name="tracehankel",
    version="0.1",
    packages=find_namespace_packages(include=["src", "src.*"]),
    python_requires=">=3.9",
    install_requires=[
        "pydantic>=2.5.0",
        "python-dotenv>=1.0.0",
    ],
    extras_require={
        "dev": ["pytest>=7.4.0", "hypothesis>=6.90.0", "ruff>=0.1.9", "pylint>=3.0.0"],
    },
    entry_points={"console_scripts": ["tracehankel=src.cli:main"]},
)
