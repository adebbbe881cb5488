import setuptools

setuptools.setup(
    name="latskew",
    version="1.0.0",
    description="Minimal lattice basis completions, skewness statistics and Eisenstein-type series.",
    long_description=open("README.md", encoding="utf-8").read(),
    long_description_content_type="text/markdown",
    keywords="lattice skewness equidistribution weyl-sums eisenstein-series".split(),
    packages=setuptools.find_packages(exclude=["tests", "tests.*"]),
    license="MIT",
    classifiers=[
        "Programming Language :: Python :: 3.11",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires=">=3.10",
    install_requires=["pydantic>=2.9", "loguru", "numpy>=1.26", "mpmath", "typing_extensions"],
    extras_require={"test": ["pytest"]},
    entry_points={"console_scripts": ["latskew=latskew.harness.cli:main"]}
)
