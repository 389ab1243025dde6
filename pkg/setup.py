import os

from setuptools import setup, find_packages

with open(os.path.join(os.path.dirname(__file__), "capfair/VERSION"), "r") as fh:
    __version__ = fh.read().strip()


install_requires = [
    "blinker",
    "decorator",
    "more-itertools",
    "numpy",
    "nltk",
]


setup(
    name="capfair",
    version=__version__,
    scripts=["bin/capfair"],
    description="Gender fairness toolkit for image caption corpora",
    long_description="capfair splits MSCOCO-style caption corpora into gender-confident, human and nature "
    "subsets, neutralizes and recombines gender words in captions, and scores candidate captions and "
    "gender predictions with caption metrics and co-occurrence bias tables.",
    license="GPL v3",
    install_requires=install_requires,
    extras_require={
        "test": [
            "ipython",
            "black",
            "pytest",
            "pytest-timeout",
            "pytest-xdist",
        ]
    },
    packages=find_packages(exclude=["examples", "examples.*"]),
    include_package_data=True,
    package_data={"capfair": ["VERSION", "test/data/*"]},
    classifiers=[
        "Programming Language :: Python :: 3.7",
        "Programming Language :: Python :: 3.8",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: GNU General Public License v3 (GPLv3)",
        "Operating System :: POSIX",
        "Programming Language :: Python",
        "Topic :: Scientific/Engineering :: Artificial Intelligence",
        "Topic :: Text Processing :: Linguistic",
    ],
    keywords="image captioning fairness gender bias mscoco bleu cider meteor rouge evaluation",
)
