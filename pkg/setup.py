""" Usual setup file for package """
# read the contents of your README file
from pathlib import Path

from setuptools import find_packages, setup

this_directory = Path(__file__).parent
long_description = (this_directory / "README.md").read_text()
install_requires = (this_directory / "requirements.txt").read_text().splitlines()

setup(
    name="reddit_sentiment",
    version="0.1.0",
    license="MIT",
    description="Sentiment labelling and classification pipeline for Covid-related Reddit comments",
    install_requires=install_requires,
    long_description=long_description,
    long_description_content_type="text/markdown",
    include_package_data=True,
    package_data={"reddit_sentiment": ["data/*.tsv", "data/*.txt"]},
    packages=find_packages(exclude=["tests", "tests.*"]),
    entry_points={"console_scripts": ["reddit-sentiment = reddit_sentiment.cli:main"]},
)
