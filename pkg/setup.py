from setuptools import setup, find_packages

with open('README.md') as readme_file:
    readme = readme_file.read()

with open('HISTORY.rst') as history_file:
    history = history_file.read().replace('.. :changelog:', '')

with open("requirements.txt") as req_file:
    requirements = list(filter(None, req_file.read().split("\n")))

__version__ = None
with open("matspec/version.py") as version_file:
    exec(version_file.read())
if __version__ is None:
    raise ValueError("Did not find __version__ in version.py file.")

setup(
    name='matspec',
    version=__version__,
    description='Matrix special functions (Gamma, Beta, pFq, Bateman and Young matrix functions) '
                'with a numerical verification harness for their identities.',
    long_description=readme + "\n\n" + history,
    long_description_content_type='text/markdown',
    license="LICENSE.txt",
    packages=find_packages(exclude=["tests", "tests.*"]),
    package_dir={'matspec':
                 'matspec'},
    package_data={'matspec': ['bin/defaults/*.yaml']},
    include_package_data=True,
    entry_points={
       'console_scripts': [
           'matspec=matspec.bin.matspec:entry_func',
       ],
    },
    install_requires=requirements,
    extras_require={"test": ["pytest>=7.0", "hypothesis>=6.0"]},
    python_requires=">=3.8",
    classifiers=['Environment :: Console',
                 'Operating System :: POSIX',
                 'Programming Language :: Python :: 3.8',
                 'Programming Language :: Python :: 3.9',
                 'Programming Language :: Python :: 3.10',
                 'Topic :: Scientific/Engineering :: Mathematics',
                 'License :: OSI Approved :: MIT License']
)
