"""Setup script for hypersum."""
from setuptools import find_packages, setup

import hypersum

setup(name='hypersum',
      version=hypersum.__version__,
      description='Exact evaluation of hypergeometric series, Gosper summation with certificates '
                  'and machine verification of a strange 2F1 evaluation.',
      long_description=open('README.md', encoding='utf-8').read(),
      long_description_content_type='text/markdown',
      classifiers=[
            'License :: OSI Approved :: GNU General Public License v3 or later (GPLv3+)',
            'Topic :: Scientific/Engineering :: Mathematics',
      ],
      python_requires='>=3.8',
      packages=find_packages(),
      include_package_data=True,
      install_requires=open('requirements.txt').read().splitlines(),
      extras_require={'quality': ['isort', 'flake8', 'pydocstyle', 'mypy'],
                      'tests': ['hypothesis']},
      entry_points={'console_scripts': ['hypersum = hypersum.__main__:main']})
