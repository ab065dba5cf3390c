import pathlib
from setuptools import setup
from abelian_toolkit.version import VERSION

HERE = pathlib.Path(__file__).parent

README = (HERE / 'README.md').read_text()
REQS = [xr for xr in (HERE / 'requirements.txt').read_text().split('\n') if xr]

setup(
    name='abelian-toolkit',
    version=VERSION.replace('-develop', '.dev0'),
    description='Builds finite abelian groups from modular arithmetic, classifies them and decides isomorphism',
    long_description=README,
    long_description_content_type='text/markdown',
    license='MIT',
    classifiers=[
        'License :: OSI Approved :: MIT License',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    packages=['abelian_toolkit'],
    package_data={'abelian_toolkit': ['examples/*.yaml']},
    include_package_data=True,
    python_requires='>=3.8',
    install_requires=REQS,
    entry_points={
        'console_scripts': [
            'abelian-toolkit=abelian_toolkit:main',
        ]
    },
)
