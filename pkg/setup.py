"""Build hooks: compile the state-sum kernel when Cython and a C compiler
are available, fall back to the pure-Python kernel otherwise."""

from setuptools import setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        ["src/thomplink/_bracket_core.pyx"],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
