"""Build the optional compiled census kernel.

The package is fully functional without the extension: kernels.py falls back
to the pure-Python twin if the compiled module is absent or fails to import.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("fdensity._census_cy", ["src/fdensity/_census_cy.pyx"])],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
