"""Build script: compiles the optional scalar-arithmetic extension.

The package is fully functional without the extension (a pure-Python twin
is selected at import time), so the build must never fail because Cython
or a C compiler is missing.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("HOPFFACTOR_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "hopffactor._scalar_cy",
                    ["src/hopffactor/_scalar_cy.pyx"],
                    optional=True,
                )
            ],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
