"""Build script: compiles the minimal-L1 solver kernel as a C extension.

The extension is optional.  If Cython is unavailable (or the build is
disabled via COPRIMETRIC_PURE_BUILD=1) the package installs without it and
falls back to the pure-Python kernel at import time.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("COPRIMETRIC_PURE_BUILD"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "coprimetric._minl1_cy",
                    ["src/coprimetric/_minl1_cy.pyx"],
                    extra_compile_args=["-O2"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
