"""Build script: compiles the optional Cython kernel module.

The package is fully functional without the extension (a pure-Python
fallback is selected at import time), so any failure here downgrades the
install instead of breaking it.
"""

import sys

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/dalpha/_ckernels.pyx"],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
            "initializedcheck": False,
        },
    )
except Exception as exc:  # noqa: BLE001 - any build-chain problem means "no extension"
    sys.stderr.write(f"dalpha: compiled kernels skipped ({exc}); pure-Python fallback will be used\n")

setup(ext_modules=ext_modules)
