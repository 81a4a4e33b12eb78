"""Build script: compiles the optional fast kernel extension.

The package works without the extension (a pure-Python twin is selected at
import time), so a failed compile only costs speed.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/identikit/_kernels/_native.pyx"],
        compiler_directives={"language_level": "3", "boundscheck": False, "wraparound": False},
    )
except Exception as exc:  # pragma: no cover - toolchain-dependent
    print(f"identikit: building without the compiled kernel ({exc})")
    ext_modules = []

setup(ext_modules=ext_modules)
