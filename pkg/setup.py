"""Build script: compiles the enumeration kernels when Cython is available.

The package is fully functional without the extension (a pure-Python
fallback with identical semantics is selected at import time), so the
build degrades gracefully on systems without a C toolchain.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension("lcdcodes._core", ["src/lcdcodes/_core.pyx"])],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
            "initializedcheck": False,
        },
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
