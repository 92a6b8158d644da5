"""Build script: compiles the optional accelerated kernel when Cython is present.

The package is fully functional without the extension; `nilchar.kernels`
falls back to the pure-Python implementation at import time.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize
    from setuptools import Extension

    extensions = cythonize(
        [Extension("nilchar._kernels", ["src/nilchar/_kernels.pyx"])],
        language_level=3,
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
