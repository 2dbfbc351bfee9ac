"""Build the optional Cython kernel; the package works without it."""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("ZXKIT_NO_EXT") != "1":
    try:
        import numpy
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("zxkit._gf2", ["src/zxkit/_gf2.pyx"], include_dirs=[numpy.get_include()],
                       define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")])],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
