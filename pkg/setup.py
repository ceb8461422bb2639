import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("HARDYSUMS_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("hardysums.kernels._hardy", ["src/hardysums/kernels/_hardy.pyx"])],
            language_level="3",
        )
    except ImportError:
        # No Cython at build time: install the pure-Python package; the
        # numpy fallback backend is selected at import.
        ext_modules = []

setup(ext_modules=ext_modules)
