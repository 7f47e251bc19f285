"""Build hook for the optional compiled kernel.

The package works without it: ``hodgejac.linalg`` falls back to a numpy
implementation when ``_kernels`` cannot be imported.
"""
import os

from setuptools import setup

ext_modules = []
if not os.environ.get("HODGEJAC_NO_EXT"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "hodgejac.linalg._kernels",
                    ["src/hodgejac/linalg/_kernels.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
