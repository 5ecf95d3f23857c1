"""Build script: compiles the optional sweep kernel when Cython is available.

The package is fully functional without the extension (a pure-Python twin is
selected at import time); build it with

    python setup.py build_ext --inplace
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "schroeder._kernels._csweeps",
                ["src/schroeder/_kernels/_csweeps.pyx"],
                extra_compile_args=["-O2"],
            )
        ],
        compiler_directives={"language_level": "3"},
        quiet=True,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
