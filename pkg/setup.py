"""Build script: compiles the optional row-reduction extension when Cython is present.

The package is fully functional without the extension (pure-Python fallback
in hopfind._kernel_py); the extension only speeds up the hot elimination
loops.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/hopfind/_kernel_c.pyx"],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
