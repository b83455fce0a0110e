"""Build script: compiles the optional counting kernel when Cython is available.

Plain `pip install .` without Cython produces a pure-Python install; the
package falls back to the interpreted counter at import time.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    extensions = [
        Extension(
            "colorpartitions._speedups",
            ["src/colorpartitions/_speedups.pyx"],
        )
    ]
    ext_modules = cythonize(extensions, compiler_directives={"language_level": "3"})

setup(ext_modules=ext_modules)
