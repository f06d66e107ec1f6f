"""Build script for the optional compiled kernel.

If Cython or a C compiler is missing the package still installs and the
pure-Python kernel is used.
"""
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "h4poly._kernel._ckernel",
                ["src/h4poly/_kernel/_ckernel.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
