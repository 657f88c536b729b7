"""Build script for the optional compiled kernel module.

The Cython extension is skipped when Cython is not importable; the package
then runs on its numpy fallback.
"""
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "bsvanish._kernels",
                ["src/bsvanish/_kernels.pyx"],
                extra_compile_args=["-O3", "-fcx-limited-range"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
