import os

from setuptools import Extension, setup

# The compiled kernel is optional: without Cython (or with
# LAURENTMED_NO_EXT=1) the package installs pure Python and
# laurentmed.kernels falls back at import time.
ext_modules = []
if not os.environ.get("LAURENTMED_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [
                Extension(
                    "laurentmed._ckernels",
                    ["src/laurentmed/_ckernels.pyx"],
                    language="c++",
                    extra_compile_args=["-O3", "-std=c++17"],
                )
            ],
            compiler_directives={"language_level": "3", "boundscheck": False, "wraparound": False},
        )

setup(ext_modules=ext_modules)
