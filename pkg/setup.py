"""Build script for the optional Cython kernels.

The package works without a compiler: if the extension cannot be built,
``consensus_limits._kernels`` falls back to the numpy implementation.
"""
import os
import sys

from setuptools import setup

ext_modules = []
if not os.environ.get("CONSENSUS_LIMITS_NO_EXT"):
    try:
        import numpy as np
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "consensus_limits._kernels._ext",
                    sources=["src/consensus_limits/_kernels/_ext.pyx"],
                    include_dirs=[np.get_include()],
                    extra_compile_args=["-O3"],
                    define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except Exception as exc:  # pragma: no cover - build environment dependent
        print(f"warning: skipping Cython extension ({exc})", file=sys.stderr)
        ext_modules = []

setup(ext_modules=ext_modules)
