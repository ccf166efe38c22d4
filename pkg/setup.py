"""Build script for the compiled kernel extension.

The hot loops (raster coverage, angle-sequence edit distance, the driving
simulation step loop) live in frontier/_kernels/_native.pyx. The package
falls back to the pure-Python implementations in _fallback.py when the
extension is unavailable, so a failed compile still yields a working
(slower) install.

-ffp-contract=off keeps the compiled arithmetic bit-compatible with the
pure-Python fallback (no FMA contraction), which the kernel parity tests
rely on.
"""

import numpy as np
from Cython.Build import cythonize
from setuptools import setup
from setuptools.extension import Extension

extensions = [
    Extension(
        "frontier._kernels._native",
        sources=["src/frontier/_kernels/_native.pyx"],
        include_dirs=[np.get_include()],
        extra_compile_args=["-O3", "-ffp-contract=off"],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
]

setup(
    ext_modules=cythonize(
        extensions,
        compiler_directives={"language_level": 3},
    )
)
