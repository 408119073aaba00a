"""Build script: compiles the optional crossing-scan extension.

The package works without the extension (a pure-Python backend is
selected at import time), so a failed compile only costs speed.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/planarspan/_kernels/_fast.pyx"],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - build environment dependent
    print(f"planarspan: building without compiled kernels ({exc})")

setup(ext_modules=ext_modules)
