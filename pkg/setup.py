"""Build script.

The compiled extension is optional: if Cython or a C compiler is missing the
package installs anyway and falls back to the pure Python kernels at import
time (see altext/kernels.py).
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/altext/_speedups.pyx"],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover - build environment dependent
    print(f"warning: building without compiled kernels ({exc})")

setup(ext_modules=ext_modules)
