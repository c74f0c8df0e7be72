"""Build script: compiles the optional fast-kernel extension.

The extension is a performance aid only; if compilation is impossible the
package installs anyway and the pure-Python kernels are used at runtime.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/spinduct/_kernels.pyx"],
        language_level=3,
        compiler_directives={"boundscheck": False, "wraparound": False},
    )
except Exception as exc:  # no Cython / no compiler: pure fallback
    print(f"spinduct: skipping compiled kernels ({exc})")

setup(ext_modules=ext_modules)
