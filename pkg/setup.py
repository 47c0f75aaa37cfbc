"""Builds the optional compiled position-selection kernel.

The package works without it (a pure-Python twin is selected at import
time), so a missing compiler or Cython only costs speed, never a failed
install.  -ffp-contract=off keeps the keystream arithmetic bit-identical
to CPython floats: no FMA contraction, plain IEEE-754 doubles.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext
from setuptools.errors import CCompilerError, ExecError, PlatformError

_BUILD_ERRORS = (CCompilerError, ExecError, PlatformError, FileNotFoundError)


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except _BUILD_ERRORS as exc:
            _warn_skipped(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except _BUILD_ERRORS as exc:
            _warn_skipped(exc)


def _warn_skipped(exc):
    print(f"WARNING: compiled kernel not built ({exc}); "
          "falling back to the pure-Python kernel")


def _extensions():
    if os.environ.get("FRAGILETAG_NO_EXT"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        _warn_skipped("Cython not installed")
        return []
    ext = Extension(
        "fragiletag._select_c",
        ["src/fragiletag/_select_c.pyx"],
        extra_compile_args=["-O2", "-ffp-contract=off"],
    )
    return cythonize([ext], compiler_directives={"language_level": "3"})


setup(ext_modules=_extensions(), cmdclass={"build_ext": OptionalBuildExt})
