"""Build script: compiles the optional counting extension.

The package works without the extension (a pure-Python kernel is used
instead), so any failure to cythonize or compile downgrades to a warning
rather than aborting the install.  Set THREECOLOR_NO_EXT=1 to skip the
extension build entirely.
"""

import os
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """build_ext that treats compiler failures as non-fatal."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(
            "WARNING: building the threecolor._fastcount extension failed "
            f"({exc}); falling back to the pure-Python kernel.",
            file=sys.stderr,
        )


def _extensions():
    if os.environ.get("THREECOLOR_NO_EXT"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        print(
            "WARNING: Cython not available; installing without the "
            "compiled counting kernel.",
            file=sys.stderr,
        )
        return []
    return cythonize(
        [Extension("threecolor._fastcount", ["src/threecolor/_fastcount.pyx"])],
        language_level="3",
    )


setup(
    ext_modules=_extensions(),
    cmdclass={"build_ext": optional_build_ext},
)
