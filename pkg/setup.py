"""Build script: compiles the optional monomial kernel extension.

The engine is pure Python; the extension only accelerates exponent-tuple
arithmetic. If Cython or a C compiler is missing, the build falls back to
the pure implementation selected at import time in syzal._kernel.
"""
import sys

from setuptools import setup, Extension
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    # A failed extension build must not fail the install.
    def run(self):
        try:
            super().run()
        except Exception as exc:
            print(f"warning: extension build skipped ({exc}); using pure-Python kernel",
                  file=sys.stderr)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: building {ext.name} failed ({exc}); using pure-Python kernel",
                  file=sys.stderr)


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    return cythonize(
        [Extension("syzal._kernel_c", ["src/syzal/_kernel_c.pyx"])],
        language_level=3,
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
