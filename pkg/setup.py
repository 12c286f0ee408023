"""Build hook for the optional compiled kernel.

The package is pure Python except for carryideals._modpc, a small dense
linear-algebra kernel over prime fields. The extension is built from the
checked-in generated C file (or regenerated from the .pyx when Cython is
installed); if no C compiler is available the build still succeeds and the
package falls back to the pure-Python kernel at import time.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:
            print(f"warning: could not build the compiled kernel ({exc}); "
                  "the pure-Python fallback will be used")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: skipping {ext.name} ({exc}); "
                  "the pure-Python fallback will be used")


PYX = os.path.join("src", "carryideals", "_modpc.pyx")
C = os.path.join("src", "carryideals", "_modpc.c")

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("carryideals._modpc", [PYX])], language_level="3"
    )
except ImportError:
    if os.path.exists(C):
        ext_modules = [Extension("carryideals._modpc", [C])]

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
