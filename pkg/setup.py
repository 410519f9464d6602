"""Build script for the compiled lane.

Regenerates the four unrolled network C units (one compilation unit per
ordering family) before compiling, then builds the `netsort._native`
extension from the hand-written core plus the generated units.
"""

import sys
from pathlib import Path

from setuptools import setup
from setuptools.extension import Extension

ROOT = Path(__file__).resolve().parent
sys.path.insert(0, str(ROOT / "src"))
sys.path.insert(0, str(ROOT / "tools"))

import numpy as np
from Cython.Build import cythonize

from gen_sorters import write_c_units

CSRC = ROOT / "src" / "netsort" / "csrc"
GEN_DIR = CSRC / "gen"
write_c_units(GEN_DIR)

sources = ["src/netsort/_native.pyx", "src/netsort/csrc/netsort_core.c"]
sources += sorted(
    str(p.relative_to(ROOT)) for p in GEN_DIR.glob("netsort_nets_*.c"))

extension = Extension(
    "netsort._native",
    sources=sources,
    include_dirs=[str(CSRC), str(GEN_DIR), np.get_include()],
    define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    extra_compile_args=["-O3"],
)

setup(ext_modules=cythonize([extension], language_level=3))
