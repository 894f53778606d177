"""Build the qwalk._qwalk extension straight from the C++ sources with
pybind11's setuptools helpers (no CMake needed for the wheel)."""

from glob import glob

from pybind11.setup_helpers import ParallelCompile, Pybind11Extension, build_ext
from setuptools import setup

ParallelCompile("NPY_NUM_BUILD_JOBS").install()

ext = Pybind11Extension(
    "qwalk._qwalk",
    sorted(glob("src/*.cpp")) + ["python/bindings.cpp"],
    include_dirs=["include"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
