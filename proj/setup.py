import subprocess

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup


def pkg_config_includes(pkg, fallback):
    try:
        out = subprocess.run(
            ["pkg-config", "--cflags-only-I", pkg],
            capture_output=True,
            text=True,
            check=True,
        ).stdout.split()
        dirs = [tok[2:] for tok in out if tok.startswith("-I")]
        if dirs:
            return dirs
    except (OSError, subprocess.CalledProcessError):
        pass
    return [fallback]


sources = [
    "src/raster.cpp",
    "src/dataset.cpp",
    "src/wavelet.cpp",
    "src/eco_indices.cpp",
    "src/taxo_indices.cpp",
    "src/pipeline.cpp",
    "src/eval.cpp",
    "src/feature_csv.cpp",
    "src/app.cpp",
    "bindings/module.cpp",
]

ext = Pybind11Extension(
    "bitw._core",
    sources=sources,
    include_dirs=["include", "vendor"]
    + pkg_config_includes("eigen3", "/usr/include/eigen3")
    + pkg_config_includes("opencv4", "/usr/include/opencv4"),
    libraries=["opencv_core", "opencv_imgcodecs"],
    cxx_std=20,
)

setup(
    packages=["bitw"],
    package_dir={"bitw": "python/bitw"},
    ext_modules=[ext],
    cmdclass={"build_ext": build_ext},
)
