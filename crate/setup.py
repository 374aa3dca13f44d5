"""Builds the `iugraph` Python extension by delegating to cargo.

The extension lives in crates/iugraph-py (a cdylib); this shim compiles it
in release mode and copies the shared object to wherever setuptools expects
the module, so `pip install -e . --no-build-isolation` works without any
Rust-specific build backend.
"""

import shutil
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext

ROOT = Path(__file__).resolve().parent


class CargoExtension(Extension):
    def __init__(self, name: str, package: str):
        super().__init__(name, sources=[])
        self.package = package


class CargoBuildExt(build_ext):
    def build_extension(self, ext: CargoExtension) -> None:
        subprocess.run(
            ["cargo", "build", "--release", "-p", ext.package],
            cwd=ROOT,
            check=True,
        )
        lib_name = ext.package.replace("-", "_")
        suffix = "dylib" if sys.platform == "darwin" else "so"
        built = ROOT / "target" / "release" / f"lib{lib_name}.{suffix}"
        if not built.exists():
            raise FileNotFoundError(f"cargo did not produce {built}")
        dest = Path(self.get_ext_fullpath(ext.name))
        dest.parent.mkdir(parents=True, exist_ok=True)
        shutil.copyfile(built, dest)


setup(
    ext_modules=[CargoExtension("iugraph", "iugraph-py")],
    cmdclass={"build_ext": CargoBuildExt},
)
