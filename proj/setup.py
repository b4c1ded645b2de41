import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        out_dir = Path(self.get_ext_fullpath(ext.name)).parent.resolve()
        build_dir = Path(self.build_temp).resolve()
        src_dir = Path(__file__).parent.resolve()
        subprocess.check_call([
            "cmake", "-S", str(src_dir), "-B", str(build_dir),
            f"-DPython3_EXECUTABLE={sys.executable}",
            f"-DCMAKE_LIBRARY_OUTPUT_DIRECTORY={out_dir}",
            "-DCMAKE_BUILD_TYPE=Release",
        ])
        subprocess.check_call([
            "cmake", "--build", str(build_dir), "--target", "_pgsynth",
            "--parallel",
        ])


setup(
    ext_modules=[CMakeExtension("pgsynth._pgsynth")],
    cmdclass={"build_ext": CMakeBuild},
)
