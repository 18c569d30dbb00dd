import os

from setuptools import setup

ext_modules = []
if os.environ.get("CUBICDIRAC_NO_EXT", "") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [Extension("cubicdirac._kernels", ["src/cubicdirac/_kernels.pyx"],
                       extra_compile_args=["-O3"])],
            language_level=3,
        )

setup(ext_modules=ext_modules)

# To build the extension in-place: python setup.py build_ext --inplace
