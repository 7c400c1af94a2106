from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "cubalg._speedups",
                ["src/cubalg/_speedups.pyx"],
                language="c++",
                extra_compile_args=["-O3", "-std=c++17"],
                optional=True,
            )
        ],
        language_level=3,
    )
except ImportError:
    # No Cython: the pure-Python kernel is used instead.
    extensions = []

setup(ext_modules=extensions)
