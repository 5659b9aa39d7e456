from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # Pure-python install: the package falls back to the numpy backend.
    ext_modules = []
else:
    extensions = [
        Extension(
            "ssimeghs.kernels._native",
            ["src/ssimeghs/kernels/_native.pyx"],
            # -ffp-contract=off keeps the compiled kernels bit-identical to
            # the numpy backend (no FMA contraction of a*b+c).
            extra_compile_args=["-O3", "-ffp-contract=off"],
        )
    ]
    ext_modules = cythonize(extensions, compiler_directives={"language_level": "3"})

setup(ext_modules=ext_modules)
