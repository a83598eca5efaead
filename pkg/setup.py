from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/chowprod/lattice/_speedups.pyx"],
        compiler_directives={"language_level": "3"},
    )
except Exception:
    # pure-Python fallback is selected at import time
    pass

setup(ext_modules=ext_modules)
