from setuptools import Extension, setup

# Optional: without a compiler the pure-Python long division is used.
setup(ext_modules=[Extension("repetend._longdiv", ["src/repetend/_longdiv.c"], optional=True)])
