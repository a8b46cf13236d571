#include <pybind11/pybind11.h>
PYBIND11_MODULE(tanaka_forge_py, m) { m.doc() = "stub"; }
