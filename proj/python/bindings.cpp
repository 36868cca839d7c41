#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "swlab/dispersion.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_swlab, m) {
  m.doc() = "Shallow-water wave model laboratory";
  m.def("phase_speed_ww", &swlab::phase_speed_ww, py::arg("k"), py::arg("mu"));
  m.def("phase_speed_ik", &swlab::phase_speed_ik, py::arg("k"), py::arg("mu"));
  m.def("pade22_cww2", &swlab::pade22_cww2, py::arg("x"));
}
