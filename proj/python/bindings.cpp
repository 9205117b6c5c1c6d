#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spinthermal/analysis.hpp"
#include "spinthermal/concurrence.hpp"
#include "spinthermal/errors.hpp"
#include "spinthermal/linalg.hpp"
#include "spinthermal/spin_model.hpp"
#include "spinthermal/sweep.hpp"
#include "spinthermal/thermal.hpp"

namespace py = pybind11;
using namespace spinthermal;

namespace {

using CArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

CArray to_numpy(const ComplexMatrix& m) {
  const auto n = static_cast<py::ssize_t>(m.dim());
  CArray out({n, n});
  std::copy(m.data().begin(), m.data().end(), out.mutable_data());
  return out;
}

ComplexMatrix from_numpy(const CArray& a) {
  if (a.ndim() != 2 || a.shape(0) != a.shape(1)) throw py::value_error("expected a square 2-D array");
  const auto n = static_cast<std::size_t>(a.shape(0));
  ComplexMatrix m(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = a.at(r, c);
  return m;
}

py::dict critical_dict(const CriticalPoint& cp) {
  py::dict d;
  d["z_c"] = cp.z_c;
  d["x_c"] = cp.x_c;
  d["tc_per_J"] = cp.tc_per_J;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Thermal pairwise entanglement in three-qubit Heisenberg rings";

  static py::exception<Error> base(m, "SpinThermalError", PyExc_RuntimeError);
  static py::exception<NumericError> numeric(m, "NumericError", base.ptr());
  static py::exception<DomainError> domain(m, "DomainError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const NumericError& e) {
      PyErr_SetString(numeric.ptr(), e.what());
    } catch (const DomainError& e) {
      PyErr_SetString(domain.ptr(), e.what());
    } catch (const Error& e) {
      PyErr_SetString(base.ptr(), e.what());
    }
  });

  py::enum_<ModelKind>(m, "ModelKind")
      .value("XX", ModelKind::XX)
      .value("XXZ", ModelKind::XXZ)
      .value("XXZField", ModelKind::XXZField)
      .value("GeneralXYZ", ModelKind::GeneralXYZ);

  py::class_<ModelSpec>(m, "ModelSpec")
      .def_static("xx", &ModelSpec::xx, py::arg("J"))
      .def_static("xxz", &ModelSpec::xxz, py::arg("J"), py::arg("delta"))
      .def_static("xxz_field", &ModelSpec::xxz_field, py::arg("J"), py::arg("delta"), py::arg("B"))
      .def_static("xyz", &ModelSpec::xyz, py::arg("couplings"), py::arg("fields") = std::array<double, 3>{})
      .def_readwrite("kind", &ModelSpec::kind)
      .def_readwrite("J", &ModelSpec::J)
      .def_readwrite("delta", &ModelSpec::delta)
      .def_readwrite("B", &ModelSpec::B)
      .def_readwrite("couplings", &ModelSpec::couplings)
      .def_readwrite("fields", &ModelSpec::fields)
      .def("__repr__", [](const ModelSpec& s) {
        return "ModelSpec(" + std::string(to_string(s.kind)) + ", J=" + std::to_string(s.J) +
               ", delta=" + std::to_string(s.delta) + ", B=" + std::to_string(s.B) + ")";
      });

  m.def("build_hamiltonian", [](const ModelSpec& s) { return to_numpy(build_hamiltonian(s)); });
  m.def("cyclic_shift", [] { return to_numpy(cyclic_shift()); });
  m.def("analytic_eigenstates", &analytic_eigenstates);
  m.def("analytic_energies", &analytic_energies);
  m.def("hermitian_eigen", [](const CArray& a) {
    const Spectrum s = hermitian_eigen(from_numpy(a));
    return py::make_tuple(s.eigenvalues, to_numpy(s.vectors));
  });
  m.def("eigenvalues", [](const ModelSpec& s) { return hermitian_eigen(build_hamiltonian(s)).eigenvalues; });

  m.def("partition_function", &partition_function, py::arg("spec"), py::arg("T"));
  m.def("gibbs_density", [](const ModelSpec& s, double T) { return to_numpy(gibbs_density(s, T)); },
        py::arg("spec"), py::arg("T"));
  m.def("partial_trace", [](const CArray& rho, int site) { return to_numpy(partial_trace(from_numpy(rho), site)); },
        py::arg("rho"), py::arg("traced_site") = 3);
  m.def("xstate_params", [](const ModelSpec& s, double T) {
    const XStateParams p = xstate_params(s, T);
    py::dict d;
    d["u"] = p.u;
    d["v"] = p.v;
    d["w"] = p.w;
    d["y"] = p.y;
    d["Z"] = p.Z;
    return d;
  });

  m.def("concurrence_general", [](const CArray& rho) {
    const ConcurrenceResult r = concurrence_general(from_numpy(rho));
    return py::make_tuple(r.C, r.lambdas);
  });
  m.def("concurrence_closed_form", &concurrence_closed_form, py::arg("spec"), py::arg("T"));
  m.def("concurrence_numeric", [](const ModelSpec& s, double T, int site) { return concurrence_numeric(s, T, site).C; },
        py::arg("spec"), py::arg("T"), py::arg("traced_site") = 3);

  m.def("xx_critical", [] { return critical_dict(xx_critical()); });
  m.def("xxz_critical", [](double delta) -> py::object {
    const auto cp = xxz_critical(delta);
    return cp ? py::object(critical_dict(*cp)) : py::none();
  });
  m.def("delta_boundary", py::overload_cast<double>(&delta_boundary), py::arg("z"));
  m.def("xxx_field_threshold", &xxx_field_threshold);
  m.def("zero_temperature_concurrence", &zero_temperature_concurrence, py::arg("delta"), py::arg("B"),
        py::arg("J") = 1.0);

  m.def(
      "sweep",
      [](const ModelSpec& spec, const std::vector<std::tuple<std::string, double, double, int>>& axes, double T,
         unsigned workers) {
        SweepConfig config;
        config.model = spec;
        config.T = T;
        config.workers = workers;
        for (const auto& [var, lo, hi, steps] : axes) config.axes.push_back({parse_sweep_var(var), lo, hi, steps});
        py::list rows;
        for (const auto& rec : sweep(config)) {
          py::dict d;
          for (auto col : sweep_columns()) d[py::str(std::string(col))] = rec.get(col);
          rows.append(d);
        }
        return rows;
      },
      py::arg("spec"), py::arg("axes"), py::arg("T") = 1.0, py::arg("workers") = 1);
}
