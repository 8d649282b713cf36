#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>

#include "hankel1/hankel1.hpp"

namespace py = pybind11;
using namespace hankel1;

namespace
{

ExtendedScalar to_extended(const py::object& z)
{
    if (py::isinstance<py::float_>(z) && std::isinf(z.cast<double>()))
        return ExtendedScalar::infinity();
    if (py::isinstance<py::str>(z) && z.cast<std::string>() == "inf")
        return ExtendedScalar::infinity();
    return ExtendedScalar(z.cast<Complex>());
}

py::object from_extended(const ExtendedScalar& z)
{
    if (z.is_infinite())
        return py::float_(std::numeric_limits<double>::infinity());
    return py::cast(z.value());
}

py::dict params_dict(const Rank1HankelParams& p)
{
    py::dict d;
    d["c"]    = p.c;
    d["z"]    = from_extended(p.z);
    d["rows"] = p.rows;
    d["cols"] = p.cols;
    return d;
}

py::dict frobenius_dict(const FrobeniusSolution& s)
{
    py::dict d = params_dict(s.params);
    d["objective"]       = s.objective_value;
    d["error_frobenius"] = s.error_frobenius;
    d["error_spectral"]  = s.error_spectral;
    d["mode"]            = std::string(to_string(s.mode));
    d["svd_coincident"]  = s.svd_coincident;
    py::list alts;
    for (const auto& p : s.alternates)
        alts.append(params_dict(p));
    d["alternates"]  = alts;
    d["approximant"] = s.approximant();
    return d;
}

CMatrix as_complex(const py::array& a)
{
    return py::cast<CMatrix>(py::module_::import("numpy").attr("asarray")(a, "complex128"));
}

RMatrix as_real(const py::array& a)
{
    py::module_ np = py::module_::import("numpy");
    if (np.attr("iscomplexobj")(a).cast<bool>())
    {
        if (np.attr("any")(np.attr("imag")(a)).cast<bool>())
            throw Error(ErrorKind::InvalidArgument, "matrix has non-zero imaginary parts");
        return py::cast<RMatrix>(np.attr("asarray")(np.attr("real")(a), "float64"));
    }
    return py::cast<RMatrix>(np.attr("asarray")(a, "float64"));
}

}  // namespace

PYBIND11_MODULE(_hankel1, m)
{
    m.doc() = "Optimal rank-1 Hankel approximation";
    m.attr("__version__") = version;

    py::register_exception<Error>(m, "HankelError", PyExc_ValueError);

    m.def("structured_vector", [](const py::object& z, Index n) { return CVector(structured_vector(to_extended(z), n).entries); },
          py::arg("z"), py::arg("n"));
    m.def("build_rank1",
          [](Complex c, const py::object& z, Index rows, Index cols) {
              return build_rank1({c, to_extended(z), rows, cols});
          },
          py::arg("c"), py::arg("z"), py::arg("rows"), py::arg("cols"));
    m.def("hankel_project", [](const py::array& a) { return hankel_project(as_complex(a)); }, py::arg("a"));
    m.def("is_hankel", [](const py::array& a, double tol) { return is_hankel(as_complex(a), tol); }, py::arg("a"),
          py::arg("tol") = Tolerances{}.structural);
    m.def("extract_params",
          [](const py::array& h, double tol) { return params_dict(extract_params(as_complex(h), tol)); },
          py::arg("h"), py::arg("tol") = Tolerances{}.structural);
    m.def("objective", [](const py::array& a, const py::object& z) { return objective(as_complex(a), to_extended(z)); },
          py::arg("a"), py::arg("z"));

    m.def("eig_symmetric",
          [](const py::array& a) {
              const SymmetricEigen e = eig_symmetric(as_real(a));
              return py::make_tuple(RVector(e.values), Eigen::MatrixXd(e.vectors));
          },
          py::arg("a"));

    m.def("solve_real", [](const py::array& a) { return frobenius_dict(solve_real(as_real(a))); }, py::arg("a"));
    m.def("solve_complex",
          [](const py::array& a, Index grid_radii, Index grid_angles) {
              FrobeniusOptions o;
              o.grid_radii  = grid_radii;
              o.grid_angles = grid_angles;
              return frobenius_dict(solve_complex(as_complex(a), o));
          },
          py::arg("a"), py::arg("grid_radii") = 64, py::arg("grid_angles") = 256);

    m.def("solve_spectral",
          [](const py::array& a, std::optional<double> eps) {
              SpectralOptions o;
              o.eps = eps;
              const SpectralSolution s = solve_spectral(as_real(a), o);
              py::dict d;
              d["lambda_tilde"] = s.lambda_tilde;
              d["case"]         = std::string(to_string(s.spectral_case));
              d["bisection_iterations"] = s.bisection_iterations;
              if (s.c_interval)
                  d["c_interval"] = py::make_tuple(s.c_interval->lo, s.c_interval->hi);
              if (s.params)
              {
                  d["c"] = s.params->c.real();
                  d["z"] = from_extended(s.params->z);
                  const CMatrix err    = to_complex(as_real(a)) - build_rank1(*s.params);
                  d["error_frobenius"] = frobenius_norm(err);
                  d["error_spectral"]  = spectral_norm(err);
              }
              return d;
          },
          py::arg("a"), py::arg("eps") = py::none());

    m.def("cadzow",
          [](const py::array& a, double tol, double tol_zero, std::size_t max_iter) {
              CadzowOptions o{tol, tol_zero, max_iter};
              const CMatrix ac      = as_complex(a);
              const CadzowTrace t   = cadzow_iterate(ac, o);
              py::dict d;
              d["terminal"]        = std::string(to_string(t.terminal));
              d["iterations"]      = t.iterations;
              d["sigmas"]          = t.sigmas;
              d["final"]           = t.final_iterate;
              d["error_frobenius"] = t.error_frobenius;
              d["error_spectral"]  = t.error_spectral;
              if (t.params)
              {
                  d["c"] = t.params->c;
                  d["z"] = from_extended(t.params->z);
              }
              return d;
          },
          py::arg("a"), py::arg("tol") = 1e-12, py::arg("tol_zero") = 1e-12, py::arg("max_iter") = 100000);
}
