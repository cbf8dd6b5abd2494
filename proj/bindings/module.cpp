// Python bindings.  Exact rationals cross the boundary as
// fractions.Fraction so nothing is rounded on the way out.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "isomoment/combinatorics.hpp"
#include "isomoment/exact.hpp"
#include "isomoment/hypergeometric.hpp"
#include "isomoment/so4.hpp"
#include "isomoment/sphere.hpp"
#include "isomoment/vortex.hpp"

#include <string>
#include <vector>

namespace py = pybind11;
using namespace isomoment;

namespace {

py::object to_fraction(const BigRational& r) {
  py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(py::str(to_string(r)));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact sphere moments, orbit statistics, and the vortex gas";

  py::class_<PiScaled>(m, "PiScaled",
                       "exact value coeff * pi^(h/2); h tracked as an integer")
      .def_property_readonly(
          "coeff", [](const PiScaled& v) { return to_fraction(v.coeff()); })
      .def_property_readonly("half_pi_power", &PiScaled::half_pi_power)
      .def("is_rational", &PiScaled::is_rational)
      .def("to_double", &PiScaled::to_double)
      .def("__repr__",
           [](const PiScaled& v) { return to_string(v); })
      .def("__truediv__",
           [](const PiScaled& a, const PiScaled& b) { return a / b; });

  py::class_<MCEstimate>(m, "MCEstimate")
      .def_readonly("mean", &MCEstimate::mean)
      .def_readonly("std_error", &MCEstimate::std_error)
      .def_readonly("n_samples", &MCEstimate::n_samples)
      .def_readonly("seed", &MCEstimate::seed)
      .def("__repr__", [](const MCEstimate& e) {
        return "MCEstimate(mean=" + std::to_string(e.mean) +
               ", std_error=" + std::to_string(e.std_error) + ")";
      });

  m.attr("DEFAULT_SEED") = py::int_(kDefaultSeed);

  m.def(
      "i_mn",
      [](int mm, int n) { return to_fraction(i_mn(mm, n)); },
      py::arg("m"), py::arg("n"),
      "exact moment ratio I_{m,n} from the Gamma-function form");
  m.def(
      "i_mn_closed",
      [](int mm, int n) { return to_fraction(i_mn_closed(mm, n)); },
      py::arg("m"), py::arg("n"),
      "same value through the factorial closed forms");
  m.def(
      "i_mn_expand",
      [](int mm, int n) { return to_fraction(i_mn_expand(mm, n)); },
      py::arg("m"), py::arg("n"),
      "same value rebuilt from the mixed-moment expansion");

  m.def(
      "mixed_moment",
      [](const std::vector<int>& r) {
        return to_fraction(mixed_moment(MultiIndex(r)));
      },
      py::arg("r"),
      "exact moment of the monomial with exponent vector r (even total "
      "degree)");

  m.def(
      "compositions",
      [](int mm, int n) {
        std::vector<std::vector<int>> out;
        for (const MultiIndex& s : CompositionRange(mm, n))
          out.push_back(s.parts());
        return out;
      },
      py::arg("m"), py::arg("n"),
      "all n-part compositions of m in decreasing lexicographic order");

  m.def("sphere_volume", &sphere_volume, py::arg("n"),
        "volume of the unit sphere S^{n-1} as an exact pi-scaled value");
  m.def("axis_moment", &axis_moment, py::arg("n"), py::arg("m"),
        "exact integral of x1^{2m} over S^{n-1}");
  m.def("quad_axis_moment", &quad_axis_moment, py::arg("n"), py::arg("m"),
        py::arg("tol") = 1e-10, "the same integral by adaptive quadrature");
  m.def(
      "mc_projected_moment",
      [](int n, int mm, const std::vector<double>& v, std::int64_t samples,
         std::uint64_t seed) {
        return mc_projected_moment(n, mm, UnitVector::normalized(v), samples,
                                   seed);
      },
      py::arg("n"), py::arg("m"), py::arg("v"), py::arg("n_samples") = 100000,
      py::arg("seed") = kDefaultSeed,
      "Monte Carlo estimate of the projected moment <v,x>^{2m}; expected "
      "value is 1/I_{m,n}");

  m.def(
      "pfaffian",
      [](const std::vector<double>& c) {
        if (c.size() != 6)
          throw std::invalid_argument("pfaffian: need 6 components");
        Bivector6 j;
        for (int i = 0; i < 6; ++i) j[i] = c[static_cast<std::size_t>(i)];
        return pfaffian(j);
      },
      py::arg("components"),
      "Pfaffian of the 4x4 antisymmetric matrix with these six upper "
      "entries");
  m.def(
      "sample_orbit",
      [](std::uint64_t seed, std::uint64_t stream) {
        CounterRng rng(seed, stream);
        return sample_orbit(rng).to_vector();
      },
      py::arg("seed") = kDefaultSeed, py::arg("stream") = 0,
      "one random simple unit 2-vector as its six components");
  m.def("mc_orthogonality", &mc_orthogonality, py::arg("n_samples") = 100000,
        py::arg("seed") = kDefaultSeed,
        "Monte Carlo mean of the opposite-pair product J12*J34");
  m.def(
      "mc_orbit_hypothesis",
      [](int mm, const std::vector<double>& v, std::int64_t samples,
         std::uint64_t seed) {
        return mc_orbit_hypothesis(mm, UnitVector::normalized(v), samples,
                                   seed);
      },
      py::arg("m"), py::arg("v"), py::arg("n_samples") = 100000,
      py::arg("seed") = kDefaultSeed,
      "Monte Carlo mean of <v,J>^{2m} over random simple unit 2-vectors");

  m.def(
      "dh_moment",
      [](int big_n, double r2, int mm) {
        return dh_moment(VortexParams(big_n, r2, 0.0, 1.0, 1.0), mm);
      },
      py::arg("N"), py::arg("R2"), py::arg("m"),
      "moment of the vortex-moment-map coordinate over the reduced space");
  m.def(
      "z_series",
      [](int big_n, double r2, double mu2, double temperature, double hbar,
         double rel_tol, int max_m) {
        int terms = 0;
        bool cancel = false;
        const double z =
            z_series(VortexParams(big_n, r2, mu2, temperature, hbar), rel_tol,
                     max_m, &terms, &cancel);
        return py::make_tuple(z, terms, cancel);
      },
      py::arg("N"), py::arg("R2"), py::arg("mu2"), py::arg("T") = 1.0,
      py::arg("hbar") = 1.0, py::arg("rel_tol") = 1e-10,
      py::arg("max_m") = 400,
      "partition function by the moment series; returns (value, terms_used, "
      "cancellation_flag)");
  m.def(
      "z_closed",
      [](int big_n, double r2, double mu2, double temperature, double hbar,
         double rel_tol) {
        return z_closed(VortexParams(big_n, r2, mu2, temperature, hbar),
                        rel_tol);
      },
      py::arg("N"), py::arg("R2"), py::arg("mu2"), py::arg("T") = 1.0,
      py::arg("hbar") = 1.0, py::arg("rel_tol") = 1e-10,
      "partition function through the 2F2 closed form");

  m.def(
      "check_2f1_identity",
      [](int mm, int n, double rel_tol) {
        const Check2F1Result r = check_2f1_identity(mm, n, rel_tol);
        py::dict d;
        d["lhs"] = r.lhs;
        d["rhs"] = r.rhs;
        d["pass"] = r.pass;
        return d;
      },
      py::arg("m"), py::arg("n"), py::arg("rel_tol") = 1e-10,
      "half-point 2F1 value against the exact moment ratio");
}
