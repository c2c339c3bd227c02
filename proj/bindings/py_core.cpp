#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <utility>

#include "faskl/baselines.hpp"
#include "faskl/capacity.hpp"
#include "faskl/infotheory.hpp"
#include "faskl/outage.hpp"
#include "faskl/quadrature.hpp"
#include "faskl/specfun.hpp"
#include "faskl/spectral.hpp"
#include "faskl/version.hpp"

namespace py = pybind11;
using namespace faskl;

namespace {

EigenSystem eig_for(int n, double w) { return eigendecompose(jakes_matrix(n, w)); }

py::array_t<double> to_array(const SquareMatrix& m) {
  py::array_t<double> out({m.size(), m.size()});
  auto buf = out.mutable_unchecked<2>();
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) buf(i, j) = m.at(i, j);
  return out;
}

py::dict rd_point_dict(const RdPoint& p) {
  py::dict d;
  d["theta"] = p.theta;
  d["rate_bits"] = p.rate_bits;
  d["distortion"] = p.distortion;
  d["distortion_per_port"] = p.distortion_per_port;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "KL-expansion channel compression and outage analysis for fluid antenna systems";
  m.attr("__version__") = kVersion;

  m.def("bessel_j0", &bessel_j0, py::arg("x"));
  m.def("exp_integral_e1", &exp_integral_e1, py::arg("x"));

  m.def("gauss_hermite", [](int order) {
    const auto rule = gauss_hermite(order);
    return py::make_tuple(rule.nodes, rule.weights);
  }, py::arg("order"), "Gauss-Hermite nodes and weights for the weight exp(-t^2)");

  m.def("jakes_matrix", [](int n, double w) {
    return to_array(jakes_matrix(n, w).dense());
  }, py::arg("n"), py::arg("w"));

  m.def("eigensystem", [](int n, double w) {
    const auto eig = eig_for(n, w);
    return py::make_tuple(eig.eigenvalues, to_array(eig.eigenvectors));
  }, py::arg("n"), py::arg("w"),
     "Descending eigenvalues and the orthonormal eigenvector matrix (columns)");

  m.def("truncation_metrics", [](int n, double w, int k) {
    const auto t = truncate(eig_for(n, w), k);
    py::dict d;
    d["epsilon_k"] = t.epsilon_k;
    d["c1"] = t.c1;
    d["eigenvalues"] = t.eigenvalues;
    return d;
  }, py::arg("n"), py::arg("w"), py::arg("k"));

  m.def("min_modes", [](int n, double w, double eps0) {
    return min_modes(eig_for(n, w), eps0);
  }, py::arg("n"), py::arg("w"), py::arg("eps0"));
  m.def("dof_rule", &dof_rule, py::arg("w"));

  m.def("outage_rank1", [](int n, double w, double x) {
    return outage_rank1(truncate(eig_for(n, w), 1), x);
  }, py::arg("n"), py::arg("w"), py::arg("x"));

  m.def("cdf_kl_gh", [](int n, double w, int k, double x, int q) {
    return cdf_kl_gh(truncate(eig_for(n, w), k), x, q);
  }, py::arg("n"), py::arg("w"), py::arg("k"), py::arg("x"), py::arg("q") = 10);

  m.def("cdf_kl_mc", [](int n, double w, int k, double x, std::uint64_t trials,
                        std::uint64_t seed) {
    const auto est = cdf_kl_mc(truncate(eig_for(n, w), k), x, trials, seed);
    return std::pair<double, double>(est.value, est.std_error);
  }, py::arg("n"), py::arg("w"), py::arg("k"), py::arg("x"),
     py::arg("trials") = 100000, py::arg("seed") = 42,
     py::call_guard<py::gil_scoped_release>());

  m.def("outage_mc", [](int n, double w, double x, std::uint64_t trials, std::uint64_t seed) {
    const auto est = outage_mc(ChannelSampler::exact(eig_for(n, w), seed), x, trials);
    return std::pair<double, double>(est.value, est.std_error);
  }, py::arg("n"), py::arg("w"), py::arg("x"), py::arg("trials") = 100000,
     py::arg("seed") = 42, py::call_guard<py::gil_scoped_release>());

  m.def("capacity_rank1", [](int n, double w, double avg_snr) {
    return capacity_rank1(truncate(eig_for(n, w), 1), avg_snr);
  }, py::arg("n"), py::arg("w"), py::arg("avg_snr"));

  m.def("capacity_mc", [](int n, double w, int k, double avg_snr, std::uint64_t trials,
                          std::uint64_t seed) {
    const auto eig = eig_for(n, w);
    const auto sampler = k >= eig.size || k <= 0
                             ? ChannelSampler::exact(eig, seed)
                             : ChannelSampler::truncated(truncate(eig, k), seed);
    const auto est = capacity_mc(sampler, avg_snr, trials);
    return std::pair<double, double>(est.value, est.std_error);
  }, py::arg("n"), py::arg("w"), py::arg("k"), py::arg("avg_snr"),
     py::arg("trials") = 200000, py::arg("seed") = 42,
     py::call_guard<py::gil_scoped_release>(),
     "k <= 0 or k >= n selects the exact (full-rank) sampler");

  m.def("entropy_fraction", [](int n, double w, double eta, int k) {
    return entropy_fraction(eig_for(n, w), eta, k);
  }, py::arg("n"), py::arg("w"), py::arg("eta"), py::arg("k"));

  m.def("mutual_information", [](int n, double w, double eta, int k) {
    return mutual_information(eig_for(n, w), eta, k);
  }, py::arg("n"), py::arg("w"), py::arg("eta"), py::arg("k"));

  m.def("rd_curve", [](std::vector<double> eigenvalues, double eta, std::vector<double> thetas) {
    py::list out;
    for (const auto& p : rd_curve(eigenvalues, eta, thetas)) out.append(rd_point_dict(p));
    return out;
  }, py::arg("eigenvalues"), py::arg("eta"), py::arg("thetas"));

  m.def("kl_rd_point", [](int n, double w, double eta, int k) {
    return rd_point_dict(kl_rd_point(eig_for(n, w), eta, k));
  }, py::arg("n"), py::arg("w"), py::arg("eta"), py::arg("k"));

  m.def("vbcm_blocks", [](int n, double w) {
    py::list out;
    for (const auto& b : vbcm_partition(jakes_matrix(n, w)).blocks)
      out.append(py::make_tuple(b.begin, b.end, b.rho));
    return out;
  }, py::arg("n"), py::arg("w"));

  m.def("bcm_blocks", [](int n, double w, int d) {
    py::list out;
    for (const auto& b : bcm_partition(n, d, jakes_matrix(n, w)).blocks)
      out.append(py::make_tuple(b.begin, b.end, b.rho));
    return out;
  }, py::arg("n"), py::arg("w"), py::arg("d"));

  m.def("block_frobenius_rel_error", [](int n, double w, int d) {
    const auto r = jakes_matrix(n, w);
    return frobenius_rel_error(r, block_covariance(bcm_partition(n, d, r), n));
  }, py::arg("n"), py::arg("w"), py::arg("d"));

  m.def("kl_frobenius_rel_error", [](int n, double w, int k) {
    const auto eig = eig_for(n, w);
    return lowrank_errors(eig, k).frobenius / jakes_matrix(n, w).dense().frobenius_norm();
  }, py::arg("n"), py::arg("w"), py::arg("k"));
}
