#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "circlekit/decompose.hpp"
#include "circlekit/errors.hpp"
#include "circlekit/io.hpp"
#include "circlekit/kernel.hpp"
#include "circlekit/measure.hpp"

using namespace circlekit;

namespace {

CircleMeasure sample_measure() {
  return CircleMeasure::from_density(
      TrigPoly::real_from_pos({Complex(1.5, 0.0), Complex(0.25, -0.125)}),
      {Atom{1.0, 0.5}, Atom{4.0, 0.125}});
}

}  // namespace

TEST_CASE("trig polynomial JSON round trip is stable byte for byte") {
  const TrigPoly p = TrigPoly::real_from_pos(
      {Complex(2.0, 0.0), Complex(1.0 / 3.0, -0.7), Complex(0.0, 1e-17)});
  const std::string a = io::to_json(p);
  const std::string b = io::to_json(io::trigpoly_from_json(a));
  CHECK(a == b);

  const TrigPoly q = io::trigpoly_from_json(a);
  CHECK(q.degree() == p.degree());
  CHECK(q.is_real() == p.is_real());
  for (int j = 0; j <= p.degree(); ++j) CHECK(q.coeff(j) == p.coeff(j));
}

TEST_CASE("general (non-Hermitian) rows survive the trip") {
  const TrigPoly p = TrigPoly::from_full(
      {Complex(0.0, 0.0), Complex(2.0, 0.0), Complex(1.0, 0.0)});
  const TrigPoly q = io::trigpoly_from_json(io::to_json(p));
  CHECK_FALSE(q.is_real());
  CHECK(q.coeff(-1) == p.coeff(-1));
  CHECK(q.coeff(1) == p.coeff(1));
}

TEST_CASE("measure JSON preserves atoms, densities, and representation kind") {
  const CircleMeasure mu = sample_measure();
  const std::string a = io::to_json(mu);
  const CircleMeasure back = io::measure_from_json(a);
  CHECK(io::to_json(back) == a);
  REQUIRE(back.atoms().size() == 2);
  CHECK(back.atoms()[0].angle == mu.atoms()[0].angle);
  CHECK(back.atoms()[0].weight == mu.atoms()[0].weight);
  CHECK_FALSE(back.density().sampled());
  const MomentSequence ma = moments(mu, 6), mb = moments(back, 6);
  for (int n = 0; n <= 6; ++n) CHECK(ma.at(n) == mb.at(n));

  const CircleMeasure sm = CircleMeasure::lebesgue_upper(256);
  const CircleMeasure sback = io::measure_from_json(io::to_json(sm));
  REQUIRE(sback.density().sampled());
  CHECK(sback.density().grid_size() == 256);
  CHECK(sback.density().samples() == sm.density().samples());
}

TEST_CASE("malformed measure JSON is a validation error") {
  CHECK_THROWS_AS(io::measure_from_json("{"), ValidationError);
  CHECK_THROWS_AS(io::measure_from_json("{\"atoms\": 3}"), ValidationError);
  // Well-formed JSON, invalid content: the atom weight check still fires.
  const std::string negative_weight =
      "{\"atoms\": [{\"angle\": 0.0, \"weight\": -1.0}], \"density\": "
      "{\"coeffs\": [{\"im\": 0.0, \"j\": 0, \"re\": 1.0}], \"real\": true}}";
  CHECK_THROWS_AS(io::measure_from_json(negative_weight), ValidationError);
}

TEST_CASE("gram and finite-kernel matrices round trip exactly") {
  const KernelGram g = gram(sample_measure(), default_disk_grid(6));
  const std::string a = io::to_json(g);
  const KernelGram back = io::gram_from_json(a);
  CHECK(io::to_json(back) == a);
  REQUIRE(back.dim() == g.dim());
  CHECK((back.entries - g.entries).cwiseAbs().maxCoeff() == 0.0);
  REQUIRE(back.points.size() == g.points.size());
  for (size_t i = 0; i < g.points.size(); ++i) CHECK(back.points[i] == g.points[i]);

  const FiniteKernel k = FiniteKernel::checked(g.entries);
  const std::string ka = io::to_json(k);
  const FiniteKernel kback = io::finite_kernel_from_json(ka);
  CHECK(io::to_json(kback) == ka);
  CHECK((kback.entries - k.entries).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("form pairs and decompositions round trip") {
  const Eigen::MatrixXcd A = coeff_kernel(sample_measure(), 3).entries;
  const Eigen::MatrixXcd B = Eigen::MatrixXcd::Identity(4, 4);
  const FormPair fp = FormPair::checked(A, B);
  const std::string a = io::to_json(fp);
  const FormPair back = io::form_pair_from_json(a);
  CHECK(io::to_json(back) == a);
  CHECK((back.A - fp.A).cwiseAbs().maxCoeff() == 0.0);
  CHECK((back.B - fp.B).cwiseAbs().maxCoeff() == 0.0);

  const FormDecomposition fd = simon_decompose(fp);
  const std::string da = io::to_json(fd);
  const FormDecomposition dback = io::form_decomposition_from_json(da);
  CHECK(io::to_json(dback) == da);
  CHECK(dback.iterations == fd.iterations);
  CHECK(dback.converged == fd.converged);
}

TEST_CASE("decomposition reports round trip through JSON") {
  const CircleMeasure mu = combine(
      0.5, CircleMeasure::lebesgue(), 1.0, CircleMeasure::point_mass(kPi / 2.0, 0.7));
  const DecompositionReport rep =
      lebesgue_decompose(mu, CircleMeasure::lebesgue(), 64);
  const std::string a = io::to_json(rep);
  const DecompositionReport back = io::decomposition_report_from_json(a);
  CHECK(io::to_json(back) == a);
  CHECK(back.strategy == rep.strategy);
  CHECK(back.invariance == rep.invariance);
  REQUIRE(back.traces.size() == rep.traces.size());
  for (size_t i = 0; i < rep.traces.size(); ++i) {
    CHECK(back.traces[i].N == rep.traces[i].N);
    CHECK(back.traces[i].ac_mass == rep.traces[i].ac_mass);
    CHECK(back.traces[i].intersection_rank == rep.traces[i].intersection_rank);
  }
  CHECK(back.mu_s.atoms().size() == rep.mu_s.atoms().size());
}

TEST_CASE("CSV emitters carry the documented headers and shapes") {
  const std::vector<double> thetas = {0.0, kPi};
  const std::vector<double> radii = {0.5, 0.9};
  const std::vector<std::vector<double>> re_H = {{1.0, 2.0}, {3.0, 4.0}};
  const std::vector<std::vector<double>> fq = {{0.1, 0.2}, {0.3, 0.4}};
  const std::string csv = io::radial_trace_csv(thetas, radii, re_H, fq);
  CHECK(csv.rfind("theta,r,re_H,fatou_quotient\n", 0) == 0);
  size_t lines = 0;
  for (char c : csv)
    if (c == '\n') ++lines;
  CHECK(lines == 1 + 4);  // header + one row per (theta, r) pair

  const std::string hc = io::halfcircle_csv(halfcircle_example(8));
  CHECK(hc.rfind("j,moment_re,moment_im,series_re,series_im,abs_diff\n", 0) == 0);
  CHECK(hc.find("\n0,0.5,") != std::string::npos);

  std::vector<TraceEntry> tr(1);
  tr[0].N = 64;
  tr[0].ac_mass = 0.25;
  tr[0].rn_residual = 1e-9;
  tr[0].intersection_rank = 3;
  const std::string dc = io::decompose_trace_csv(tr);
  CHECK(dc.rfind("N,ac_mass,rn_residual,intersection_rank\n", 0) == 0);
  CHECK(dc.find("64,0.25,") != std::string::npos);
}

TEST_CASE("file helpers write and read back verbatim") {
  const std::string path = "io_test_scratch.json";
  const std::string payload = io::to_json(sample_measure());
  io::write_file(path, payload);
  CHECK(io::read_file(path) == payload);
  CHECK_THROWS_AS(io::read_file("definitely/not/a/real/path.json"),
                  ValidationError);
}
