// Batch front end: measures in, JSON/CSV out. Exit 0 on success, 2 on
// validation/usage errors, 3 on numerical-failure verdicts (a domination
// violation, a non-convergent ladder, an ill-posed deconvolution).
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "circlekit/decompose.hpp"
#include "circlekit/errors.hpp"
#include "circlekit/forms.hpp"
#include "circlekit/io.hpp"
#include "circlekit/kernel.hpp"
#include "circlekit/kernelpair.hpp"
#include "circlekit/linalg.hpp"
#include "circlekit/measure.hpp"
#include "circlekit/spaces.hpp"
#include "circlekit/transform.hpp"
#include "circlekit/trigpoly.hpp"

namespace {

using circlekit::Complex;

std::uint64_t grid_seed() {
  if (const char* s = std::getenv("CIRCLEKIT_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s, &end, 0);
    if (end == s || *end != '\0')
      throw circlekit::ValidationError("CIRCLEKIT_SEED is not an integer");
    return v;
  }
  return circlekit::kDefaultSeed;
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty())
    std::cout << content << '\n';
  else
    circlekit::io::write_file(out_path, content);
}

circlekit::CircleMeasure load_measure(const std::string& path) {
  return circlekit::io::measure_from_json(circlekit::io::read_file(path));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cauchy-transform space toolkit for measures on the unit circle"};
  app.require_subcommand(1);

  std::string mu_path, lam_path, pair_path, k_path, ref_path, poly_path, out_path;
  std::string trace_path, measure_out, method_name = "integral";
  int N = 16, grid = 64, order = 16, deg = 4, threads = 1;
  double t_param = 1.0, gauge_t = 0.0, re = 0.0, im = 0.0;

  auto* c_moments = app.add_subcommand("moments", "Moment sequence of a measure");
  c_moments->add_option("--mu", mu_path, "measure JSON")->required();
  c_moments->add_option("-N,--order", N, "highest moment order");
  c_moments->add_option("--out", out_path, "output path (stdout if absent)");

  auto* c_herglotz = app.add_subcommand("herglotz", "Herglotz transform at a disk point");
  c_herglotz->add_option("--mu", mu_path)->required();
  c_herglotz->add_option("--re", re, "Re z");
  c_herglotz->add_option("--im", im, "Im z");
  c_herglotz->add_option("--out", out_path);

  auto* c_clark = app.add_subcommand(
      "clark", "Radial traces and Clark measure of the Cayley transform");
  c_clark->add_option("--mu", mu_path)->required();
  c_clark->add_option("--grid", grid, "circle grid size (power of two)");
  c_clark->add_option("-t,--gauge", gauge_t, "imaginary gauge shift");
  c_clark->add_option("--out", out_path, "radial trace CSV path");
  c_clark->add_option("--measure-out", measure_out, "reconstructed measure JSON path");

  auto* c_szego = app.add_subcommand("szego", "Szego distance and extremeness");
  c_szego->add_option("--mu", mu_path)->required();
  c_szego->add_option("--out", out_path);

  auto* c_dom = app.add_subcommand("dominate", "Kernel domination verdict");
  c_dom->add_option("--mu", mu_path)->required();
  c_dom->add_option("--lambda", lam_path)->required();
  c_dom->add_option("-t", t_param, "domination constant");
  c_dom->add_option("--grid", grid, "number of disk grid points");
  c_dom->add_option("--out", out_path);

  auto* c_kernel = app.add_subcommand("kernel", "Gram matrix on a disk grid");
  c_kernel->add_option("--mu", mu_path)->required();
  c_kernel->add_option("--grid", grid, "number of disk grid points");
  c_kernel->add_option("--method", method_name, "integral or herglotz");
  c_kernel->add_option("--threads", threads, "rows computed in parallel");
  c_kernel->add_option("--out", out_path);

  auto* c_dec = app.add_subcommand("decompose", "Lebesgue decomposition report");
  c_dec->add_option("--mu", mu_path)->required();
  c_dec->add_option("--lambda", lam_path)->required();
  c_dec->add_option("-N", N, "working resolution (power of two >= 64)");
  c_dec->add_option("--out", out_path, "report JSON path");
  c_dec->add_option("--trace", trace_path, "trace CSV path");

  auto* c_forms = app.add_subcommand(
      "forms", "Form-pair splitting, or density recovery from moments");
  c_forms->add_option("--pair", pair_path, "form pair JSON (A, B)");
  c_forms->add_option("--mu", mu_path, "measure JSON (recovery mode)");
  c_forms->add_option("--lambda", lam_path, "reference measure JSON (recovery mode)");
  c_forms->add_option("-N", N, "moment window for recovery");
  c_forms->add_option("-d,--degree", deg, "recovered density degree");
  c_forms->add_option("--out", out_path);

  auto* c_kp = app.add_subcommand("kernelpair", "Finite-kernel Lebesgue decomposition");
  c_kp->add_option("--k", k_path, "kernel JSON")->required();
  c_kp->add_option("--reference", ref_path, "reference kernel JSON")->required();
  c_kp->add_option("--out", out_path);

  auto* c_half = app.add_subcommand("halfcircle", "Half-circle kernel column data");
  c_half->add_option("--order", order, "Taylor order (>= 8)");
  c_half->add_option("--out", out_path, "CSV path");

  auto* c_factor = app.add_subcommand("factor", "Spectral factor of a nonnegative polynomial");
  c_factor->add_option("--poly", poly_path, "trig polynomial JSON")->required();
  c_factor->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    namespace io = circlekit::io;
    using nlohmann::json;

    if (c_moments->parsed()) {
      const circlekit::MomentSequence ms = circlekit::moments(load_measure(mu_path), N);
      json vals = json::array();
      for (int n = 0; n <= ms.N; ++n)
        vals.push_back(json{{"im", ms.vals[static_cast<size_t>(n)].imag()},
                            {"n", n},
                            {"re", ms.vals[static_cast<size_t>(n)].real()}});
      emit(out_path, json{{"N", ms.N}, {"values", std::move(vals)}}.dump(2));
    } else if (c_herglotz->parsed()) {
      const Complex v = circlekit::herglotz(load_measure(mu_path), Complex(re, im));
      emit(out_path, nlohmann::json{{"im", v.imag()}, {"re", v.real()}}.dump(2));
    } else if (c_clark->parsed()) {
      const circlekit::CircleMeasure mu = load_measure(mu_path);
      circlekit::ContractiveFunction b =
          circlekit::mobius_gauge(circlekit::b_from_measure(mu), gauge_t);
      const std::vector<double> radii = circlekit::default_radii();
      std::vector<double> thetas(static_cast<size_t>(grid));
      for (int j = 0; j < grid; ++j) thetas[static_cast<size_t>(j)] = circlekit::kTwoPi * j / grid;
      std::vector<std::vector<double>> re_H(radii.size()), fatou(radii.size());
      for (size_t k = 0; k < radii.size(); ++k) {
        re_H[k].resize(thetas.size());
        fatou[k].resize(thetas.size());
        for (size_t j = 0; j < thetas.size(); ++j) {
          const Complex z = radii[k] * circlekit::unit(thetas[j]);
          re_H[k][j] = b.herglotz_value(z).real();
          const Complex bz = b(z);
          fatou[k][j] = (1.0 - std::norm(bz)) / std::norm(1.0 - bz);
        }
      }
      emit(out_path, io::radial_trace_csv(thetas, radii, re_H, fatou));
      if (!measure_out.empty())
        io::write_file(measure_out, io::to_json(circlekit::clark_measure(b, grid)));
    } else if (c_szego->parsed()) {
      const circlekit::CircleMeasure mu = load_measure(mu_path);
      const double dist = circlekit::szego_distance(mu);
      const bool extreme = circlekit::is_extreme(mu) == circlekit::Extremeness::Extreme;
      emit(out_path, json{{"distance", dist}, {"extreme", extreme}}.dump(2));
    } else if (c_dom->parsed()) {
      const circlekit::DominationVerdict v = circlekit::dominates_rk(
          load_measure(mu_path), load_measure(lam_path), t_param,
          circlekit::default_disk_grid(grid, grid_seed()));
      json witness = json::array();
      for (Eigen::Index i = 0; i < v.witness.size(); ++i)
        witness.push_back(json{{"im", v.witness(i).imag()}, {"re", v.witness(i).real()}});
      emit(out_path, json{{"dominated", v.dominated},
                          {"min_eig", v.min_eig},
                          {"witness", std::move(witness)}}
                         .dump(2));
      if (!v.dominated) return 3;
    } else if (c_kernel->parsed()) {
      circlekit::KernelMethod method;
      if (method_name == "integral") {
        method = circlekit::KernelMethod::Integral;
      } else if (method_name == "herglotz") {
        method = circlekit::KernelMethod::Herglotz;
      } else {
        throw circlekit::ValidationError("method must be integral or herglotz");
      }
      const circlekit::KernelGram g =
          circlekit::gram(load_measure(mu_path),
                          circlekit::default_disk_grid(grid, grid_seed()), method, threads);
      emit(out_path, io::to_json(g));
    } else if (c_dec->parsed()) {
      const circlekit::DecompositionReport rep =
          circlekit::lebesgue_decompose(load_measure(mu_path), load_measure(lam_path), N);
      emit(out_path, io::to_json(rep));
      if (!trace_path.empty())
        io::write_file(trace_path, io::decompose_trace_csv(rep.traces));
    } else if (c_forms->parsed()) {
      if (!pair_path.empty()) {
        const circlekit::FormDecomposition fd =
            circlekit::simon_decompose(io::form_pair_from_json(io::read_file(pair_path)));
        emit(out_path, io::to_json(fd));
      } else if (!mu_path.empty() && !lam_path.empty()) {
        double residual = 0.0;
        const circlekit::TrigPoly f = circlekit::rn_extract(
            load_measure(mu_path), load_measure(lam_path), N, deg, &residual);
        const json j = {{"f", json::parse(io::to_json(f))}, {"residual", residual}};
        emit(out_path, j.dump(2));
      } else {
        throw circlekit::ValidationError("forms needs --pair, or --mu with --lambda");
      }
    } else if (c_kp->parsed()) {
      const circlekit::FiniteKernel k =
          circlekit::io::finite_kernel_from_json(io::read_file(k_path));
      const circlekit::FiniteKernel K =
          circlekit::io::finite_kernel_from_json(io::read_file(ref_path));
      const circlekit::KernelDecomposition kd = circlekit::kernel_lebesgue(k, K);
      const circlekit::OrthogonalSplitReport sp =
          circlekit::orthogonal_split_check(k, kd.k_ac, kd.k_s);
      const json j = {{"converged", kd.converged},
                      {"iterations", kd.iterations},
                      {"k_ac", json::parse(io::to_json(kd.k_ac))},
                      {"k_s", json::parse(io::to_json(kd.k_s))},
                      {"range_residual", kd.range_residual},
                      {"split",
                       json{{"cross_norm", sp.cross_norm},
                            {"pass", sp.pass},
                            {"rank_ac", sp.rank_ac},
                            {"rank_additive", sp.rank_additive},
                            {"rank_k", sp.rank_k},
                            {"rank_s", sp.rank_s}}}};
      emit(out_path, j.dump(2));
      if (!sp.pass) return 3;
    } else if (c_half->parsed()) {
      emit(out_path, io::halfcircle_csv(circlekit::halfcircle_example(order)));
    } else if (c_factor->parsed()) {
      const circlekit::AnalyticPoly g = circlekit::fejer_riesz_factor(
          io::trigpoly_from_json(io::read_file(poly_path)));
      emit(out_path, io::to_json(g));
    }
    return 0;
  } catch (const circlekit::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return 2;
  } catch (const circlekit::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
