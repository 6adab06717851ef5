#include "circlekit/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "circlekit/errors.hpp"

namespace circlekit::io {

namespace {

using nlohmann::json;

json complex_to_json(Complex z) { return json{{"im", z.imag()}, {"re", z.real()}}; }

Complex complex_from_json(const json& j) {
  return Complex(j.at("re").get<double>(), j.at("im").get<double>());
}

json matrix_to_json(const Eigen::MatrixXcd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::MatrixXcd matrix_from_json(const json& j) {
  const auto rows = static_cast<Eigen::Index>(j.size());
  if (rows == 0) return Eigen::MatrixXcd(0, 0);
  const auto cols = static_cast<Eigen::Index>(j.at(0).size());
  Eigen::MatrixXcd m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (static_cast<Eigen::Index>(j.at(i).size()) != cols)
      throw ValidationError("ragged matrix rows in JSON");
    for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = complex_from_json(j.at(i).at(k));
  }
  return m;
}

json trigpoly_to_obj(const TrigPoly& p) {
  json coeffs = json::array();
  const int lo = p.is_real() ? 0 : -p.degree();
  for (int j = lo; j <= p.degree(); ++j) {
    const Complex c = p.coeff(j);
    coeffs.push_back(json{{"im", c.imag()}, {"j", j}, {"re", c.real()}});
  }
  return json{{"coeffs", std::move(coeffs)}, {"real", p.is_real()}};
}

TrigPoly trigpoly_from_obj(const json& j) {
  const bool real = j.at("real").get<bool>();
  int deg = 0;
  for (const auto& c : j.at("coeffs")) deg = std::max(deg, std::abs(c.at("j").get<int>()));
  std::vector<Complex> full(static_cast<size_t>(2 * deg + 1));
  for (const auto& c : j.at("coeffs")) {
    const int idx = c.at("j").get<int>();
    full[static_cast<size_t>(idx + deg)] =
        Complex(c.at("re").get<double>(), c.at("im").get<double>());
  }
  if (real)
    for (int n = 1; n <= deg; ++n)
      full[static_cast<size_t>(deg - n)] = std::conj(full[static_cast<size_t>(deg + n)]);
  return TrigPoly::from_full(full);
}

json atoms_to_json(const std::vector<Atom>& atoms) {
  json arr = json::array();
  for (const Atom& a : atoms)
    arr.push_back(json{{"angle", a.angle}, {"weight", a.weight}});
  return arr;
}

std::vector<Atom> atoms_from_json(const json& j) {
  std::vector<Atom> out;
  for (const auto& a : j)
    out.push_back(Atom{a.at("angle").get<double>(), a.at("weight").get<double>()});
  return out;
}

json measure_to_obj(const CircleMeasure& mu) {
  json density;
  if (mu.density().sampled()) {
    density = json{{"grid", mu.density().grid_size()},
                   {"samples", mu.density().samples()}};
  } else {
    density = trigpoly_to_obj(mu.density().poly());
  }
  return json{{"atoms", atoms_to_json(mu.atoms())}, {"density", std::move(density)}};
}

CircleMeasure measure_from_obj(const json& j) {
  std::vector<Atom> atoms = atoms_from_json(j.at("atoms"));
  const json& d = j.at("density");
  if (d.contains("samples")) {
    auto samples = d.at("samples").get<std::vector<double>>();
    if (d.contains("grid") &&
        d.at("grid").get<int>() != static_cast<int>(samples.size()))
      throw ValidationError("sample grid field disagrees with sample count");
    return CircleMeasure::from_samples(std::move(samples), std::move(atoms));
  }
  return CircleMeasure::from_density(trigpoly_from_obj(d), std::move(atoms));
}

// rn_residual may be NaN (deconvolution unavailable); JSON carries null.
json finite_or_null(double v) {
  if (std::isfinite(v)) return json(v);
  return json(nullptr);
}

double finite_from(const json& j) {
  if (j.is_null()) return std::numeric_limits<double>::quiet_NaN();
  return j.get<double>();
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Malformed input (parse errors, missing keys, wrong shapes) is a validation
// failure, not a library bug; fold the JSON library's exceptions accordingly.
template <class Decode>
auto decode(const std::string& text, Decode&& dec) {
  try {
    return dec(json::parse(text));
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

std::string to_json(const TrigPoly& p) { return trigpoly_to_obj(p).dump(2); }

TrigPoly trigpoly_from_json(const std::string& text) {
  return decode(text, [](const json& j) { return trigpoly_from_obj(j); });
}

std::string to_json(const AnalyticPoly& g) {
  json coeffs = json::array();
  for (const Complex& c : g.coeffs) coeffs.push_back(complex_to_json(c));
  return json{{"coeffs", std::move(coeffs)}}.dump(2);
}

AnalyticPoly analytic_from_json(const std::string& text) {
  return decode(text, [](const json& j) {
    AnalyticPoly g;
    g.coeffs.clear();
    for (const auto& c : j.at("coeffs")) g.coeffs.push_back(complex_from_json(c));
    if (g.coeffs.empty()) g.coeffs.push_back(Complex(0.0, 0.0));
    return g;
  });
}

std::string to_json(const CircleMeasure& mu) { return measure_to_obj(mu).dump(2); }

CircleMeasure measure_from_json(const std::string& text) {
  return decode(text, [](const json& j) { return measure_from_obj(j); });
}

std::string to_json(const KernelGram& g) {
  json points = json::array();
  for (const Complex& z : g.points) points.push_back(complex_to_json(z));
  return json{{"entries", matrix_to_json(g.entries)}, {"points", std::move(points)}}
      .dump(2);
}

KernelGram gram_from_json(const std::string& text) {
  return decode(text, [](const json& j) {
    KernelGram g;
    for (const auto& p : j.at("points")) g.points.push_back(complex_from_json(p));
    g.entries = matrix_from_json(j.at("entries"));
    if (static_cast<int>(g.points.size()) != g.dim())
      throw ValidationError("gram point count disagrees with matrix size");
    return g;
  });
}

std::string to_json(const FormPair& fp) {
  return json{{"A", matrix_to_json(fp.A)}, {"B", matrix_to_json(fp.B)}}.dump(2);
}

FormPair form_pair_from_json(const std::string& text) {
  return decode(text, [](const json& j) {
    return FormPair::checked(matrix_from_json(j.at("A")), matrix_from_json(j.at("B")));
  });
}

std::string to_json(const FormDecomposition& fd) {
  return json{{"A_ac", matrix_to_json(fd.A_ac)},
              {"A_s", matrix_to_json(fd.A_s)},
              {"converged", fd.converged},
              {"iterations", fd.iterations}}
      .dump(2);
}

FormDecomposition form_decomposition_from_json(const std::string& text) {
  return decode(text, [](const json& j) {
    FormDecomposition fd;
    fd.A_ac = matrix_from_json(j.at("A_ac"));
    fd.A_s = matrix_from_json(j.at("A_s"));
    fd.iterations = j.at("iterations").get<int>();
    fd.converged = j.at("converged").get<bool>();
    return fd;
  });
}

std::string to_json(const FiniteKernel& k) {
  return json{{"entries", matrix_to_json(k.entries)}, {"n", k.set_size()}}.dump(2);
}

FiniteKernel finite_kernel_from_json(const std::string& text) {
  return decode(text, [](const json& j) {
    FiniteKernel k{matrix_from_json(j.at("entries"))};
    if (j.at("n").get<int>() != k.set_size())
      throw ValidationError("kernel size field disagrees with matrix size");
    return k;
  });
}

namespace {

const char* strategy_name(Strategy s) {
  return s == Strategy::DirectNonExtreme ? "DirectNonExtreme" : "AddLebesgue";
}

Strategy strategy_from(const std::string& s) {
  if (s == "DirectNonExtreme") return Strategy::DirectNonExtreme;
  if (s == "AddLebesgue") return Strategy::AddLebesgue;
  throw ValidationError("unknown strategy: " + s);
}

const char* invariance_name(Invariance v) {
  switch (v) {
    case Invariance::Reducing: return "Reducing";
    case Invariance::NotReducing: return "NotReducing";
    default: return "Unknown";
  }
}

Invariance invariance_from(const std::string& s) {
  if (s == "Reducing") return Invariance::Reducing;
  if (s == "NotReducing") return Invariance::NotReducing;
  if (s == "Unknown") return Invariance::Unknown;
  throw ValidationError("unknown invariance verdict: " + s);
}

}  // namespace

std::string to_json(const DecompositionReport& rep) {
  json traces = json::array();
  for (const TraceEntry& t : rep.traces)
    traces.push_back(json{{"N", t.N},
                          {"ac_mass", t.ac_mass},
                          {"intersection_rank", t.intersection_rank},
                          {"rn_residual", finite_or_null(t.rn_residual)}});
  return json{{"detected_lam_atoms", atoms_to_json(rep.detected_lam_atoms)},
              {"detected_mu_atoms", atoms_to_json(rep.detected_mu_atoms)},
              {"invariance", invariance_name(rep.invariance)},
              {"mu_ac", measure_to_obj(rep.mu_ac)},
              {"mu_s", measure_to_obj(rep.mu_s)},
              {"strategy", strategy_name(rep.strategy)},
              {"traces", std::move(traces)}}
      .dump(2);
}

DecompositionReport decomposition_report_from_json(const std::string& text) {
  return decode(text, [](const json& j) {
    DecompositionReport rep;
    rep.mu_ac = measure_from_obj(j.at("mu_ac"));
    rep.mu_s = measure_from_obj(j.at("mu_s"));
    rep.strategy = strategy_from(j.at("strategy").get<std::string>());
    rep.invariance = invariance_from(j.at("invariance").get<std::string>());
    for (const auto& t : j.at("traces")) {
      TraceEntry e;
      e.N = t.at("N").get<int>();
      e.ac_mass = t.at("ac_mass").get<double>();
      e.rn_residual = finite_from(t.at("rn_residual"));
      e.intersection_rank = t.at("intersection_rank").get<int>();
      rep.traces.push_back(e);
    }
    rep.detected_mu_atoms = atoms_from_json(j.at("detected_mu_atoms"));
    rep.detected_lam_atoms = atoms_from_json(j.at("detected_lam_atoms"));
    return rep;
  });
}

std::string radial_trace_csv(const std::vector<double>& thetas,
                             const std::vector<double>& radii,
                             const std::vector<std::vector<double>>& re_H,
                             const std::vector<std::vector<double>>& fatou) {
  if (re_H.size() != radii.size() || fatou.size() != radii.size())
    throw ValidationError("trace rows do not match the radius list");
  std::ostringstream out;
  out << "theta,r,re_H,fatou_quotient\n";
  for (size_t k = 0; k < radii.size(); ++k) {
    if (re_H[k].size() != thetas.size() || fatou[k].size() != thetas.size())
      throw ValidationError("trace columns do not match the angle list");
    for (size_t j = 0; j < thetas.size(); ++j)
      out << fmt(thetas[j]) << ',' << fmt(radii[k]) << ',' << fmt(re_H[k][j]) << ','
          << fmt(fatou[k][j]) << '\n';
  }
  return out.str();
}

std::string decompose_trace_csv(const std::vector<TraceEntry>& traces) {
  std::ostringstream out;
  out << "N,ac_mass,rn_residual,intersection_rank\n";
  for (const TraceEntry& t : traces)
    out << t.N << ',' << fmt(t.ac_mass) << ',' << fmt(t.rn_residual) << ','
        << t.intersection_rank << '\n';
  return out.str();
}

std::string halfcircle_csv(const HalfCircleReport& rep) {
  std::ostringstream out;
  out << "j,moment_re,moment_im,series_re,series_im,abs_diff\n";
  for (int j = 0; j <= rep.order; ++j) {
    const Complex a = rep.coeffs_moment[static_cast<size_t>(j)];
    const Complex b = rep.coeffs_series[static_cast<size_t>(j)];
    out << j << ',' << fmt(a.real()) << ',' << fmt(a.imag()) << ',' << fmt(b.real())
        << ',' << fmt(b.imag()) << ',' << fmt(std::abs(a - b)) << '\n';
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path);
  out << content;
}

}  // namespace circlekit::io
