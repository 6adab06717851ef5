#include "circlekit/measure.hpp"

#include <algorithm>
#include <cmath>

#include "circlekit/errors.hpp"

namespace circlekit {

namespace {

constexpr double kAtomSeparation = 1e-9;
constexpr int kDefaultGrid = 4096;

std::vector<Atom> normalize_atoms(std::vector<Atom> atoms) {
  for (Atom& a : atoms) {
    if (a.weight < 0.0) throw ValidationError("atom weight must be positive");
    a.angle = wrap_angle(a.angle);
  }
  std::erase_if(atoms, [](const Atom& a) { return a.weight == 0.0; });
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& a, const Atom& b) { return a.angle < b.angle; });
  std::vector<Atom> merged;
  for (const Atom& a : atoms) {
    if (!merged.empty() && angle_dist(merged.back().angle, a.angle) <= kAtomSeparation)
      merged.back().weight += a.weight;
    else
      merged.push_back(a);
  }
  return merged;
}

}  // namespace

CircleFunction CircleFunction::from_poly(TrigPoly p) {
  CircleFunction f;
  f.sampled_ = false;
  f.poly_ = std::move(p);
  return f;
}

CircleFunction CircleFunction::from_samples(std::vector<double> samples) {
  if (!is_power_of_two(static_cast<int>(samples.size())))
    throw ValidationError("sampled density grid must be a power of two");
  CircleFunction f;
  f.sampled_ = true;
  f.samples_ = std::move(samples);
  return f;
}

double CircleFunction::at(double theta) const {
  if (!sampled_) return poly_.eval(theta).real();
  const int M = grid_size();
  const int j = static_cast<int>(std::llround(wrap_angle(theta) / kTwoPi * M)) % M;
  return samples_[static_cast<size_t>(j)];
}

std::vector<double> CircleFunction::on_grid(int n) const {
  if (!sampled_) return poly_.sample(n);
  const int M = grid_size();
  if (n == M) return samples_;
  if (n < M && M % n == 0) {
    std::vector<double> out(static_cast<size_t>(n));
    const int stride = M / n;
    for (int j = 0; j < n; ++j)
      out[static_cast<size_t>(j)] = samples_[static_cast<size_t>(j * stride)];
    return out;
  }
  throw ValidationError("requested grid does not align with the native sample grid");
}

double CircleFunction::mean() const {
  if (!sampled_) return poly_.coeff(0).real();
  double s = 0.0;
  for (double v : samples_) s += v;
  return s / static_cast<double>(samples_.size());
}

CircleMeasure::CircleMeasure() : density_(CircleFunction::from_poly(TrigPoly::constant(0.0))) {}

CircleMeasure CircleMeasure::from_function(const CircleFunction& density,
                                           std::vector<Atom> atoms) {
  CircleMeasure mu;
  if (density.sampled()) {
    std::vector<double> s = density.samples();
    double scale = 1.0;
    for (double v : s) scale = std::max(scale, std::fabs(v));
    for (double& v : s) {
      if (v < -1e-10 * scale)
        throw NotNonnegative("sampled density attains " + std::to_string(v));
      if (v < 0.0) v = 0.0;
    }
    mu.density_ = CircleFunction::from_samples(std::move(s));
  } else {
    const TrigPoly& p = density.poly();
    const double scale = p.coeff_abs_sum();
    if (!p.is_real()) throw ValidationError("density polynomial must be real-flagged");
    double minval = 0.0;
    for (int j = 0; j < kDefaultGrid; ++j)
      minval = std::min(minval, p.eval(kTwoPi * j / kDefaultGrid).real());
    if (minval < -1e-10 * scale)
      throw NotNonnegative("density polynomial attains " + std::to_string(minval));
    mu.density_ = density;
  }
  mu.atoms_ = normalize_atoms(std::move(atoms));
  return mu;
}

CircleMeasure CircleMeasure::from_density(TrigPoly density, std::vector<Atom> atoms) {
  return from_function(CircleFunction::from_poly(std::move(density)), std::move(atoms));
}

CircleMeasure CircleMeasure::from_samples(std::vector<double> samples,
                                          std::vector<Atom> atoms) {
  return from_function(CircleFunction::from_samples(std::move(samples)), std::move(atoms));
}

CircleMeasure CircleMeasure::lebesgue() {
  return from_density(TrigPoly::constant(1.0));
}

// Indicator of the open upper (lower) half circle; jump samples carry the
// half value so that upper + lower is exactly the constant 1 and the mean is
// exactly 1/2.
CircleMeasure CircleMeasure::lebesgue_upper(int grid) {
  std::vector<double> s(static_cast<size_t>(grid), 0.0);
  for (int j = 0; j < grid; ++j) {
    if (2 * j == 0 || 2 * j == grid)
      s[static_cast<size_t>(j)] = 0.5;
    else if (2 * j < grid)
      s[static_cast<size_t>(j)] = 1.0;
  }
  return from_samples(std::move(s));
}

CircleMeasure CircleMeasure::lebesgue_lower(int grid) {
  std::vector<double> up = lebesgue_upper(grid).density().samples();
  for (double& v : up) v = 1.0 - v;
  return from_samples(std::move(up));
}

CircleMeasure CircleMeasure::point_mass(double angle, double weight) {
  return from_density(TrigPoly::constant(0.0), {{angle, weight}});
}

double CircleMeasure::atom_mass() const {
  double s = 0.0;
  for (const Atom& a : atoms_) s += a.weight;
  return s;
}

bool CircleMeasure::is_zero() const {
  return atoms_.empty() &&
         (density_.sampled()
              ? std::all_of(density_.samples().begin(), density_.samples().end(),
                            [](double v) { return v == 0.0; })
              : density_.poly().is_zero());
}

Complex MomentSequence::at(long n) const {
  const long a = std::labs(n);
  if (a > N) return {0.0, 0.0};
  const Complex v = vals[static_cast<size_t>(a)];
  return n >= 0 ? v : std::conj(v);
}

Eigen::MatrixXcd MomentSequence::toeplitz() const {
  Eigen::MatrixXcd T(N + 1, N + 1);
  for (int i = 0; i <= N; ++i)
    for (int j = 0; j <= N; ++j) T(i, j) = at(j - i);
  return T;
}

Complex moment_at(const CircleMeasure& mu, long n) {
  Complex acc(0.0, 0.0);
  const CircleFunction& d = mu.density();
  if (d.sampled()) {
    const int M = d.grid_size();
    const auto& s = d.samples();
    for (int k = 0; k < M; ++k)
      acc += s[static_cast<size_t>(k)] *
             std::conj(unit(static_cast<double>(n) * kTwoPi * k / M));
    acc /= static_cast<double>(M);
  } else {
    acc = d.poly().coeff(static_cast<int>(n));
  }
  for (const Atom& a : mu.atoms())
    acc += a.weight * std::conj(unit(static_cast<double>(n) * a.angle));
  return acc;
}

MomentSequence moments(const CircleMeasure& mu, int N) {
  if (N < 0) throw ValidationError("moments needs N >= 0");
  MomentSequence ms;
  ms.N = N;
  ms.vals.resize(static_cast<size_t>(N + 1));
  for (int n = 0; n <= N; ++n) ms.vals[static_cast<size_t>(n)] = moment_at(mu, n);
  ms.vals[0] = Complex(ms.vals[0].real(), 0.0);
  return ms;
}

CircleMeasure combine(double a, const CircleMeasure& mu, double b, const CircleMeasure& nu) {
  if (a < 0.0 || b < 0.0) throw ValidationError("combine needs nonnegative coefficients");
  std::vector<Atom> atoms;
  for (const Atom& at : mu.atoms())
    if (a * at.weight > 0.0) atoms.push_back({at.angle, a * at.weight});
  for (const Atom& at : nu.atoms())
    if (b * at.weight > 0.0) atoms.push_back({at.angle, b * at.weight});

  const CircleFunction& dm = mu.density();
  const CircleFunction& dn = nu.density();
  if (!dm.sampled() && !dn.sampled()) {
    TrigPoly p = dm.poly().scaled(a).plus(dn.poly().scaled(b));
    return CircleMeasure::from_density(std::move(p), std::move(atoms));
  }
  const int grid = std::max({dm.sampled() ? dm.grid_size() : 0,
                             dn.sampled() ? dn.grid_size() : 0});
  std::vector<double> sm = dm.on_grid(grid);
  std::vector<double> sn = dn.on_grid(grid);
  for (int j = 0; j < grid; ++j)
    sm[static_cast<size_t>(j)] = a * sm[static_cast<size_t>(j)] + b * sn[static_cast<size_t>(j)];
  return CircleMeasure::from_samples(std::move(sm), std::move(atoms));
}

ClassicalDecomposition classical_decompose_oracle(const CircleMeasure& mu,
                                                  const CircleMeasure& lam,
                                                  double eps_supp) {
  // Split atoms of mu by co-location with atoms of lam.
  std::vector<Atom> ac_atoms, s_atoms;
  for (const Atom& a : mu.atoms()) {
    bool matched = false;
    for (const Atom& b : lam.atoms())
      if (angle_dist(a.angle, b.angle) <= kAtomSeparation) matched = true;
    (matched ? ac_atoms : s_atoms).push_back(a);
  }

  // Split the density by the support indicator of lam's density.
  const CircleFunction& fl = lam.density();
  const int grid = fl.sampled() ? fl.grid_size() : kDefaultGrid;
  std::vector<double> ls = fl.on_grid(grid);
  double lmax = 0.0;
  for (double v : ls) lmax = std::max(lmax, v);
  const double cut = eps_supp * lmax;

  bool all_in = lmax > 0.0, all_out = true;
  for (double v : ls) {
    if (v <= cut) all_in = false;
    else all_out = false;
  }

  CircleFunction ac_density, s_density;
  if (all_in) {
    ac_density = mu.density();
    s_density = CircleFunction::from_poly(TrigPoly::constant(0.0));
  } else if (all_out) {
    ac_density = CircleFunction::from_poly(TrigPoly::constant(0.0));
    s_density = mu.density();
  } else {
    const int g = std::max(grid, mu.density().sampled() ? mu.density().grid_size()
                                                        : kDefaultGrid);
    std::vector<double> ms = mu.density().on_grid(g);
    std::vector<double> lg = fl.on_grid(g);
    std::vector<double> ac(static_cast<size_t>(g)), sg(static_cast<size_t>(g));
    for (int j = 0; j < g; ++j) {
      const bool in = lg[static_cast<size_t>(j)] > cut;
      ac[static_cast<size_t>(j)] = in ? ms[static_cast<size_t>(j)] : 0.0;
      sg[static_cast<size_t>(j)] = in ? 0.0 : ms[static_cast<size_t>(j)];
    }
    ac_density = CircleFunction::from_samples(std::move(ac));
    s_density = CircleFunction::from_samples(std::move(sg));
  }

  return {CircleMeasure::from_function(ac_density, std::move(ac_atoms)),
          CircleMeasure::from_function(s_density, std::move(s_atoms))};
}

CircleFunction rn_derivative_oracle(const CircleMeasure& mu, const CircleMeasure& lam,
                                    double eps_supp) {
  const ClassicalDecomposition dec = classical_decompose_oracle(mu, lam, eps_supp);
  if (dec.s.total_mass() > 1e-12 * std::max(1.0, mu.total_mass()))
    throw NotAbsolutelyContinuous("singular part has mass " +
                                  std::to_string(dec.s.total_mass()));

  const CircleFunction& fl = lam.density();
  const CircleFunction& fm = mu.density();

  // Constant reference density divides exactly; trig-poly numerators stay
  // trig polynomials.
  if (!fl.sampled() && fl.poly().degree() == 0 && lam.atoms().empty()) {
    const double c = fl.poly().coeff(0).real();
    if (c <= 0.0) throw NotAbsolutelyContinuous("reference density vanishes");
    if (!fm.sampled()) return CircleFunction::from_poly(fm.poly().scaled(1.0 / c));
    std::vector<double> q = fm.samples();
    for (double& v : q) v /= c;
    return CircleFunction::from_samples(std::move(q));
  }

  const int g = std::max({kDefaultGrid, fl.sampled() ? fl.grid_size() : 0,
                          fm.sampled() ? fm.grid_size() : 0});
  std::vector<double> ms = fm.on_grid(g);
  std::vector<double> ls = fl.on_grid(g);
  double lmax = 0.0;
  for (double v : ls) lmax = std::max(lmax, v);
  const double cut = eps_supp * std::max(lmax, 1e-300);
  std::vector<double> q(static_cast<size_t>(g), 0.0);
  for (int j = 0; j < g; ++j)
    if (ls[static_cast<size_t>(j)] > cut)
      q[static_cast<size_t>(j)] = ms[static_cast<size_t>(j)] / ls[static_cast<size_t>(j)];

  // Atom-to-atom weight ratios land on their grid samples; for on-grid atoms
  // the lookup in the moment check hits them exactly.
  for (const Atom& b : lam.atoms()) {
    double wmu = 0.0;
    for (const Atom& a : mu.atoms())
      if (angle_dist(a.angle, b.angle) <= kAtomSeparation) wmu = a.weight;
    const int j = static_cast<int>(std::llround(b.angle / kTwoPi * g)) % g;
    q[static_cast<size_t>(j)] = wmu / b.weight;
  }
  return CircleFunction::from_samples(std::move(q));
}

}  // namespace circlekit
