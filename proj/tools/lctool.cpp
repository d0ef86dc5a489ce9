// lctool: batch verification and table generation for the LCT library.
//
// Exit codes: 0 success, 1 numerical-contract failure, 2 invalid input.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lct/lct.hpp"

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

lct::Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return lct::Json::parse(in);
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << text;
}

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int cmd_lct_check(const std::string& input, double tol) {
  const lct::LctMatrix m = lct::lct_from_json(load_json(input));
  const double res = lct::symplectic_residual(m);
  const bool ok = res < tol;
  std::cout << "residual " << fmt(res) << ", symplectic: " << (ok ? "yes" : "no") << "\n";
  return ok ? 0 : 1;
}

int cmd_lct_random(int plus, int minus, unsigned long long seed, const std::string& out) {
  const lct::LctMatrix m = lct::random_lct(lct::Metric(plus, minus), seed);
  write_text(out, lct::lct_to_json(m).dump(2) + "\n");
  return 0;
}

int cmd_state_transform(const std::string& state_path, const std::string& lct_path,
                        const std::string& out) {
  const lct::GaussianState s = lct::state_from_json(load_json(state_path));
  const lct::LctMatrix m = lct::lct_from_json(load_json(lct_path));
  if (s.metric != m.metric) throw std::invalid_argument("state/LCT metric mismatch");
  const double inv_before = lct::covariance_invariant(s.cov);
  const lct::GaussianState t = lct::apply_lct(s, m);
  const double inv_after = lct::covariance_invariant(t.cov);
  std::cout << "invariant before " << fmt(inv_before) << ", after " << fmt(inv_after) << "\n";
  write_text(out, lct::state_to_json(t).dump(2) + "\n");
  const double scale = std::max(1.0, std::abs(inv_before));
  if (std::abs(inv_after - inv_before) > 1e-9 * scale)
    throw ValidationError("covariance invariant drifted");
  return 0;
}

int cmd_spectrum(int modes, int nmax, const std::string& out) {
  if (modes < 1 || modes > 4 || nmax < 1 || nmax > 64)
    throw std::invalid_argument("spectrum: modes in 1..4, nmax in 1..64");
  double budget = modes * std::log(nmax + 1.0);
  if (budget > std::log(2e5)) throw std::invalid_argument("spectrum: memory budget exceeded");
  const lct::FockSpace space(modes, nmax);
  const lct::FockOperator zp = lct::invariant_zplus(space);
  std::ostringstream csv;
  csv << "index,eigenvalue,n_total\n";
  std::vector<long> level_count(modes * nmax + 1, 0);
  for (long i = 0; i < space.dim(); ++i) {
    const std::vector<int> n = space.occupation(i);
    long total = 0;
    for (int v : n) total += v;
    level_count[total] += 1;
    csv << i << "," << fmt(zp.matrix(i, i).real()) << "," << total << "\n";
  }
  // Interior degeneracy check against the multiset count (k+D-1 choose D-1).
  for (long k = 0; k <= nmax; ++k) {
    double expect = 1.0;
    for (int j = 1; j < modes; ++j) expect *= static_cast<double>(k + j) / j;
    if (level_count[k] != std::llround(expect))
      throw ValidationError("spectrum degeneracy mismatch at level " + std::to_string(k));
  }
  write_text(out, csv.str());
  return 0;
}

std::vector<double> parse_range(const std::string& spec) {
  // "start:stop:count", log-spaced.
  double lo, hi;
  int count;
  if (std::sscanf(spec.c_str(), "%lf:%lf:%d", &lo, &hi, &count) != 3 || !(lo > 0) ||
      !(hi >= lo) || count < 1)
    throw std::invalid_argument("range must be start:stop:count with 0 < start <= stop");
  std::vector<double> v;
  for (int i = 0; i < count; ++i) {
    const double t = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
    v.push_back(lo * std::pow(hi / lo, t));
  }
  return v;
}

int cmd_thermo_table(const std::string& beta_range, const std::string& volume_range, double mass,
                     long particles, double planck_h, const std::string& out) {
  if (!(mass > 0) || particles < 1 || !(planck_h > 0))
    throw std::invalid_argument("thermo-table: positive mass, particles, h required");
  std::ostringstream csv;
  csv << "T,V,x,PV_over_NkT,F,S_over_k\n";
  for (double beta : parse_range(beta_range)) {
    for (double v : parse_range(volume_range)) {
      const double kT = 1.0 / beta;
      const double x = lct::correction_variable(kT, v, mass, planck_h);
      const double b = lct::variance_from_thermo(kT, v, mass, planck_h);
      const double pv = lct::pressure(particles, kT, v, mass, planck_h) * v / (particles * kT);
      const double f = lct::free_energy(particles, kT, v, mass, planck_h);
      const double s = lct::entropy_closed_form(beta, b, mass);
      csv << fmt(kT) << "," << fmt(v) << "," << fmt(x) << "," << fmt(pv) << "," << fmt(f) << ","
          << fmt(s) << "\n";
    }
  }
  write_text(out, csv.str());
  return 0;
}

int cmd_fermion_table(const std::string& n_spec, const std::string& out) {
  std::vector<int> n_label;
  if (!n_spec.empty()) {
    std::stringstream ss(n_spec);
    std::string item;
    while (std::getline(ss, item, ',')) n_label.push_back(std::stoi(item));
    if (n_label.size() != 5) throw std::invalid_argument("--n must have 5 entries");
  }
  std::ostringstream csv;
  csv << "f0,f1,f2,f3,f4,f_total,I3,YW,Q,label\n";
  for (const lct::FermionRow& row : lct::classify_fermions(n_label)) {
    csv << row.f_bits[0] << "," << row.f_bits[1] << "," << row.f_bits[2] << "," << row.f_bits[3]
        << "," << row.f_bits[4] << "," << row.f_total << "," << row.i3.str() << ","
        << row.yw.str() << "," << row.q.str() << "," << row.label << "\n";
  }
  write_text(out, csv.str());
  return 0;
}

struct Verdict {
  int failures = 0;
  void report(const std::string& name, bool ok, double residual) {
    std::cout << (ok ? "ok   " : "FAIL ") << name << " (residual " << fmt(residual) << ")\n";
    if (!ok) ++failures;
  }
};

int cmd_verify_all(unsigned long long seed, double tol) {
  using namespace lct;
  Verdict v;

  // Symplectic laws across signatures.
  {
    double worst = 0.0;
    const Metric metrics[] = {Metric(0, 1), Metric(1, 1), Metric(2, 0), Metric(1, 4)};
    for (const Metric& metric : metrics)
      for (int k = 0; k < 100; ++k)
        worst = std::max(worst, symplectic_residual(random_lct(metric, seed + k)));
    v.report("symplectic condition, 400 random LCTs", worst < 1e-9, worst);

    const LctMatrix m = random_lct(Metric(1, 1), seed + 5);
    const Mat prod = compose(m, inverse(m)).assembled();
    const double res = (prod - Mat::Identity(prod.rows(), prod.cols())).cwiseAbs().maxCoeff();
    v.report("two-sided inverse", res < 1e-10, res);
  }

  // Covariance determinant invariance.
  {
    double worst = 0.0;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.3, 1.5);
    for (int k = 0; k < 100; ++k) {
      Mat x(1, 1), rho(1, 1);
      x << uni(rng);
      rho << uni(rng) - 0.9;
      const GaussianState s =
          make_minimal_state(MeanVector(Vec::Zero(1), Vec::Zero(1)), x, rho, Metric(0, 1));
      const LctMatrix m = random_lct(Metric(0, 1), seed + 1000 + k);
      const double before = covariance_invariant(s.cov);
      const double after = covariance_invariant(apply_lct(s, m).cov);
      worst = std::max(worst, std::abs(after - before) / std::abs(before));
    }
    v.report("covariance invariant under 100 random LCTs", worst < 1e-9, worst);
  }

  // Spectrum of the invariant operator.
  {
    double worst = 0.0;
    for (int d = 1; d <= 3; ++d) {
      const FockSpace space(d, 5);
      const FockOperator zp = invariant_zplus(space);
      for (long i = 0; i < space.dim(); ++i) {
        const std::vector<int> n = space.occupation(i);
        long total = 0;
        for (int val : n) total += val;
        worst = std::max(worst, std::abs(zp.matrix(i, i).real() - (0.5 * total + 0.25 * d)));
      }
    }
    v.report("invariant operator spectrum D=1..3", worst < 1e-10, worst);
  }

  // Thermodynamic identities.
  {
    const double x = 0.5;
    const double closed = partition_single_3d(1.0, x, 1.0);
    double direct = 0.0;
    for (int n1 = 0; n1 < 60; ++n1)
      for (int n2 = 0; n2 < 60; ++n2)
        for (int n3 = 0; n3 < 60; ++n3) direct += std::exp(-x * (2.0 * (n1 + n2 + n3) + 3.0));
    const double res = std::abs(direct - closed) / closed;
    v.report("partition function vs Boltzmann sum", res < 1e-12, res);

    const CanonicalDensity rho = canonical_density_and_entropy(1.0, 0.5, 1.0, 16);
    const double sres = std::abs(rho.entropy_over_k - entropy_closed_form(1.0, 0.5, 1.0));
    v.report("entropy identity S/k = beta U + ln Z", sres < 1e-9, sres);
  }

  // Clifford identities (build_clifford self-checks throw on failure).
  {
    bool ok = true;
    double worst = 0.0;
    try {
      const CliffordRep rep = build_clifford(Metric(1, 4));
      const CMat sigma = sigma_invariant(rep);
      const auto xi = xi_generators(rep);
      for (int mu = 0; mu < 5; ++mu)
        for (int nu = 0; nu < 5; ++nu)
          worst = std::max(worst,
                           (sigma * xi[mu][nu] - xi[mu][nu] * sigma).cwiseAbs().maxCoeff());
    } catch (const std::exception&) {
      ok = false;
    }
    v.report("Clifford suite Cl(2,8), [Sigma, Xi] = 0", ok && worst < 1e-12, worst);
  }

  // Fermion table internal consistency.
  {
    bool ok = true;
    std::array<int, 6> hist{};
    for (const FermionRow& row : classify_fermions()) {
      hist[row.f_total] += 1;
      if (row.q != row.i3 + Rational(row.yw.num, row.yw.den * 2)) ok = false;
    }
    ok = ok && hist == std::array<int, 6>{1, 5, 10, 10, 5, 1};
    v.report("fermion table Q = I3 + YW/2 and binomial histogram", ok, 0.0);
  }

  std::cout << (v.failures == 0 ? "all checks passed" : "FAILURES: " + std::to_string(v.failures))
            << " (tol flag " << fmt(tol) << ")\n";
  return v.failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LCT algebra toolbox: verification suites and table generation"};
  app.require_subcommand(1);

  double tol = 1e-10;
  unsigned long long seed = 0;
  int nmax = 12, modes = 1, plus = 0, minus = 1;
  long particles = 1;
  double mass = 1.0, planck_h = 2.0 * M_PI;
  std::string input, input2, output, beta_range = "1:1:1", volume_range = "1:1:1", n_spec;

  auto* check = app.add_subcommand("lct-check", "verify the symplectic condition of a JSON LCT");
  check->add_option("input", input, "LctMatrix JSON file")->required();
  check->add_option("--tol", tol, "residual tolerance");

  auto* rnd = app.add_subcommand("lct-random", "emit a seeded random LCT as JSON");
  rnd->add_option("--seed", seed, "RNG seed");
  rnd->add_option("--plus", plus, "metric plus count");
  rnd->add_option("--minus", minus, "metric minus count");
  rnd->add_option("-o,--output", output, "output path (default stdout)");

  auto* st = app.add_subcommand("state-transform", "apply a JSON LCT to a JSON Gaussian state");
  st->add_option("state", input, "GaussianState JSON file")->required();
  st->add_option("lct", input2, "LctMatrix JSON file")->required();
  st->add_option("-o,--output", output, "output path (default stdout)");

  auto* sp = app.add_subcommand("spectrum", "dump the invariant-operator spectrum as CSV");
  sp->add_option("--modes", modes, "mode count D");
  sp->add_option("--nmax", nmax, "per-mode cutoff");
  sp->add_option("-o,--output", output, "output path (default stdout)");

  auto* tt = app.add_subcommand("thermo-table", "state-equation table over (T, V) grid");
  tt->add_option("--beta-range", beta_range, "beta grid start:stop:count (log-spaced)");
  tt->add_option("--volume-range", volume_range, "volume grid start:stop:count (log-spaced)");
  tt->add_option("--mass", mass, "particle mass");
  tt->add_option("--particles", particles, "particle count N");
  tt->add_option("--planck-h", planck_h, "Planck constant h (default 2*pi)");
  tt->add_option("-o,--output", output, "output path (default stdout)");

  auto* ft = app.add_subcommand("fermion-table", "emit the 32-row fermion classification CSV");
  ft->add_option("--n", n_spec, "occupation label n0,n1,n2,n3,n4 (passthrough)");
  ft->add_option("-o,--output", output, "output path (default stdout)");

  auto* va = app.add_subcommand("verify-all", "run every invariant suite and print a summary");
  va->add_option("--seed", seed, "RNG seed");
  va->add_option("--tol", tol, "tolerance flag (informational)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return cmd_lct_check(input, tol);
    if (rnd->parsed()) return cmd_lct_random(plus, minus, seed, output);
    if (st->parsed()) return cmd_state_transform(input, input2, output);
    if (sp->parsed()) return cmd_spectrum(modes, nmax, output);
    if (tt->parsed())
      return cmd_thermo_table(beta_range, volume_range, mass, particles, planck_h, output);
    if (ft->parsed()) return cmd_fermion_table(n_spec, output);
    if (va->parsed()) return cmd_verify_all(seed, tol);
  } catch (const ValidationError& e) {
    std::cerr << "numerical contract failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
