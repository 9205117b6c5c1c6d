#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "spinthermal/analysis.hpp"
#include "spinthermal/cli/run.hpp"
#include "spinthermal/concurrence.hpp"
#include "spinthermal/thermal.hpp"

namespace spinthermal::cli {

namespace {

Check compare(std::string name, std::string origin, double observed, double expected, double tol) {
  const bool ok = std::abs(observed - expected) <= tol;
  return {std::move(name), std::move(origin), observed, expected, tol, ok};
}

// Largest deviation between the numeric spectrum and a reference multiset.
double spectrum_deviation(const ModelSpec& spec, std::vector<double> reference) {
  const auto numeric = hermitian_eigen(build_hamiltonian(spec)).eigenvalues;
  std::sort(reference.begin(), reference.end());
  double worst = 0.0;
  for (std::size_t i = 0; i < numeric.size(); ++i) worst = std::max(worst, std::abs(numeric[i] - reference[i]));
  return worst;
}

double reference_deviation(const ModelSpec& spec) {
  const auto e = analytic_energies(spec);
  return spectrum_deviation(spec, {e.begin(), e.end()});
}

}  // namespace

std::vector<Check> run_verification() {
  std::vector<Check> checks;
  const double ln7 = std::log(7.0), ln4 = std::log(4.0);

  checks.push_back(compare("spectrum XX J=1 {-1x4, 0x2, 2x2}", "closed-form spectrum",
                           spectrum_deviation(ModelSpec::xx(1.0), {-1, -1, -1, -1, 0, 0, 2, 2}), 0.0, 1e-10));
  checks.push_back(compare("spectrum XXZ J=-1 delta=-1/2 {0x6, -3x2}", "closed-form spectrum",
                           spectrum_deviation(ModelSpec::xxz(-1.0, -0.5), {0, 0, 0, 0, 0, 0, -3, -3}), 0.0, 1e-10));
  checks.push_back(compare("spectrum XXZ+B J=0.7 delta=-1.3 B=0.4", "closed-form spectrum",
                           reference_deviation(ModelSpec::xxz_field(0.7, -1.3, 0.4)), 0.0, 1e-10));

  {
    const auto states = analytic_eigenstates();
    const ComplexMatrix rho = partial_trace_site3(ComplexMatrix::outer(states[3], states[3]));
    checks.push_back(compare("C(tr_3 |psi_3><psi_3|) = 2/3", "W-state pair concurrence",
                             concurrence_general(rho).C, 2.0 / 3.0, 1e-10));
  }

  const CriticalPoint xx = xx_critical();
  checks.push_back(compare("XX critical z_c", "root of 4z^3+3z^2-1", xx.z_c, 0.4554, 1e-4));
  checks.push_back(compare("XX critical x_c", "ln z_c", xx.x_c, -0.7866, 1e-3));
  checks.push_back(compare("XX T_c/|J| = 1/0.7866", "1/|x_c|", xx.tc_per_J, 1.0 / 0.7866, 1e-3));
  checks.push_back(compare("XX C at J/T=-30 -> 1/3", "ground-doublet limit",
                           concurrence_numeric(ModelSpec::xx(-30.0), 1.0).C, 1.0 / 3.0, 1e-6));

  checks.push_back(compare("XXZ delta=-1/2 T_c/|J| = 3/ln7", "z_c = 7^(-1/3)",
                           xxz_critical(-0.5)->tc_per_J, 3.0 / ln7, 1e-6));
  checks.push_back(compare("XXZ delta=1/2 z_c = 0.298", "root of 4z^3+3z-1", xxz_critical(0.5)->z_c, 0.298, 1e-3));
  checks.push_back(compare("XXZ delta=-50 T_c/|J| -> 3/ln4", "asymptote z_c -> 4^(-1/3)",
                           xxz_critical(kAsymptoticDelta)->tc_per_J, 3.0 / ln4, 1e-2));

  const double zt = xxx_field_threshold();
  checks.push_back(compare("XXX field threshold", "(4+3 sqrt2)^(1/3)", zt, 2.02, 1e-2));
  checks.push_back(compare("XXX threshold residual", "z^6-8z^3-2 = 0", std::pow(zt, 6) - 8 * std::pow(zt, 3) - 2,
                           0.0, 1e-9));
  checks.push_back(compare("delta=-1/2 h(p1) = 0", "p1 = 5/2 + 3 sqrt5/2", field_curves_half(kHalfFieldP1).h, 0.0,
                           1e-9));
  checks.push_back(compare("delta=-1/2 (h-g)(7) = 0", "p2 = 7", field_curves_half(kHalfFieldP2).hmg, 0.0, 1e-12));

  const double t_low = 1e-4;
  checks.push_back(compare("QPT limit delta=1 B=1", "1/3",
                           concurrence_numeric(ModelSpec::xxz_field(1.0, 1.0, 1.0), t_low).C, 1.0 / 3.0, 1e-3));
  checks.push_back(compare("QPT limit delta=1/2 B=1", "2/9",
                           concurrence_numeric(ModelSpec::xxz_field(1.0, 0.5, 1.0), t_low).C, 2.0 / 9.0, 1e-3));
  checks.push_back(compare("QPT limit delta=0 B=1", "0",
                           concurrence_numeric(ModelSpec::xxz_field(1.0, 0.0, 1.0), t_low).C, 0.0, 1e-3));

  {
    double worst = 0.0;
    for (double J : {-2.0, -0.7, 0.9})
      for (double delta : {-2.5, -0.5, 0.3, 1.4})
        for (double B : {-1.5, 0.0, 2.0})
          for (double T : {0.1, 0.8, 3.0}) {
            const ModelSpec spec = ModelSpec::xxz_field(J, delta, B);
            worst = std::max(worst, std::abs(concurrence_numeric(spec, T).C - concurrence_closed_form(spec, T)));
          }
    checks.push_back(compare("numeric vs closed-form concurrence (108 points)", "closed form", worst, 0.0, 1e-8));
  }
  return checks;
}

std::string format_report(const std::vector<Check>& checks) {
  std::ostringstream os;
  std::size_t passed = 0;
  char buf[512];
  for (const auto& c : checks) {
    passed += c.passed;
    std::snprintf(buf, sizeof buf, "%s  %-48s observed=%.12g expected=%.12g tol=%.1e  (%s)\n",
                  c.passed ? "PASS" : "FAIL", c.name.c_str(), c.observed, c.expected, c.tolerance, c.origin.c_str());
    os << buf;
  }
  os << "verify: " << checks.size() << " checks, " << passed << " passed, " << checks.size() - passed
     << " failed\n";
  return os.str();
}

}  // namespace spinthermal::cli
