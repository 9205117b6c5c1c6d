#include "spinthermal/cli/run.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>

#include "spinthermal/analysis.hpp"
#include "spinthermal/concurrence.hpp"
#include "spinthermal/errors.hpp"
#include "spinthermal/sweep.hpp"
#include "spinthermal/thermal.hpp"

namespace spinthermal::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

Table eig_table(const RunConfig& c) {
  const Spectrum s = hermitian_eigen(build_hamiltonian(c.model));
  Table t{{"index", "energy", "level", "degeneracy"}, {}};
  const auto groups = degenerate_groups(s.eigenvalues);
  for (std::size_t g = 0; g < groups.size(); ++g)
    for (std::size_t k = groups[g].begin; k < groups[g].end; ++k)
      t.rows.push_back({static_cast<double>(k), s.eigenvalues[k], static_cast<double>(g),
                        static_cast<double>(groups[g].size())});
  return t;
}

Table thermal_table(const RunConfig& c) {
  const double T = *c.T;
  const ComplexMatrix rho = partial_trace_site3(gibbs_density(c.model, T));
  Table t{{"T", "Z"}, {}};
  std::vector<double> row{T, T > 0.0 ? partition_function(c.model, T) : kNaN};
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t col = 0; col < 4; ++col) {
      t.columns.push_back("rho" + std::to_string(r) + std::to_string(col));
      row.push_back(rho(r, col).real());
    }
  t.rows.push_back(std::move(row));
  return t;
}

Table concurrence_table(const RunConfig& c) {
  const double T = *c.T;
  const ConcurrenceResult numeric = concurrence_numeric(c.model, T);
  const double closed = c.model.has_closed_form() ? concurrence_closed_form(c.model, T) : kNaN;
  Table t{{"T", "J", "delta", "B", "C", "C_closed", "lambda1", "lambda2", "lambda3", "lambda4"}, {}};
  t.rows.push_back({T, c.model.J, c.model.effective_delta(), c.model.effective_field(), numeric.C, closed,
                    numeric.lambdas[0], numeric.lambdas[1], numeric.lambdas[2], numeric.lambdas[3]});
  return t;
}

Table critical_table(const RunConfig& c) {
  std::optional<CriticalPoint> cp;
  switch (c.model.kind) {
    case ModelKind::XX: cp = xx_critical(); break;
    case ModelKind::XXZ:
      try {
        cp = xxz_critical(c.model.delta);
      } catch (const NoRoot&) {
        cp.reset();
      }
      break;
    default:
      throw UnsupportedModel("critical: only the xx and xxz models have a closed-form critical point");
  }
  Table t{{"z_c", "x_c", "Tc_over_absJ", "Tc"}, {}, 6};
  if (!cp) {
    t.rows.push_back({kNaN, kNaN, kNaN, kNaN});
  } else {
    // An antiferromagnetic ring is never thermally entangled.
    const double tc = c.model.J < 0.0 ? cp->critical_temperature(c.model.J) : 0.0;
    t.rows.push_back({cp->z_c, cp->x_c, cp->tc_per_J, tc});
  }
  return t;
}

Table sweep_table(const RunConfig& c) {
  SweepConfig sc;
  sc.model = c.model;
  sc.T = c.T.value_or(1.0);
  sc.axes = c.axes;
  sc.workers = c.workers;
  const auto records = sweep(sc);

  Table t;
  if (c.columns.empty()) {
    for (const auto& a : c.axes) t.columns.emplace_back(to_string(a.var));
    t.columns.emplace_back("C");
  } else {
    t.columns = c.columns;
  }
  t.rows.reserve(records.size());
  for (const auto& rec : records) {
    std::vector<double> row;
    row.reserve(t.columns.size());
    for (const auto& col : t.columns) row.push_back(rec.get(col));
    t.rows.push_back(std::move(row));
  }
  return t;
}

bool emit(const RunConfig& c, const std::string& text, std::ostream& out, std::ostream& err) {
  if (c.out_path.empty()) {
    out << text;
    return true;
  }
  std::ofstream file(c.out_path, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "spinthermal: cannot open '" << c.out_path << "' for writing\n";
    return false;
  }
  file << text;
  return static_cast<bool>(file);
}

}  // namespace

Table compute_table(const RunConfig& c) {
  switch (c.command) {
    case Command::Eig: return eig_table(c);
    case Command::Thermal: return thermal_table(c);
    case Command::Concurrence: return concurrence_table(c);
    case Command::Critical: return critical_table(c);
    case Command::Sweep: return sweep_table(c);
    case Command::Verify: break;
  }
  throw std::logic_error("compute_table: verify has no table");
}

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    if (c.command == Command::Verify) {
      const auto checks = run_verification();
      if (!emit(c, format_report(checks), out, err)) return kExitConfigError;
      for (const auto& check : checks)
        if (!check.passed) return kExitVerifyFailed;
      return kExitOk;
    }
    const Table table = compute_table(c);
    const std::string text =
        c.format == OutputFormat::Json ? render_json(table, config_to_json(c)) : render_csv(table);
    return emit(c, text, out, err) ? kExitOk : kExitConfigError;
  } catch (const NumericError& e) {
    err << "spinthermal: numeric failure: " << e.what() << '\n';
    return kExitNumericError;
  } catch (const Error& e) {
    err << "spinthermal: " << e.what() << '\n';
    return kExitConfigError;
  }
}

}  // namespace spinthermal::cli
