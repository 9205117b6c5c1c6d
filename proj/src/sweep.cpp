#include "spinthermal/sweep.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "spinthermal/analysis.hpp"
#include "spinthermal/concurrence.hpp"
#include "spinthermal/errors.hpp"
#include "spinthermal/thermal.hpp"

namespace spinthermal {

std::string_view to_string(SweepVar var) {
  switch (var) {
    case SweepVar::T: return "T";
    case SweepVar::J: return "J";
    case SweepVar::Delta: return "delta";
    case SweepVar::B: return "B";
  }
  return "?";
}

SweepVar parse_sweep_var(std::string_view name) {
  if (name == "T") return SweepVar::T;
  if (name == "J") return SweepVar::J;
  if (name == "delta" || name == "Delta" || name == "Δ") return SweepVar::Delta;
  if (name == "B") return SweepVar::B;
  throw std::invalid_argument("unknown sweep variable '" + std::string(name) + "'");
}

double SweepAxis::value(int i) const {
  if (i == steps - 1) return max;
  return min + (max - min) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

namespace {

constexpr std::array<std::string_view, 9> kColumns = {"T", "J", "delta", "B", "C",
                                                       "C_closed", "witness", "Z", "Tc"};

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void apply(ModelSpec& spec, double& T, SweepVar var, double value) {
  switch (var) {
    case SweepVar::T: T = value; break;
    case SweepVar::J: spec.J = value; break;
    case SweepVar::Delta: spec.delta = value; break;
    case SweepVar::B: spec.B = value; break;
  }
}

double field_free_tc(const ModelSpec& spec) {
  if (spec.J >= 0.0) return 0.0;
  try {
    const auto cp = spec.kind == ModelKind::XX ? std::optional(xx_critical())
                                               : xxz_critical(spec.effective_delta());
    return cp ? cp->critical_temperature(spec.J) : 0.0;
  } catch (const NoRoot&) {
    return 0.0;
  }
}

}  // namespace

std::span<const std::string_view> sweep_columns() { return kColumns; }

double SweepRecord::get(std::string_view column) const {
  if (column == "T") return T;
  if (column == "J") return J;
  if (column == "delta") return delta;
  if (column == "B") return B;
  if (column == "C") return C;
  if (column == "C_closed") return C_closed;
  if (column == "witness") return witness;
  if (column == "Z") return Z;
  if (column == "Tc") return Tc;
  throw std::invalid_argument("unknown column '" + std::string(column) + "'");
}

void validate(const SweepConfig& config) {
  if (config.axes.empty() || config.axes.size() > 2)
    throw InvalidGrid("sweep needs one or two axes");
  if (config.axes.size() == 2 && config.axes[0].var == config.axes[1].var)
    throw InvalidGrid("sweep axes must be distinct");
  bool t_axis = false;
  for (const auto& axis : config.axes) {
    if (axis.steps < 2) throw InvalidGrid("axis " + std::string(to_string(axis.var)) + ": steps must be >= 2");
    if (!std::isfinite(axis.min) || !std::isfinite(axis.max) || !(axis.min < axis.max))
      throw InvalidGrid("axis " + std::string(to_string(axis.var)) + ": requires finite min < max");
    if (axis.var == SweepVar::T) {
      t_axis = true;
      if (!(axis.min > 0.0)) throw InvalidGrid("axis T: temperatures must be > 0");
    } else if (config.model.kind == ModelKind::GeneralXYZ) {
      throw InvalidGrid("the xyz model can only be swept over T");
    } else if (axis.var == SweepVar::Delta && config.model.kind == ModelKind::XX) {
      throw InvalidGrid("the xx model has no delta to sweep");
    } else if (axis.var == SweepVar::B && config.model.kind != ModelKind::XXZField) {
      throw InvalidGrid("only the xxzfield model has a field to sweep");
    }
  }
  if (!t_axis && !(config.T > 0.0 && std::isfinite(config.T)))
    throw InvalidGrid("fixed temperature must be > 0");
}

SweepRecord evaluate_point(const ModelSpec& spec, double T) {
  SweepRecord r;
  r.T = T;
  r.J = spec.J;
  r.delta = spec.effective_delta();
  r.B = spec.effective_field();
  r.C = concurrence_numeric(spec, T).C;
  r.Z = partition_function(spec, T);
  if (!spec.has_closed_form()) {
    r.C_closed = r.witness = r.Tc = kNaN;
    return r;
  }
  r.C_closed = concurrence_closed_form(spec, T);
  const double z = std::exp(spec.J / T);
  switch (spec.kind) {
    case ModelKind::XX: r.witness = xx_region(z).witness; break;
    case ModelKind::XXZ: r.witness = xxz_region(spec.delta, z).witness; break;
    default: r.witness = field_region(spec.delta, z, spec.B / T).witness; break;
  }
  r.Tc = spec.kind == ModelKind::XXZField ? kNaN : field_free_tc(spec);
  return r;
}

std::vector<SweepRecord> sweep(const SweepConfig& config) {
  validate(config);
  const SweepAxis& outer = config.axes[0];
  const int inner_steps = config.axes.size() == 2 ? config.axes[1].steps : 1;
  const std::size_t total = static_cast<std::size_t>(outer.steps) * static_cast<std::size_t>(inner_steps);

  std::vector<SweepRecord> records(total);
  auto run_point = [&](std::size_t index) {
    ModelSpec spec = config.model;
    double T = config.T;
    apply(spec, T, outer.var, outer.value(static_cast<int>(index / inner_steps)));
    if (config.axes.size() == 2)
      apply(spec, T, config.axes[1].var, config.axes[1].value(static_cast<int>(index % inner_steps)));
    records[index] = evaluate_point(spec, T);
  };

  unsigned workers = config.workers ? config.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, total));
  if (workers <= 1) {
    for (std::size_t i = 0; i < total; ++i) run_point(i);
    return records;
  }

  // Strided partition; each slot is written by exactly one worker.
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < total; i += workers) run_point(i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return records;
}

}  // namespace spinthermal
