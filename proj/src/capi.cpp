#include "younglab.h"

#include <cmath>
#include <cstring>
#include <memory>
#include <string>

#include "younglab/classical.hpp"
#include "younglab/distribution.hpp"
#include "younglab/errors.hpp"
#include "younglab/inversion.hpp"
#include "younglab/io.hpp"
#include "younglab/quantum.hpp"
#include "younglab/stochastic.hpp"

using namespace younglab;

namespace {

constexpr const char* kVersion = "1.0.0";

thread_local std::string g_last_error;

yl_status fail(yl_status code, const char* msg) {
  g_last_error = msg;
  return code;
}

// Run a callable, translating the exception hierarchy to status codes.
template <typename F>
yl_status guarded(F&& f) {
  try {
    f();
    return YL_OK;
  } catch (const SingularKernel& e) {
    return fail(YL_ERR_SINGULAR_KERNEL, e.what());
  } catch (const NotPositiveSemidefinite& e) {
    return fail(YL_ERR_NOT_PSD, e.what());
  } catch (const UndefinedCoherence& e) {
    return fail(YL_ERR_UNDEFINED_COHERENCE, e.what());
  } catch (const NegativeDistribution& e) {
    return fail(YL_ERR_NEGATIVE_DISTRIBUTION, e.what());
  } catch (const DimensionMismatch& e) {
    return fail(YL_ERR_DIMENSION_MISMATCH, e.what());
  } catch (const IoError& e) {
    return fail(YL_ERR_IO, e.what());
  } catch (const InvalidArgument& e) {
    return fail(YL_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(YL_ERR_INTERNAL, e.what());
  }
}

bool null_out(const void* p) { return p == nullptr; }

} // namespace

struct yl_scenario {
  enum class Mode { classical, quantum } mode;
  CoherenceSpec spec{0.5, 0.0, 0.0}; // classical mode
  BlochVector bloch{0.0, 0.0, 0.0};  // quantum mode
  double vartheta = 0.0;
  double theta = 0.0; // classical marking angle
  PhiGrid grid{3};
};

struct yl_joint {
  JointDistribution dist;
};

namespace {

JointDistribution observed_of(const yl_scenario& s) {
  if (s.mode == yl_scenario::Mode::classical) {
    const HMatrix4 gtilde = marked_state(gamma_from_spec(s.spec), s.theta);
    return marked_joint_intensity(gtilde, s.vartheta, s.grid);
  }
  return marked_joint_probability(rho_from_bloch(s.bloch), s.vartheta, s.grid);
}

} // namespace

extern "C" {

const char* yl_version(void) { return kVersion; }

const char* yl_status_name(yl_status status) {
  switch (status) {
    case YL_OK: return "YL_OK";
    case YL_ERR_INVALID_ARGUMENT: return "YL_ERR_INVALID_ARGUMENT";
    case YL_ERR_SINGULAR_KERNEL: return "YL_ERR_SINGULAR_KERNEL";
    case YL_ERR_NOT_PSD: return "YL_ERR_NOT_PSD";
    case YL_ERR_UNDEFINED_COHERENCE: return "YL_ERR_UNDEFINED_COHERENCE";
    case YL_ERR_NEGATIVE_DISTRIBUTION: return "YL_ERR_NEGATIVE_DISTRIBUTION";
    case YL_ERR_DIMENSION_MISMATCH: return "YL_ERR_DIMENSION_MISMATCH";
    case YL_ERR_IO: return "YL_ERR_IO";
    case YL_ERR_NULL_POINTER: return "YL_ERR_NULL_POINTER";
    case YL_ERR_INTERNAL: return "YL_ERR_INTERNAL";
  }
  return "YL_ERR_UNKNOWN";
}

const char* yl_last_error(void) { return g_last_error.c_str(); }

yl_status yl_scenario_classical(double i1, double mu_abs, double delta, double vartheta,
                                int grid_n, yl_scenario** out) {
  if (null_out(out)) return fail(YL_ERR_NULL_POINTER, "out must not be NULL");
  return guarded([&] {
    const MarkingConfig marking = MarkingConfig::optimal(vartheta);
    auto s = std::make_unique<yl_scenario>();
    s->mode = yl_scenario::Mode::classical;
    s->spec = CoherenceSpec(i1, mu_abs, delta);
    s->vartheta = marking.vartheta;
    s->theta = marking.theta;
    s->grid = PhiGrid(grid_n);
    if (phase_povm_defect(s->grid) > 1e-12)
      throw Error("scenario: phase POVM completeness self-test failed on this grid");
    *out = s.release();
  });
}

yl_status yl_scenario_classical_marked(double i1, double mu_abs, double delta, double vartheta,
                                       double theta, int grid_n, yl_scenario** out) {
  if (null_out(out)) return fail(YL_ERR_NULL_POINTER, "out must not be NULL");
  return guarded([&] {
    const MarkingConfig marking(theta, vartheta, false);
    auto s = std::make_unique<yl_scenario>();
    s->mode = yl_scenario::Mode::classical;
    s->spec = CoherenceSpec(i1, mu_abs, delta);
    s->vartheta = marking.vartheta;
    s->theta = marking.theta;
    s->grid = PhiGrid(grid_n);
    if (phase_povm_defect(s->grid) > 1e-12)
      throw Error("scenario: phase POVM completeness self-test failed on this grid");
    *out = s.release();
  });
}

yl_status yl_scenario_quantum(double sx, double sy, double sz, double vartheta, int grid_n,
                              yl_scenario** out) {
  if (null_out(out)) return fail(YL_ERR_NULL_POINTER, "out must not be NULL");
  return guarded([&] {
    const MarkingConfig marking = MarkingConfig::optimal(vartheta);
    rho_from_bloch({sx, sy, sz}); // validates |s| <= 1
    auto s = std::make_unique<yl_scenario>();
    s->mode = yl_scenario::Mode::quantum;
    s->bloch = {sx, sy, sz};
    s->vartheta = marking.vartheta;
    s->theta = marking.theta;
    s->grid = PhiGrid(grid_n);
    if (phase_povm_defect(s->grid) > 1e-12)
      throw Error("scenario: phase POVM completeness self-test failed on this grid");
    *out = s.release();
  });
}

void yl_scenario_free(yl_scenario* s) { delete s; }

yl_status yl_bloch_to_classical(double sx, double sy, double sz, double* i1, double* mu_abs,
                                double* delta) {
  if (null_out(i1) || null_out(mu_abs) || null_out(delta))
    return fail(YL_ERR_NULL_POINTER, "output pointers must not be NULL");
  return guarded([&] {
    const CoherenceSpec spec = spec_from_bloch({sx, sy, sz});
    *i1 = spec.i1;
    *mu_abs = spec.mu_abs;
    *delta = spec.delta;
  });
}

yl_status yl_scenario_observed(const yl_scenario* s, yl_joint** out) {
  if (null_out(s) || null_out(out)) return fail(YL_ERR_NULL_POINTER, "arguments must not be NULL");
  return guarded([&] { *out = new yl_joint{observed_of(*s)}; });
}

yl_status yl_scenario_reconstructed(const yl_scenario* s, yl_joint** out) {
  if (null_out(s) || null_out(out)) return fail(YL_ERR_NULL_POINTER, "arguments must not be NULL");
  return guarded([&] {
    *out = new yl_joint{
        invert_joint(path_kernel(s->vartheta), phase_kernel(s->vartheta), observed_of(*s))};
  });
}

yl_status yl_scenario_closed_form(const yl_scenario* s, yl_joint** out) {
  if (null_out(s) || null_out(out)) return fail(YL_ERR_NULL_POINTER, "arguments must not be NULL");
  return guarded([&] {
    if (s->mode == yl_scenario::Mode::classical)
      *out = new yl_joint{reconstructed_joint_closed_form(s->spec, s->grid)};
    else
      *out = new yl_joint{reconstructed_joint_closed_form(s->bloch, s->grid)};
  });
}

yl_status yl_invert_observed(const yl_joint* observed, double vartheta, yl_joint** out) {
  if (null_out(observed) || null_out(out))
    return fail(YL_ERR_NULL_POINTER, "arguments must not be NULL");
  return guarded([&] {
    *out = new yl_joint{invert_joint(path_kernel(vartheta), phase_kernel(vartheta),
                                     observed->dist)};
  });
}

yl_status yl_kernel_conditions(double vartheta, double* cond_path, double* cond_phase) {
  if (null_out(cond_path) || null_out(cond_phase))
    return fail(YL_ERR_NULL_POINTER, "output pointers must not be NULL");
  return guarded([&] {
    path_kernel(vartheta);  // singularity guards
    phase_kernel(vartheta);
    *cond_path = 1.0 / std::abs(std::cos(2.0 * vartheta));
    *cond_phase = 1.0 / std::abs(std::sin(2.0 * vartheta));
  });
}

int yl_joint_size(const yl_joint* j) { return j == nullptr ? 0 : j->dist.grid.size(); }

yl_status yl_joint_node(const yl_joint* j, int k, double* phi) {
  if (null_out(j) || null_out(phi)) return fail(YL_ERR_NULL_POINTER, "arguments must not be NULL");
  return guarded([&] { *phi = j->dist.grid.node(k); });
}

yl_status yl_joint_values(const yl_joint* j, double* plus, double* minus, size_t len) {
  if (null_out(j) || null_out(plus) || null_out(minus))
    return fail(YL_ERR_NULL_POINTER, "arguments must not be NULL");
  if (len != static_cast<size_t>(j->dist.grid.size()))
    return fail(YL_ERR_DIMENSION_MISMATCH, "len must equal yl_joint_size");
  std::memcpy(plus, j->dist.row_plus.data(), len * sizeof(double));
  std::memcpy(minus, j->dist.row_minus.data(), len * sizeof(double));
  return YL_OK;
}

yl_status yl_joint_mass(const yl_joint* j, double* mass) {
  if (null_out(j) || null_out(mass)) return fail(YL_ERR_NULL_POINTER, "arguments must not be NULL");
  *mass = j->dist.mass();
  return YL_OK;
}

yl_status yl_joint_eval(const yl_joint* j, int outcome, double phi, double* value) {
  if (null_out(j) || null_out(value)) return fail(YL_ERR_NULL_POINTER, "arguments must not be NULL");
  return guarded([&] { *value = eval_row_harmonic(j->dist, outcome, phi); });
}

yl_status yl_joint_outcome_marginal(const yl_joint* j, double* plus, double* minus) {
  if (null_out(j) || null_out(plus) || null_out(minus))
    return fail(YL_ERR_NULL_POINTER, "arguments must not be NULL");
  const double w = j->dist.grid.weight();
  double a = 0.0, b = 0.0;
  for (double v : j->dist.row_plus) a += v;
  for (double v : j->dist.row_minus) b += v;
  *plus = a * w;
  *minus = b * w;
  return YL_OK;
}

void yl_joint_free(yl_joint* j) { delete j; }

yl_status yl_joint_pathology(const yl_joint* j, double tol, yl_pathology_report* out) {
  if (null_out(j) || null_out(out)) return fail(YL_ERR_NULL_POINTER, "arguments must not be NULL");
  return guarded([&] {
    const PathologyReport rep = pathology_report(j->dist, tol < 0.0 ? 1e-10 : tol);
    out->min_value = rep.min_value;
    out->argmin_z = rep.argmin_outcome;
    out->argmin_phi = rep.argmin_phi;
    out->grid_min_value = rep.grid_min_value;
    out->grid_argmin_z = rep.grid_argmin_outcome;
    out->grid_argmin_phi = rep.grid_argmin_phi;
    out->negative_mass = rep.negative_mass;
    out->threshold_mu2 = rep.threshold_mu2;
    out->threshold_defined = rep.threshold_defined ? 1 : 0;
    out->is_pathological = rep.is_pathological ? 1 : 0;
  });
}

yl_status yl_joint_write_csv(const yl_joint* j, const char* path, const char* comment) {
  if (null_out(j) || null_out(path)) return fail(YL_ERR_NULL_POINTER, "arguments must not be NULL");
  return guarded([&] { write_joint_csv(j->dist, std::string(path),
                                       comment == nullptr ? "" : std::string(comment)); });
}

yl_status yl_joint_read_csv(const char* path, yl_joint** out) {
  if (null_out(path) || null_out(out))
    return fail(YL_ERR_NULL_POINTER, "arguments must not be NULL");
  return guarded([&] { *out = new yl_joint{read_joint_csv(std::string(path))}; });
}

yl_status yl_joint_sample(const yl_joint* observed, uint64_t n, uint64_t seed,
                          yl_joint** empirical) {
  if (null_out(observed) || null_out(empirical))
    return fail(YL_ERR_NULL_POINTER, "arguments must not be NULL");
  return guarded([&] {
    *empirical = new yl_joint{empirical_joint(
        sample_outcomes(observed->dist, static_cast<std::size_t>(n), seed))};
  });
}

yl_status yl_scenario_estimate_gamma(const yl_scenario* s, uint64_t n, uint64_t seed, double* i1,
                                     double* i_m1, double* mu_abs, double* delta,
                                     double* raw_trace) {
  if (null_out(s) || null_out(i1) || null_out(i_m1) || null_out(mu_abs) || null_out(delta) ||
      null_out(raw_trace))
    return fail(YL_ERR_NULL_POINTER, "arguments must not be NULL");
  return guarded([&] {
    if (s->mode != yl_scenario::Mode::classical)
      throw InvalidArgument("yl_scenario_estimate_gamma: field sampling is classical-only");
    const std::vector<FieldSample> fields =
        sample_fields(gamma_from_spec(s->spec), static_cast<std::size_t>(n), seed);
    const EmpiricalGamma est = empirical_gamma(fields);
    const HMatrix2 state = project_to_state(est.gamma);
    const Coherence c = degree_of_coherence(state);
    *i1 = state.diag0();
    *i_m1 = state.diag1();
    *mu_abs = c.mu_abs;
    *delta = c.delta;
    *raw_trace = est.raw_trace;
  });
}

} // extern "C"
