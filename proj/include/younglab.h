/*
 * younglab C API: simulation of a polarization-marked Young interferometer
 * in the classical (intensity) and quantum (single-photon) descriptions,
 * with exact kernel inversion of the jointly observed path/phase data and
 * negativity diagnostics of the reconstructed joint distribution.
 *
 * All functions return yl_status; YL_OK is 0. On failure, yl_last_error()
 * returns a thread-local message naming the violated invariant. Objects
 * are opaque handles released with the matching *_free function.
 */
#ifndef YOUNGLAB_H
#define YOUNGLAB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum yl_status {
  YL_OK = 0,
  YL_ERR_INVALID_ARGUMENT = 1,  /* a precondition or invariant was violated */
  YL_ERR_SINGULAR_KERNEL = 2,   /* vartheta too close to 0, pi/4 or pi/2 */
  YL_ERR_NOT_PSD = 3,           /* matrix fails positive semidefiniteness */
  YL_ERR_UNDEFINED_COHERENCE = 4,
  YL_ERR_NEGATIVE_DISTRIBUTION = 5, /* tried to sample a negative joint */
  YL_ERR_DIMENSION_MISMATCH = 6,
  YL_ERR_IO = 7,
  YL_ERR_NULL_POINTER = 8,
  YL_ERR_INTERNAL = 9
} yl_status;

/* Library version string, e.g. "1.0.0". */
const char* yl_version(void);

/* Stable name of a status code, e.g. "YL_ERR_SINGULAR_KERNEL". */
const char* yl_status_name(yl_status status);

/* Thread-local message describing the most recent failure in this thread. */
const char* yl_last_error(void);

/*
 * A scenario fixes the input state (classical coherence parameters or a
 * Bloch vector), the polarizer basis angle vartheta, the wave-plate angle
 * theta (classical only), and the phi grid resolution.
 */
typedef struct yl_scenario yl_scenario;

/*
 * A joint is a real 2 x n table over (binary outcome, phi node). Depending
 * on provenance it is the observed joint, an empirical estimate of it, the
 * kernel-reconstructed joint, or the closed-form reconstruction.
 */
typedef struct yl_joint yl_joint;

/* --- scenario construction -------------------------------------------- */

/* Classical scenario with the optimal wave-plate pairing
 * theta = 2*vartheta - pi/2. Intensities are normalized: I_Z(-1) = 1 - i1. */
yl_status yl_scenario_classical(double i1, double mu_abs, double delta, double vartheta,
                                int grid_n, yl_scenario** out);

/* Classical scenario with an explicit wave-plate angle theta. The inversion
 * kernels assume the optimal pairing; with any other theta the
 * reconstruction no longer matches the closed form (the observation itself
 * is still simulated faithfully). */
yl_status yl_scenario_classical_marked(double i1, double mu_abs, double delta, double vartheta,
                                       double theta, int grid_n, yl_scenario** out);

/* Quantum scenario for the photon state with Bloch vector (sx, sy, sz). */
yl_status yl_scenario_quantum(double sx, double sy, double sz, double vartheta, int grid_n,
                              yl_scenario** out);

void yl_scenario_free(yl_scenario* s);

/* Classical coherence parameters of the state whose density matrix equals
 * the scenario gamma; works for both modes (|sz| < 1 required). */
yl_status yl_bloch_to_classical(double sx, double sy, double sz, double* i1, double* mu_abs,
                                double* delta);

/* --- pipeline ---------------------------------------------------------- */

/* Observed joint: Itilde(p, phi) classically, Ptilde(p, phi) for a photon. */
yl_status yl_scenario_observed(const yl_scenario* s, yl_joint** out);

/* Kernel-inverted reconstruction of the exact path/phase joint from the
 * observed joint. May be negative; that is the point. */
yl_status yl_scenario_reconstructed(const yl_scenario* s, yl_joint** out);

/* Closed-form reconstruction (oracle for yl_scenario_reconstructed). */
yl_status yl_scenario_closed_form(const yl_scenario* s, yl_joint** out);

/* Apply the inversion kernels for the given vartheta to an already
 * observed joint (e.g. one read back from CSV). */
yl_status yl_invert_observed(const yl_joint* observed, double vartheta, yl_joint** out);

/* Condition numbers of the two kernel responses: 1/|cos 2vartheta| for the
 * binary kernel and 1/|sin 2vartheta| for the angular one. */
yl_status yl_kernel_conditions(double vartheta, double* cond_path, double* cond_phase);

/* --- joint access ------------------------------------------------------ */

int yl_joint_size(const yl_joint* j);
yl_status yl_joint_node(const yl_joint* j, int k, double* phi);

/* Copy both rows (outcome +1 and -1) into caller buffers of length len,
 * which must equal yl_joint_size. */
yl_status yl_joint_values(const yl_joint* j, double* plus, double* minus, size_t len);

yl_status yl_joint_mass(const yl_joint* j, double* mass);

/* Evaluate the first-harmonic form of a row anywhere in [0, 2pi); exact
 * for every kernel-produced joint. outcome is +1 or -1. */
yl_status yl_joint_eval(const yl_joint* j, int outcome, double phi, double* value);

/* Quadrature row sums (marginal of the binary outcome). */
yl_status yl_joint_outcome_marginal(const yl_joint* j, double* plus, double* minus);

void yl_joint_free(yl_joint* j);

/* --- negativity diagnostics -------------------------------------------- */

typedef struct yl_pathology_report {
  double min_value;      /* continuum minimum over both rows */
  int argmin_z;          /* row (+1/-1) attaining it */
  double argmin_phi;     /* continuum angle of the minimum */
  double grid_min_value; /* smallest grid cell */
  int grid_argmin_z;
  double grid_argmin_phi;
  double negative_mass;  /* quadrature mass of the negative part */
  double threshold_mu2;  /* min intensity ratio; 0 when degenerate */
  int threshold_defined; /* 0 when a marginal intensity vanishes */
  int is_pathological;   /* min_value < -tol */
} yl_pathology_report;

/* Analyze a reconstructed joint; tol is the strict-negativity report
 * tolerance (pass a negative value for the default 1e-10). */
yl_status yl_joint_pathology(const yl_joint* j, double tol, yl_pathology_report* out);

/* --- CSV --------------------------------------------------------------- */

/* Write as 'z,phi,value' CSV (17 significant digits, +1 block then -1
 * block). comment may be NULL; otherwise it is emitted as leading '#'
 * lines. */
yl_status yl_joint_write_csv(const yl_joint* j, const char* path, const char* comment);

yl_status yl_joint_read_csv(const char* path, yl_joint** out);

/* --- Monte Carlo ------------------------------------------------------- */

/* Multinomial sampling of an observed joint followed by the density
 * estimate count/(n x weight). Joints with negative cells are refused. */
yl_status yl_joint_sample(const yl_joint* observed, uint64_t n, uint64_t seed,
                          yl_joint** empirical);

/* Classical only: draw n field realizations, estimate gamma from them,
 * project to the nearest unit-trace PSD matrix, and report its coherence
 * parametrization plus the raw (pre-normalization) trace. */
yl_status yl_scenario_estimate_gamma(const yl_scenario* s, uint64_t n, uint64_t seed, double* i1,
                                     double* i_m1, double* mu_abs, double* delta,
                                     double* raw_trace);

#ifdef __cplusplus
}
#endif

#endif /* YOUNGLAB_H */
