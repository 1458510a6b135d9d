/* eaqt — entanglement-assisted electro-optic transducer channel toolkit.
 *
 * C interface to the channel model: steady-state transfer spectra of the
 * cavity electro-optic system, squeezer composition, Gaussian-channel
 * classification, quantum-capacity lower bounds, an independent numeric
 * cross-validation pipeline, and the parameter-sweep engine.
 *
 * Conventions:
 *   - all rates and frequencies are angular (rad/s), temperatures in kelvin,
 *     squeezer gains linear (G >= 1);
 *   - every fallible call returns an eaqt_status; on failure the out
 *     parameters are untouched and eaqt_last_error() holds a detail message
 *     (thread-local);
 *   - handles are created and destroyed by this library only.
 */

#ifndef EAQT_H
#define EAQT_H

#include <stddef.h>

#if defined(_WIN32)
#  define EAQT_API __declspec(dllexport)
#else
#  define EAQT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum eaqt_status {
  EAQT_OK = 0,
  EAQT_ERR_INVALID_ARGUMENT = 1, /* null pointer or malformed struct field */
  EAQT_ERR_DOMAIN = 2,           /* parameter outside a formula's domain */
  EAQT_ERR_BRANCH = 3,           /* quantity requested from the wrong channel branch */
  EAQT_ERR_NUMERICAL = 4,        /* singular system or cross-validation mismatch */
  EAQT_ERR_CONFIG = 5,           /* configuration parse or validation failure */
  EAQT_ERR_IO = 6                /* file open/read/write failure */
} eaqt_status;

/* Static name of a status code, e.g. "EAQT_ERR_CONFIG". */
EAQT_API const char* eaqt_status_name(eaqt_status status);

/* Detail message of the most recent failure on this thread ("" if none). */
EAQT_API const char* eaqt_last_error(void);

/* Library version string, e.g. "1.0.0". */
EAQT_API const char* eaqt_version(void);

/* ------------------------------------------------------------------------ */
/* plain data                                                                */

typedef struct eaqt_params {
  double g;          /* microwave-optical coupling strength */
  double kappa_m_c;  /* microwave external coupling rate */
  double kappa_m_i;  /* microwave intrinsic loss rate */
  double kappa_a_c;  /* optical external coupling rate */
  double kappa_a_i;  /* optical intrinsic loss rate */
  double omega_m;    /* microwave resonance frequency */
  double omega_o;    /* optical resonance frequency */
  double temperature;
} eaqt_params;

typedef struct eaqt_derived {
  double kappa_m, kappa_a; /* total loss rates */
  double c_g;              /* cooperativity */
  double zeta_m, zeta_a;   /* coupling ratios */
  double n_m, n_a;         /* thermal occupations at omega_m, omega_o */
} eaqt_derived;

/* Scattering amplitudes (re, im pairs) and their squared magnitudes at one
 * detuning. eta + kappa_p + kappa_em + kappa_ea = 1. */
typedef struct eaqt_transfer {
  double detuning;
  double t_s[2], t_p[2], t_em[2], t_ea[2];
  double eta, kappa_p, kappa_em, kappa_ea;
} eaqt_transfer;

typedef struct eaqt_squeezers {
  double g;       /* pre-squeezer gain, >= 1 */
  double g_prime; /* anti-squeezer gain, >= 1 */
} eaqt_squeezers;

typedef struct eaqt_occupations {
  double n_p0, n_a0; /* probe / ancilla inputs */
  double n_em, n_ea; /* intrinsic-loss baths */
} eaqt_occupations;

typedef struct eaqt_noise_coefficients {
  double s;          /* signal amplitude sqrt(eta G') */
  double c_p, c_a;   /* probe / ancilla coefficients (may be negative) */
  double l_m, l_a;   /* loss-port amplitudes */
} eaqt_noise_coefficients;

typedef enum eaqt_channel_kind {
  EAQT_CHANNEL_LOSS = 0,
  EAQT_CHANNEL_AMPLIFICATION = 1,
  EAQT_CHANNEL_RANDOM_DISPLACEMENT = 2
} eaqt_channel_kind;

typedef enum eaqt_channel_special {
  EAQT_SPECIAL_NONE = 0,
  EAQT_SPECIAL_PURE_LOSS = 1,
  EAQT_SPECIAL_THERMAL_LOSS = 2,
  EAQT_SPECIAL_PURE_AMPLIFICATION = 3,
  EAQT_SPECIAL_THERMAL_AMPLIFICATION = 4
} eaqt_channel_special;

typedef struct eaqt_channel {
  int kind;      /* eaqt_channel_kind */
  int special;   /* eaqt_channel_special */
  double tau;    /* effective transmissivity / gain G' eta */
  double n_e;    /* added noise photons (NaN on the RDP branch) */
  double sigma2; /* displacement-noise variance (NaN off the RDP branch) */
} eaqt_channel;

typedef enum eaqt_capacity_branch {
  EAQT_BRANCH_LOSS = 0,
  EAQT_BRANCH_AMPLIFICATION = 1,
  EAQT_BRANCH_RDP = 2
} eaqt_capacity_branch;

typedef struct eaqt_capacity {
  double q_lb;          /* bits per channel use; +inf for the identity channel */
  int branch;           /* eaqt_capacity_branch */
  int clamped;          /* raw bound was negative, clamped to 0 */
  int boundary_warning; /* near-tau=1 cross-check disagreed by > 1e-3 bits */
} eaqt_capacity;

/* ------------------------------------------------------------------------ */
/* scalar helpers                                                            */

/* Bose-Einstein occupation; exactly 0 at zero temperature. */
EAQT_API eaqt_status eaqt_thermal_occupation(double omega, double temperature,
                                             double* out);
/* 10^(db/10); db must be >= 0. */
EAQT_API eaqt_status eaqt_gain_from_db(double value_db, double* out);
/* Resonant efficiency 4 C (1+C)^-2 zeta_m zeta_a. */
EAQT_API eaqt_status eaqt_eta_resonant(double c_g, double zeta_m, double zeta_a,
                                       double* out);
/* Resonant probe transmissivity (2 zeta_m / (1+C) - 1)^2. */
EAQT_API eaqt_status eaqt_kappa_p_resonant(double c_g, double zeta_m, double* out);
/* Anti-squeezer gain cancelling the ancilla noise term. */
EAQT_API eaqt_status eaqt_gprime_pure_loss(double g, double kappa_p, double* out);
/* Anti-squeezer gain cancelling the probe noise term; needs G(1-kappa_p) > 1. */
EAQT_API eaqt_status eaqt_gprime_pure_amp(double g, double kappa_p, double* out);
/* g(n) = (n+1) log2(n+1) - n log2 n. */
EAQT_API eaqt_status eaqt_g_func(double n, double* out);

/* ------------------------------------------------------------------------ */
/* system handle                                                             */

typedef struct eaqt_system eaqt_system;

EAQT_API eaqt_status eaqt_system_create(const eaqt_params* params, eaqt_system** out);
/* Synthetic device with kappa_m = kappa_a realizing the given cooperativity
 * and coupling ratios at default frequencies. */
EAQT_API eaqt_status eaqt_system_create_resonant(double c_g, double zeta_m,
                                                 double zeta_a, double temperature,
                                                 eaqt_system** out);
/* Synthetic device realizing the given resonant efficiency at the
 * under-coupled cooperativity root. */
EAQT_API eaqt_status eaqt_system_create_from_eta(double eta, double zeta_m,
                                                 double zeta_a, double temperature,
                                                 eaqt_system** out);
EAQT_API void eaqt_system_destroy(eaqt_system* system);

EAQT_API eaqt_status eaqt_system_params(const eaqt_system* system, eaqt_params* out);
EAQT_API eaqt_status eaqt_system_derived(const eaqt_system* system, eaqt_derived* out);
EAQT_API eaqt_status eaqt_system_transfer(const eaqt_system* system, double detuning,
                                          eaqt_transfer* out);
/* Default bath policy: probe/ancilla vacuum, loss baths thermal; with
 * thermal_probe != 0 the probe and ancilla are thermalized too. */
EAQT_API eaqt_status eaqt_system_occupations(const eaqt_system* system,
                                             int thermal_probe,
                                             eaqt_occupations* out);

/* ------------------------------------------------------------------------ */
/* channel composition and capacity                                          */

EAQT_API eaqt_status eaqt_compose(const eaqt_transfer* transfer,
                                  const eaqt_squeezers* squeezers,
                                  eaqt_noise_coefficients* out);
/* Classify the composed channel and fill in the branch-appropriate noise
 * figure. rdp_tolerance <= 0 selects the default 1e-9. */
EAQT_API eaqt_status eaqt_describe_channel(const eaqt_transfer* transfer,
                                           const eaqt_squeezers* squeezers,
                                           const eaqt_occupations* occupations,
                                           double rdp_tolerance, eaqt_channel* out);
EAQT_API eaqt_status eaqt_capacity_from_channel(const eaqt_channel* channel,
                                                eaqt_capacity* out);
/* Independent numeric pipeline (linear solve + Bogoliubov propagation). */
EAQT_API eaqt_status eaqt_oracle_capacity(const eaqt_system* system, double detuning,
                                          const eaqt_squeezers* squeezers,
                                          int thermal_probe, double rdp_tolerance,
                                          eaqt_capacity* out);

/* ------------------------------------------------------------------------ */
/* sweep handle                                                              */

typedef struct eaqt_sweep eaqt_sweep;

EAQT_API eaqt_status eaqt_sweep_create(eaqt_sweep** out);
EAQT_API void eaqt_sweep_destroy(eaqt_sweep* sweep);
/* Merge keys from a configuration file ("[section]" + "key = value"). */
EAQT_API eaqt_status eaqt_sweep_load_file(eaqt_sweep* sweep, const char* path);
/* Set one key, e.g. ("sweep.mode", "grid") or ("axis.gprime.points", "201").
 * Later sets override earlier ones and file contents. */
EAQT_API eaqt_status eaqt_sweep_set(eaqt_sweep* sweep, const char* key,
                                    const char* value);
/* Copy the current raw value of a key into buffer (empty string if unset).
 * Fails with EAQT_ERR_INVALID_ARGUMENT if the buffer is too small. */
EAQT_API eaqt_status eaqt_sweep_get(const eaqt_sweep* sweep, const char* key,
                                    char* buffer, size_t buffer_length);
/* Run and write the output file. Returns EAQT_ERR_NUMERICAL if an oracle
 * cross-validation failed (the report file is still written). */
EAQT_API eaqt_status eaqt_sweep_run_to_file(eaqt_sweep* sweep, const char* out_path);
/* Run into a malloc'd NUL-terminated buffer owned by the caller; release it
 * with eaqt_buffer_free. */
EAQT_API eaqt_status eaqt_sweep_run_to_buffer(eaqt_sweep* sweep, char** out_text,
                                              size_t* out_length);
EAQT_API void eaqt_buffer_free(char* buffer);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* EAQT_H */
