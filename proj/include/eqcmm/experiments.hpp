#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "eqcmm/ensembles.hpp"
#include "eqcmm/state.hpp"

namespace eqcmm {

// Recall strategies compared by a sweep. PinvOracle answers through the
// pseudoinverse Y X^+ (complete orthogonal decomposition), the exact
// least-squares reference the orthogonalised memory should match on
// full-rank sets.
enum class Method { Qcmm, EqcmmX, EqcmmZ, EqcmmRaw, PinvOracle };

std::string method_name(Method m);
Method parse_method(const std::string& name);

struct SweepConfig {
  int dim = 8;
  std::vector<int> q_values;
  EnsembleKind kind = EnsembleKind::HaarRandom;
  int trials = 1;
  Seed seed;
  double tol = kDefaultTol;
  std::vector<Method> methods;
  double stimulus_noise_eps = 0.0;
  double ensemble_noise_eps = 0.1;  // eps of Perturbed key ensembles
};

// One row per (q, method). Errors are Euclidean distances between the raw
// response and the memorized pattern (no re-normalization of the response).
// mean_noise is measured on unperturbed stored keys: for QCMM it is the
// crosstalk norm |M x_j - <x_j|x_j> y_j|, for the other methods the
// deviation |response - y_j|. rank is the minimum key-set rank seen across
// trials; wall_ms is the time spent answering recalls for the cell.
struct ReportRow {
  int m = 0;
  int q = 0;
  Method method = Method::Qcmm;
  double mean_err = 0.0;
  double max_err = 0.0;
  double mean_cos = 0.0;
  double mean_noise = 0.0;
  double coherence = 0.0;
  int rank = 0;
  double wall_ms = 0.0;
};

struct ExperimentReport {
  std::vector<ReportRow> rows;
};

// Trains every configured method on seeded ensembles for each q and recalls
// every stored key, optionally through a perturbed stimulus. Deterministic
// given the seed (wall_ms aside). Degenerate trials are skipped with a note
// on stderr rather than aborting the sweep.
ExperimentReport run_sweep(const SweepConfig& config);

std::string to_csv(const ExperimentReport& report);
ExperimentReport parse_csv(const std::string& text);
void emit_csv(const ExperimentReport& report, const std::filesystem::path& path);

// Self-contained SVG: one polyline per method, x = q/m, y = mean recall
// error on a log10 scale (errors below 1e-16 are clamped to 1e-16).
std::string to_svg(const ExperimentReport& report);
void emit_plot(const ExperimentReport& report, const std::filesystem::path& path);

}  // namespace eqcmm
