#pragma once

#include <filesystem>
#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

#include "eqcmm/ensembles.hpp"
#include "eqcmm/eqcmm_model.hpp"
#include "eqcmm/experiments.hpp"
#include "eqcmm/gram_schmidt.hpp"
#include "eqcmm/memory.hpp"
#include "eqcmm/state.hpp"

// JSON wire formats. States are {"dim": m, "amplitudes": [[re, im], ...]},
// matrices are {"rows": r, "cols": c, "entries": [[re, im], ...]} in
// row-major order; all reals must be finite and survive a text round trip
// unchanged (shortest-representation printing).

namespace eqcmm {

nlohmann::json state_to_json(const StateVector& v);
StateVector state_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json factors_to_json(const GSFactors& f);
GSFactors factors_from_json(const nlohmann::json& j);

nlohmann::json memory_to_json(const MemoryMatrix& m);
MemoryMatrix memory_from_json(const nlohmann::json& j);

nlohmann::json pairs_to_json(const std::vector<TrainingPair>& pairs);
std::vector<TrainingPair> pairs_from_json(const nlohmann::json& j);

// key_index entries are the 1-based column in factors.Z, 0 when dropped.
nlohmann::json model_to_json(const EqcmmModel& model);
EqcmmModel model_from_json(const nlohmann::json& j);

std::string kind_name(EnsembleKind kind);
EnsembleKind parse_kind(const std::string& name);

nlohmann::json spec_to_json(const EnsembleSpec& spec);
EnsembleSpec spec_from_json(const nlohmann::json& j);

// {"spec": ..., "seed": ..., "states": [...]}
nlohmann::json ensemble_to_json(const EnsembleSpec& spec, Seed seed,
                                const std::vector<StateVector>& states);
// Accepts either a dump object or a bare array of states.
std::vector<StateVector> states_from_json(const nlohmann::json& j);

nlohmann::json sweep_config_to_json(const SweepConfig& config);
SweepConfig sweep_config_from_json(const nlohmann::json& j);

// File helpers; unreadable/unwritable paths raise IoError, malformed
// content raises DomainError.
nlohmann::json load_json(const std::filesystem::path& path);
void save_json(const nlohmann::json& j, const std::filesystem::path& path);

}  // namespace eqcmm
