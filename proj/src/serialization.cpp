#include "eqcmm/serialization.hpp"

#include <cmath>
#include <fstream>
#include <nlohmann/json.hpp>

namespace eqcmm {

using nlohmann::json;

namespace {

json complex_to_json(const Complex& c) {
  if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
    throw DomainError("serialize: non-finite amplitude");
  }
  return json::array({c.real(), c.imag()});
}

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw DomainError("parse: amplitude must be a [re, im] pair");
  }
  const Complex c(j[0].get<double>(), j[1].get<double>());
  if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
    throw DomainError("parse: non-finite amplitude");
  }
  return c;
}

const json& expect(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw DomainError(std::string("parse: missing field '") + key + "'");
  }
  return j.at(key);
}

int expect_positive_int(const json& j, const char* key) {
  const json& f = expect(j, key);
  if (!f.is_number_integer() || f.get<long long>() < 1) {
    throw DomainError(std::string("parse: '") + key +
                      "' must be a positive integer");
  }
  return f.get<int>();
}

}  // namespace

json state_to_json(const StateVector& v) {
  json amps = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    amps.push_back(complex_to_json(v(i)));
  }
  return json{{"dim", v.size()}, {"amplitudes", std::move(amps)}};
}

StateVector state_from_json(const json& j) {
  const int dim = expect_positive_int(j, "dim");
  const json& amps = expect(j, "amplitudes");
  if (!amps.is_array() || static_cast<int>(amps.size()) != dim) {
    throw DomainError("parse: amplitudes length does not match dim");
  }
  StateVector v(dim);
  for (int i = 0; i < dim; ++i) {
    v(i) = complex_from_json(amps[i]);
  }
  return v;
}

json matrix_to_json(const ComplexMatrix& m) {
  json entries = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      entries.push_back(complex_to_json(m(i, k)));
    }
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

ComplexMatrix matrix_from_json(const json& j) {
  const int rows = expect_positive_int(j, "rows");
  const int cols = expect_positive_int(j, "cols");
  const json& entries = expect(j, "entries");
  if (!entries.is_array() ||
      static_cast<long long>(entries.size()) !=
          static_cast<long long>(rows) * cols) {
    throw DomainError("parse: entries length does not match rows*cols");
  }
  ComplexMatrix m(rows, cols);
  std::size_t idx = 0;
  for (int i = 0; i < rows; ++i) {
    for (int k = 0; k < cols; ++k) {
      m(i, k) = complex_from_json(entries[idx++]);
    }
  }
  return m;
}

json factors_to_json(const GSFactors& f) {
  return json{{"rank", f.rank},
              {"dropped", f.dropped},
              {"tol", f.tol},
              {"Z", matrix_to_json(f.Z)},
              {"R", matrix_to_json(f.R)}};
}

GSFactors factors_from_json(const json& j) {
  GSFactors f;
  f.rank = expect_positive_int(j, "rank");
  f.tol = expect(j, "tol").get<double>();
  if (!(f.tol > 0.0)) {
    throw DomainError("parse: factors tol must be positive");
  }
  f.dropped = expect(j, "dropped").get<std::vector<int>>();
  f.Z = matrix_from_json(expect(j, "Z"));
  f.R = matrix_from_json(expect(j, "R"));
  if (f.Z.cols() != f.rank || f.R.rows() != f.rank) {
    throw DomainError("parse: factor shapes disagree with rank");
  }
  return f;
}

json memory_to_json(const MemoryMatrix& m) {
  return json{{"m_out", m.rows()},
              {"m_in", m.cols()},
              {"pairs_trained", m.pairs_trained},
              {"M", matrix_to_json(m.M)}};
}

MemoryMatrix memory_from_json(const json& j) {
  MemoryMatrix mem;
  const int m_out = expect_positive_int(j, "m_out");
  const int m_in = expect_positive_int(j, "m_in");
  mem.pairs_trained = expect(j, "pairs_trained").get<int>();
  mem.M = matrix_from_json(expect(j, "M"));
  if (mem.M.rows() != m_out || mem.M.cols() != m_in) {
    throw DomainError("parse: memory matrix shape disagrees with m_out/m_in");
  }
  return mem;
}

json pairs_to_json(const std::vector<TrainingPair>& pairs) {
  json arr = json::array();
  for (const auto& p : pairs) {
    arr.push_back(json{{"key", state_to_json(p.key)},
                       {"memorized", state_to_json(p.memorized)}});
  }
  return arr;
}

std::vector<TrainingPair> pairs_from_json(const json& j) {
  if (!j.is_array()) {
    throw DomainError("parse: training set must be a JSON array");
  }
  std::vector<TrainingPair> pairs;
  pairs.reserve(j.size());
  for (const auto& item : j) {
    pairs.push_back(TrainingPair{state_from_json(expect(item, "key")),
                                 state_from_json(expect(item, "memorized"))});
  }
  return pairs;
}

json model_to_json(const EqcmmModel& model) {
  return json{{"factors", factors_to_json(model.factors)},
              {"Y", matrix_to_json(model.Y)},
              {"memory_z", memory_to_json(model.memory_z)},
              {"key_index", model.key_index}};
}

EqcmmModel model_from_json(const json& j) {
  EqcmmModel model;
  model.factors = factors_from_json(expect(j, "factors"));
  model.Y = matrix_from_json(expect(j, "Y"));
  model.memory_z = memory_from_json(expect(j, "memory_z"));
  model.key_index = expect(j, "key_index").get<std::vector<int>>();
  if (static_cast<Eigen::Index>(model.key_index.size()) != model.Y.cols()) {
    throw DomainError("parse: key_index length disagrees with Y");
  }
  for (int idx : model.key_index) {
    if (idx < 0 || idx > model.factors.rank) {
      throw DomainError("parse: key_index entry out of range");
    }
  }
  return model;
}

std::string kind_name(EnsembleKind kind) {
  switch (kind) {
    case EnsembleKind::HaarRandom:
      return "haar";
    case EnsembleKind::BlochQubit:
      return "bloch";
    case EnsembleKind::Bipolar:
      return "bipolar";
    case EnsembleKind::Perturbed:
      return "perturbed";
  }
  throw DomainError("kind_name: unknown ensemble kind");
}

EnsembleKind parse_kind(const std::string& name) {
  if (name == "haar") return EnsembleKind::HaarRandom;
  if (name == "bloch") return EnsembleKind::BlochQubit;
  if (name == "bipolar") return EnsembleKind::Bipolar;
  if (name == "perturbed") return EnsembleKind::Perturbed;
  throw DomainError("parse_kind: unknown ensemble kind '" + name + "'");
}

json spec_to_json(const EnsembleSpec& spec) {
  return json{{"kind", kind_name(spec.kind)},
              {"dim", spec.dim},
              {"count", spec.count},
              {"noise_eps", spec.noise_eps}};
}

EnsembleSpec spec_from_json(const json& j) {
  EnsembleSpec spec;
  spec.kind = parse_kind(expect(j, "kind").get<std::string>());
  spec.dim = expect_positive_int(j, "dim");
  spec.count = expect_positive_int(j, "count");
  if (j.contains("noise_eps")) {
    spec.noise_eps = j.at("noise_eps").get<double>();
  }
  return spec;
}

json ensemble_to_json(const EnsembleSpec& spec, Seed seed,
                      const std::vector<StateVector>& states) {
  json arr = json::array();
  for (const auto& s : states) {
    arr.push_back(state_to_json(s));
  }
  return json{{"spec", spec_to_json(spec)},
              {"seed", seed.master},
              {"states", std::move(arr)}};
}

std::vector<StateVector> states_from_json(const json& j) {
  const json* arr = &j;
  if (j.is_object()) {
    arr = &expect(j, "states");
  }
  if (!arr->is_array() || arr->empty()) {
    throw DomainError("parse: expected a nonempty array of states");
  }
  std::vector<StateVector> states;
  states.reserve(arr->size());
  for (const auto& item : *arr) {
    states.push_back(state_from_json(item));
  }
  return states;
}

json sweep_config_to_json(const SweepConfig& config) {
  json methods = json::array();
  for (Method m : config.methods) {
    methods.push_back(method_name(m));
  }
  return json{{"dim", config.dim},
              {"q_values", config.q_values},
              {"kind", kind_name(config.kind)},
              {"trials", config.trials},
              {"seed", config.seed.master},
              {"tol", config.tol},
              {"methods", std::move(methods)},
              {"stimulus_noise_eps", config.stimulus_noise_eps},
              {"ensemble_noise_eps", config.ensemble_noise_eps}};
}

SweepConfig sweep_config_from_json(const json& j) {
  SweepConfig config;
  config.dim = expect_positive_int(j, "dim");
  config.q_values = expect(j, "q_values").get<std::vector<int>>();
  if (j.contains("kind")) {
    config.kind = parse_kind(j.at("kind").get<std::string>());
  }
  if (j.contains("trials")) {
    config.trials = j.at("trials").get<int>();
  }
  if (j.contains("seed")) {
    config.seed.master = j.at("seed").get<std::uint64_t>();
  }
  if (j.contains("tol")) {
    config.tol = j.at("tol").get<double>();
  }
  config.methods.clear();
  if (j.contains("methods")) {
    for (const auto& name : j.at("methods")) {
      config.methods.push_back(parse_method(name.get<std::string>()));
    }
  } else {
    config.methods = {Method::Qcmm, Method::EqcmmX, Method::EqcmmZ,
                      Method::EqcmmRaw, Method::PinvOracle};
  }
  if (j.contains("stimulus_noise_eps")) {
    config.stimulus_noise_eps = j.at("stimulus_noise_eps").get<double>();
  }
  if (j.contains("ensemble_noise_eps")) {
    config.ensemble_noise_eps = j.at("ensemble_noise_eps").get<double>();
  }
  return config;
}

json load_json(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open '" + path.string() + "' for reading");
  }
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw DomainError("malformed JSON in '" + path.string() + "': " + e.what());
  }
  return j;
}

void save_json(const json& j, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open '" + path.string() + "' for writing");
  }
  out << j.dump(2) << '\n';
  if (!out.flush()) {
    throw IoError("write to '" + path.string() + "' failed");
  }
}

}  // namespace eqcmm
