// Command-line front end over the library; all numerics live in the
// library, this file only moves JSON/CSV/SVG between disk and the modules.

#include <CLI11.hpp>
#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "eqcmm/eqcmm_model.hpp"
#include "eqcmm/ensembles.hpp"
#include "eqcmm/experiments.hpp"
#include "eqcmm/gram_schmidt.hpp"
#include "eqcmm/memory.hpp"
#include "eqcmm/serialization.hpp"

namespace {

using nlohmann::json;

std::uint64_t seed_from_env_or(std::uint64_t fallback) {
  const char* env = std::getenv("EQCMM_SEED");
  if (env == nullptr || *env == '\0') {
    return fallback;
  }
  char* end = nullptr;
  const std::uint64_t value = std::strtoull(env, &end, 10);
  if (end == nullptr || *end != '\0') {
    throw eqcmm::DomainError(std::string("EQCMM_SEED is not an integer: ") + env);
  }
  return value;
}

eqcmm::GSMode parse_mode(const std::string& name) {
  if (name == "classical") return eqcmm::GSMode::Classical;
  if (name == "modified") return eqcmm::GSMode::Modified;
  throw eqcmm::DomainError("unknown mode '" + name + "' (classical|modified)");
}

eqcmm::QueryMode parse_query_mode(const std::string& name) {
  if (name == "z") return eqcmm::QueryMode::ZQuery;
  if (name == "x") return eqcmm::QueryMode::XQuery;
  if (name == "raw") return eqcmm::QueryMode::RawX;
  throw eqcmm::DomainError("unknown query mode '" + name + "' (z|x|raw)");
}

std::vector<eqcmm::TrainingPair> zip_pairs(
    const std::vector<eqcmm::StateVector>& keys,
    const std::vector<eqcmm::StateVector>& memorized) {
  if (keys.size() != memorized.size()) {
    throw eqcmm::ShapeError("--keys and --memorized hold different counts (" +
                            std::to_string(keys.size()) + " vs " +
                            std::to_string(memorized.size()) + ")");
  }
  std::vector<eqcmm::TrainingPair> pairs(keys.size());
  for (std::size_t k = 0; k < keys.size(); ++k) {
    pairs[k] = eqcmm::TrainingPair{keys[k], memorized[k]};
  }
  return pairs;
}

struct GenArgs {
  std::string kind = "haar";
  int dim = 2;
  int count = 1;
  std::uint64_t seed = 0;
  bool seed_given = false;
  double noise_eps = 0.0;
  std::string out;
};

struct OrthoArgs {
  std::string in;
  std::string mode = "modified";
  double tol = eqcmm::kDefaultTol;
  std::string out;
};

struct TrainArgs {
  std::string pairs;
  std::string keys;
  std::string memorized;
  std::string method;
  double tol = eqcmm::kDefaultTol;
  std::string out;
};

struct RecallArgs {
  std::string model;
  std::string stimulus;
  std::string query_mode = "x";
  std::string expected;
};

struct SweepArgs {
  std::string config;
  std::string csv;
  std::string plot;
};

void run_gen(const GenArgs& args) {
  eqcmm::EnsembleSpec spec;
  spec.kind = eqcmm::parse_kind(args.kind);
  spec.dim = args.dim;
  spec.count = args.count;
  spec.noise_eps = args.noise_eps;
  const eqcmm::Seed seed{args.seed_given ? args.seed
                                         : seed_from_env_or(args.seed)};
  const auto states = eqcmm::generate(spec, seed);
  eqcmm::save_json(eqcmm::ensemble_to_json(spec, seed, states), args.out);
}

void run_ortho(const OrthoArgs& args) {
  const auto keys = eqcmm::states_from_json(eqcmm::load_json(args.in));
  const auto factors =
      eqcmm::gram_schmidt(keys, parse_mode(args.mode), args.tol);
  eqcmm::save_json(eqcmm::factors_to_json(factors), args.out);
  std::printf("rank = %d\n", factors.rank);
  std::printf("residual = %.9e\n", eqcmm::orthonormality_residual(factors.Z));
}

void run_train(const TrainArgs& args) {
  std::vector<eqcmm::TrainingPair> pairs;
  if (!args.pairs.empty()) {
    pairs = eqcmm::pairs_from_json(eqcmm::load_json(args.pairs));
  } else {
    pairs = zip_pairs(
        eqcmm::states_from_json(eqcmm::load_json(args.keys)),
        eqcmm::states_from_json(eqcmm::load_json(args.memorized)));
  }
  if (args.method == "qcmm") {
    eqcmm::save_json(eqcmm::memory_to_json(eqcmm::train_batch(pairs)), args.out);
  } else if (args.method == "eqcmm") {
    const auto model = eqcmm::fit(pairs, eqcmm::GSMode::Modified, args.tol);
    if (!model.factors.dropped.empty()) {
      std::string list;
      for (int idx : model.factors.dropped) {
        list += ' ' + std::to_string(idx);
      }
      std::cerr << "WARNING: dropped " << model.factors.dropped.size()
                << " linearly dependent pair(s):" << list << "\n";
    }
    eqcmm::save_json(eqcmm::model_to_json(model), args.out);
  } else {
    throw eqcmm::DomainError("unknown method '" + args.method +
                             "' (qcmm|eqcmm)");
  }
}

void run_recall(const RecallArgs& args) {
  const json model_json = eqcmm::load_json(args.model);
  const auto stimulus =
      eqcmm::state_from_json(eqcmm::load_json(args.stimulus));
  eqcmm::StateVector response;
  if (model_json.contains("factors")) {
    response = eqcmm::recall(eqcmm::model_from_json(model_json), stimulus,
                             parse_query_mode(args.query_mode));
  } else {
    // plain memory; --query-mode is meaningless here and ignored
    response = eqcmm::recall(eqcmm::memory_from_json(model_json), stimulus);
  }
  std::printf("%s\n", eqcmm::state_to_json(response).dump().c_str());
  if (!args.expected.empty()) {
    const auto expected =
        eqcmm::state_from_json(eqcmm::load_json(args.expected));
    std::printf("|cosine| = %.9f\n",
                std::abs(eqcmm::cosine(response, expected)));
  }
}

void run_sweep_cmd(const SweepArgs& args) {
  const auto config =
      eqcmm::sweep_config_from_json(eqcmm::load_json(args.config));
  const auto report = eqcmm::run_sweep(config);
  eqcmm::emit_csv(report, args.csv);
  eqcmm::emit_plot(report, args.plot);
}

void run_inspect(const std::string& path) {
  const json j = eqcmm::load_json(path);
  if (j.contains("factors")) {
    const auto model = eqcmm::model_from_json(j);
    std::printf("type = eqcmm\n");
    std::printf("m_in = %lld\n", static_cast<long long>(model.dim_in()));
    std::printf("m_out = %lld\n", static_cast<long long>(model.dim_out()));
    std::printf("pairs = %d\n", model.pairs());
    std::printf("rank = %d\n", model.factors.rank);
    if (model.factors.dropped.empty()) {
      std::printf("dropped = none\n");
    } else {
      std::string list;
      for (int idx : model.factors.dropped) {
        list += ' ' + std::to_string(idx);
      }
      std::printf("dropped =%s\n", list.c_str());
    }
  } else if (j.contains("pairs_trained")) {
    const auto mem = eqcmm::memory_from_json(j);
    std::printf("type = qcmm\n");
    std::printf("m_in = %lld\n", static_cast<long long>(mem.cols()));
    std::printf("m_out = %lld\n", static_cast<long long>(mem.rows()));
    std::printf("pairs = %d\n", mem.pairs_trained);
  } else {
    throw eqcmm::DomainError("'" + path + "' is neither a memory nor a model");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum-inspired correlation matrix memories (QCMM/EQCMM)"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate a seeded state ensemble");
  gen_cmd->add_option("--kind", gen.kind, "haar|bloch|bipolar|perturbed");
  gen_cmd->add_option("--dim", gen.dim, "state dimension")->required();
  gen_cmd->add_option("--count", gen.count, "number of states")->required();
  auto* seed_opt = gen_cmd->add_option("--seed", gen.seed, "master seed");
  gen_cmd->add_option("--noise-eps", gen.noise_eps, "perturbed-kind epsilon");
  gen_cmd->add_option("--out", gen.out, "output JSON path")->required();

  OrthoArgs ortho;
  auto* ortho_cmd =
      app.add_subcommand("ortho", "orthonormalize a key ensemble");
  ortho_cmd->add_option("--in", ortho.in, "key ensemble JSON")->required();
  ortho_cmd->add_option("--mode", ortho.mode, "classical|modified");
  ortho_cmd->add_option("--tol", ortho.tol, "drop tolerance");
  ortho_cmd->add_option("--out", ortho.out, "factors JSON path")->required();

  TrainArgs train;
  auto* train_cmd = app.add_subcommand("train", "train a memory on pairs");
  auto* pairs_opt =
      train_cmd->add_option("--pairs", train.pairs, "training pairs JSON");
  auto* keys_opt =
      train_cmd->add_option("--keys", train.keys, "key ensemble JSON");
  train_cmd->add_option("--memorized", train.memorized,
                        "memorized ensemble JSON")
      ->needs(keys_opt);
  keys_opt->excludes(pairs_opt);
  train_cmd->add_option("--method", train.method, "qcmm|eqcmm")->required();
  train_cmd->add_option("--tol", train.tol, "orthogonalisation tolerance");
  train_cmd->add_option("--out", train.out, "model JSON path")->required();

  RecallArgs recall;
  auto* recall_cmd = app.add_subcommand("recall", "recall from a memory");
  recall_cmd->add_option("--model", recall.model, "model JSON")->required();
  recall_cmd->add_option("--stimulus", recall.stimulus, "stimulus state JSON")
      ->required();
  recall_cmd->add_option("--query-mode", recall.query_mode, "z|x|raw");
  recall_cmd->add_option("--expected", recall.expected,
                         "state to report |cosine| against");

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "run a load sweep");
  sweep_cmd->add_option("--config", sweep.config, "sweep config JSON")
      ->required();
  sweep_cmd->add_option("--csv", sweep.csv, "report CSV path")->required();
  sweep_cmd->add_option("--plot", sweep.plot, "report SVG path")->required();

  std::string inspect_model;
  auto* inspect_cmd = app.add_subcommand("inspect", "describe a stored model");
  inspect_cmd->add_option("--model", inspect_model, "model JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);  // --help
    }
    std::cerr << "ERROR 2: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*gen_cmd) {
      gen.seed_given = seed_opt->count() > 0;
      run_gen(gen);
    } else if (*ortho_cmd) {
      run_ortho(ortho);
    } else if (*train_cmd) {
      if (train.pairs.empty() && (train.keys.empty() || train.memorized.empty())) {
        throw CLI::RequiredError("--pairs or --keys/--memorized");
      }
      run_train(train);
    } else if (*recall_cmd) {
      run_recall(recall);
    } else if (*sweep_cmd) {
      run_sweep_cmd(sweep);
    } else if (*inspect_cmd) {
      run_inspect(inspect_model);
    }
  } catch (const CLI::Error& e) {
    std::cerr << "ERROR 2: " << e.what() << "\n";
    return 2;
  } catch (const eqcmm::Error& e) {
    std::cerr << "ERROR " << e.exit_code() << ": " << e.what() << "\n";
    return e.exit_code();
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "ERROR 3: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "ERROR 1: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
