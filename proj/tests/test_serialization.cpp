#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <nlohmann/json.hpp>
#include <numbers>

#include "eqcmm/serialization.hpp"
#include "test_support.hpp"

using namespace eqcmm;
using nlohmann::json;
using testkit::sv;

TEST_CASE("state round trip is exact") {
  StateVector v(4);
  v << Complex(0.1, -0.3), Complex(std::numbers::pi, 0.0),
      Complex(1e-300, -0.0), Complex(-2.5e17, 1.0 / 3.0);
  const StateVector back = state_from_json(state_to_json(v));
  REQUIRE(back.size() == 4);
  for (int i = 0; i < 4; ++i) {
    CHECK(back(i).real() == v(i).real());
    CHECK(back(i).imag() == v(i).imag());
  }

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const StateVector r = testkit::haar_keys(9, 1, seed)[0];
    const StateVector rr = state_from_json(state_to_json(r));
    CHECK((rr.array() == r.array()).all());
  }
}

TEST_CASE("non-finite amplitudes are rejected both ways") {
  StateVector v(1);
  v << Complex(std::numeric_limits<double>::quiet_NaN(), 0.0);
  CHECK_THROWS_AS(state_to_json(v), DomainError);

  json j;
  j["dim"] = 1;
  j["amplitudes"] = json::array(
      {json::array({std::numeric_limits<double>::infinity(), 0.0})});
  CHECK_THROWS_AS(state_from_json(j), DomainError);
}

TEST_CASE("malformed states are rejected") {
  CHECK_THROWS_AS(state_from_json(json::parse(R"({"dim": 2})")), DomainError);
  CHECK_THROWS_AS(
      state_from_json(json::parse(R"({"dim": 2, "amplitudes": [[1, 0]]})")),
      DomainError);
  CHECK_THROWS_AS(
      state_from_json(json::parse(R"({"dim": 0, "amplitudes": []})")),
      DomainError);
  CHECK_THROWS_AS(
      state_from_json(json::parse(R"({"dim": 1, "amplitudes": [[1]]})")),
      DomainError);
}

TEST_CASE("matrices serialize row-major") {
  ComplexMatrix m(2, 3);
  m << Complex(1, 0), Complex(2, 0), Complex(3, 0), Complex(4, 0),
      Complex(5, 0), Complex(6, 0);
  const json j = matrix_to_json(m);
  CHECK(j.at("rows") == 2);
  CHECK(j.at("cols") == 3);
  for (int i = 0; i < 6; ++i) {
    CHECK(j.at("entries")[i][0].get<double>() == i + 1.0);
  }
  const ComplexMatrix back = matrix_from_json(j);
  CHECK((back.array() == m.array()).all());
}

TEST_CASE("factor and memory round trips") {
  const auto f = gram_schmidt(testkit::haar_keys(6, 4, 3));
  const auto f2 = factors_from_json(factors_to_json(f));
  CHECK(f2.rank == f.rank);
  CHECK(f2.dropped == f.dropped);
  CHECK(f2.tol == f.tol);
  CHECK((f2.Z.array() == f.Z.array()).all());
  CHECK((f2.R.array() == f.R.array()).all());

  const auto mem = train_batch(testkit::haar_pairs(5, 3, 4));
  const auto mem2 = memory_from_json(memory_to_json(mem));
  CHECK(mem2.pairs_trained == 3);
  CHECK((mem2.M.array() == mem.M.array()).all());

  CHECK_THROWS_AS(memory_from_json(json::parse(
                      R"({"m_out": 2, "m_in": 2, "pairs_trained": 1,
                          "M": {"rows": 1, "cols": 1, "entries": [[0, 0]]}})")),
                  DomainError);
}

TEST_CASE("training pairs round trip") {
  const auto pairs = testkit::haar_pairs(4, 3, 17);
  const auto back = pairs_from_json(pairs_to_json(pairs));
  REQUIRE(back.size() == 3);
  for (int k = 0; k < 3; ++k) {
    CHECK((back[k].key.array() == pairs[k].key.array()).all());
    CHECK((back[k].memorized.array() == pairs[k].memorized.array()).all());
  }
  CHECK_THROWS_AS(pairs_from_json(json::parse(R"({"key": 1})")), DomainError);
}

TEST_CASE("model round trip preserves recall outputs") {
  const auto pairs = testkit::haar_pairs(12, 7, 23);
  const auto model = fit(pairs);
  const auto back = model_from_json(model_to_json(model));
  CHECK(back.key_index == model.key_index);
  for (std::uint64_t s = 0; s < 5; ++s) {
    const StateVector v = testkit::haar_keys(12, 1, 80 + s)[0];
    CHECK((recall_x(back, v) - recall_x(model, v)).norm() <= 1e-12);
    CHECK((recall_z(back, v) - recall_z(model, v)).norm() <= 1e-12);
    CHECK((recall_raw(back, v) - recall_raw(model, v)).norm() <= 1e-12);
  }
  CHECK_THROWS_AS(model_from_json(json::parse(R"({"factors": {}})")),
                  DomainError);
}

TEST_CASE("ensemble dumps carry their header") {
  EnsembleSpec spec;
  spec.kind = EnsembleKind::Bipolar;
  spec.dim = 4;
  spec.count = 3;
  const auto states = generate(spec, Seed{42});
  const json dump = ensemble_to_json(spec, Seed{42}, states);
  CHECK(dump.at("seed") == 42);
  CHECK(dump.at("spec").at("kind") == "bipolar");
  const auto back = states_from_json(dump);
  REQUIRE(back.size() == 3);
  CHECK((back[0].array() == states[0].array()).all());

  // bare arrays are accepted too
  const auto bare = states_from_json(dump.at("states"));
  CHECK(bare.size() == 3);
  CHECK_THROWS_AS(states_from_json(json::array()), DomainError);
}

TEST_CASE("ensemble kind names") {
  for (EnsembleKind kind : {EnsembleKind::HaarRandom, EnsembleKind::BlochQubit,
                            EnsembleKind::Bipolar, EnsembleKind::Perturbed}) {
    CHECK(parse_kind(kind_name(kind)) == kind);
  }
  CHECK_THROWS_AS(parse_kind("gaussian"), DomainError);
}

TEST_CASE("sweep config parsing applies defaults") {
  const auto c = sweep_config_from_json(
      json::parse(R"({"dim": 8, "q_values": [2, 4]})"));
  CHECK(c.dim == 8);
  CHECK(c.q_values == std::vector<int>{2, 4});
  CHECK(c.kind == EnsembleKind::HaarRandom);
  CHECK(c.trials == 1);
  CHECK(c.tol == kDefaultTol);
  CHECK(c.methods.size() == 5);
  CHECK(c.stimulus_noise_eps == 0.0);

  SweepConfig full;
  full.dim = 4;
  full.q_values = {1, 2};
  full.kind = EnsembleKind::Perturbed;
  full.trials = 7;
  full.seed = Seed{99};
  full.tol = 1e-9;
  full.methods = {Method::EqcmmZ};
  full.stimulus_noise_eps = 0.5;
  full.ensemble_noise_eps = 0.25;
  const auto back = sweep_config_from_json(sweep_config_to_json(full));
  CHECK(back.dim == full.dim);
  CHECK(back.q_values == full.q_values);
  CHECK(back.kind == full.kind);
  CHECK(back.trials == full.trials);
  CHECK(back.seed.master == full.seed.master);
  CHECK(back.tol == full.tol);
  CHECK(back.methods == full.methods);
  CHECK(back.stimulus_noise_eps == full.stimulus_noise_eps);
  CHECK(back.ensemble_noise_eps == full.ensemble_noise_eps);
}

TEST_CASE("file helpers") {
  const auto dir = std::filesystem::temp_directory_path() / "eqcmm_json_test";
  std::filesystem::create_directories(dir);
  const json j = state_to_json(sv({Complex(0.25, -0.75), Complex(0, 1)}));
  save_json(j, dir / "v.json");
  CHECK(load_json(dir / "v.json") == j);

  CHECK_THROWS_AS(load_json(dir / "missing.json"), IoError);
  std::ofstream(dir / "bad.json") << "{not json";
  CHECK_THROWS_AS(load_json(dir / "bad.json"), DomainError);
  std::filesystem::remove_all(dir);
}
