#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "eqcmm/state.hpp"

namespace eqcmm {

struct Seed {
  std::uint64_t master = 0;
};

// HaarRandom  — normalized i.i.d. complex Gaussians (uniform on the sphere).
// BlochQubit  — uniform Bloch-sphere qubits, dim 2 only.
// Bipolar     — amplitudes +-1/sqrt(m), signs from the seeded stream.
// Perturbed   — one shared Haar base vector plus a per-index noise_eps-scaled
//               Haar direction, renormalized; noise_eps = 0 reproduces the
//               base exactly. A knob for coherent (nearly dependent) sets.
enum class EnsembleKind { HaarRandom, BlochQubit, Bipolar, Perturbed };

struct EnsembleSpec {
  EnsembleKind kind = EnsembleKind::HaarRandom;
  int dim = 1;
  int count = 1;
  double noise_eps = 0.0;  // Perturbed only
};

namespace detail {

std::uint64_t mix64(std::uint64_t z);  // splitmix64 finalizer
std::uint64_t hash_label(std::string_view label);

}  // namespace detail

// Counter generator in the splitmix64 family: draw i of stream
// (seed, label, index) is mix64(key + (i+1)*gamma) with
// key = mix64(master ^ hash(label)) + gamma * index. Streams are pure
// functions of (master, label, index); extending a run never disturbs
// earlier indices.
class CounterRng {
 public:
  CounterRng(Seed seed, std::string_view label, std::uint64_t index);

  std::uint64_t next_u64();
  double next_uniform();  // [0, 1), 53 bits
  Complex next_complex_normal();  // components i.i.d. N(0,1) via Box-Muller

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

// Independent child seed for stream (label, index); used to give every
// sweep cell and trial its own generator.
Seed derive_seed(Seed seed, std::string_view label, std::uint64_t index);

// Deterministic per (spec, seed); every output has unit energy.
std::vector<StateVector> generate(const EnsembleSpec& spec, Seed seed);

// max_{k != j} |<x_k|x_j>|; needs q >= 2.
double coherence(const std::vector<StateVector>& keys);

// normalize(base + eps * haar_direction); the direction comes from stream
// (seed, "stimulus", index). eps = 0 returns base unchanged.
StateVector perturb(const StateVector& base, double eps, Seed seed,
                    std::uint64_t index);

}  // namespace eqcmm
