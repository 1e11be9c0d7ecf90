#include "eqcmm/ensembles.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace eqcmm {

namespace detail {

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t hash_label(std::string_view label) {
  std::uint64_t h = 0xCBF29CE484222325ull;  // FNV-1a
  for (unsigned char c : label) {
    h = (h ^ c) * 0x100000001B3ull;
  }
  return h;
}

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

}  // namespace detail

CounterRng::CounterRng(Seed seed, std::string_view label, std::uint64_t index)
    : key_(detail::mix64(seed.master ^ detail::hash_label(label)) +
           detail::kGamma * index) {}

std::uint64_t CounterRng::next_u64() {
  return detail::mix64(key_ + (++counter_) * detail::kGamma);
}

double CounterRng::next_uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

Complex CounterRng::next_complex_normal() {
  const double u1 = 1.0 - next_uniform();  // (0, 1]
  const double u2 = next_uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

namespace {

StateVector haar_vector(CounterRng& rng, int dim) {
  StateVector v(dim);
  for (int i = 0; i < dim; ++i) {
    v(i) = rng.next_complex_normal();
  }
  return normalize(v);
}

void validate(const EnsembleSpec& spec) {
  if (spec.dim < 1) {
    throw DomainError("generate: dim must be >= 1");
  }
  if (spec.count < 1) {
    throw DomainError("generate: count must be >= 1");
  }
  if (spec.kind == EnsembleKind::BlochQubit && spec.dim != 2) {
    throw DomainError("generate: BlochQubit requires dim = 2");
  }
  if (!(spec.noise_eps >= 0.0)) {
    throw DomainError("generate: noise_eps must be >= 0");
  }
}

}  // namespace

Seed derive_seed(Seed seed, std::string_view label, std::uint64_t index) {
  return Seed{detail::mix64(detail::mix64(seed.master ^
                                          detail::hash_label(label)) +
                            detail::kGamma * index)};
}

std::vector<StateVector> generate(const EnsembleSpec& spec, Seed seed) {
  validate(spec);
  std::vector<StateVector> out;
  out.reserve(spec.count);

  switch (spec.kind) {
    case EnsembleKind::HaarRandom:
      for (int k = 0; k < spec.count; ++k) {
        CounterRng rng(seed, "haar", static_cast<std::uint64_t>(k));
        out.push_back(haar_vector(rng, spec.dim));
      }
      break;
    case EnsembleKind::BlochQubit:
      for (int k = 0; k < spec.count; ++k) {
        CounterRng rng(seed, "bloch", static_cast<std::uint64_t>(k));
        const double u = rng.next_uniform();
        const double v = rng.next_uniform();
        BlochAngles angles;
        angles.theta = std::acos(1.0 - 2.0 * u);  // uniform on the sphere
        angles.phi = 2.0 * std::numbers::pi * v;
        out.push_back(bloch_to_state(angles));
      }
      break;
    case EnsembleKind::Bipolar: {
      const double amp = 1.0 / std::sqrt(static_cast<double>(spec.dim));
      for (int k = 0; k < spec.count; ++k) {
        CounterRng rng(seed, "bipolar", static_cast<std::uint64_t>(k));
        StateVector v(spec.dim);
        for (int i = 0; i < spec.dim; ++i) {
          v(i) = Complex((rng.next_u64() & 1u) ? amp : -amp, 0.0);
        }
        out.push_back(std::move(v));
      }
      break;
    }
    case EnsembleKind::Perturbed: {
      CounterRng base_rng(seed, "perturb-base", 0);
      const StateVector base = haar_vector(base_rng, spec.dim);
      for (int k = 0; k < spec.count; ++k) {
        if (spec.noise_eps == 0.0) {
          out.push_back(base);
          continue;
        }
        CounterRng rng(seed, "perturb-dir", static_cast<std::uint64_t>(k));
        out.push_back(normalize(base + spec.noise_eps * haar_vector(rng, spec.dim)));
      }
      break;
    }
  }
  return out;
}

double coherence(const std::vector<StateVector>& keys) {
  if (keys.size() < 2) {
    throw DomainError("coherence: needs at least 2 keys");
  }
  double worst = 0.0;
  for (std::size_t k = 0; k < keys.size(); ++k) {
    for (std::size_t j = k + 1; j < keys.size(); ++j) {
      worst = std::max(worst, std::abs(inner(keys[k], keys[j])));
    }
  }
  return worst;
}

StateVector perturb(const StateVector& base, double eps, Seed seed,
                    std::uint64_t index) {
  if (!(eps >= 0.0)) {
    throw DomainError("perturb: eps must be >= 0");
  }
  if (eps == 0.0) {
    return base;
  }
  CounterRng rng(seed, "stimulus", index);
  return normalize(base + eps * haar_vector(rng, static_cast<int>(base.size())));
}

}  // namespace eqcmm
