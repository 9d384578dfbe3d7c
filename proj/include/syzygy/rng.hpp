#pragma once
// Seeded generator with a platform-independent output sequence.

#include <cstdint>
#include <random>

#include "syzygy/field.hpp"

namespace syz {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n); the modulo bias is below 2^-30 for every n used here.
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  Residue residue(const PrimeField& f) { return static_cast<Residue>(below(f.modulus())); }
  Residue nonzero(const PrimeField& f) { return static_cast<Residue>(1 + below(f.modulus() - 1)); }
  /// Derives an independent stream, e.g. one per trial.
  Rng fork(std::uint64_t salt) { return Rng(engine_() ^ (salt * 0x9E3779B97F4A7C15ull)); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace syz
