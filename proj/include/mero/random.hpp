#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "mero/funcrep.hpp"

namespace mero {

/// Seeded random source. Streams derived with split() are independent of
/// the order in which they are consumed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  Rng split(std::uint64_t stream) const;

  double uniform(double lo = 0.0, double hi = 1.0);
  double normal();
  /// Independent standard normal real and imaginary parts.
  cd complex_normal();
  int integer(int lo, int hi);  // inclusive
  bool coin(double p = 0.5);
  /// Uniform point in the disk of radius frac * r about the disk center.
  cd in_disk(const Disk& disk, double frac);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// splitmix64 finalizer.
std::uint64_t mix_seed(std::uint64_t x);

Polynomial random_polynomial(Rng& rng, int degree);

/// Random disk with center in [-1, 1]^2 and radius in [0.5, 2].
Disk random_disk(Rng& rng);

/// Rational function with 1..max_poles simple or double poles placed in the
/// disk of radius pole_frac * r, plus a random polynomial of degree <= 3.
MeroFunction random_meromorphic(Rng& rng, const Disk& disk, int max_poles = 3, double pole_frac = 0.6);

/// Random expression text using only + - * / and integer powers of z.
std::string random_rational_text(Rng& rng, int depth);

}  // namespace mero
