#pragma once

#include "toriclab/fan.hpp"

#include <cstdint>
#include <random>

namespace toriclab {

/// Seeded generator with a portable bounded draw, so that a seed yields the
/// same fans on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

/// Product of random elementary column operations and sign flips.
IntMatrix random_unimodular(std::size_t n, Rng& rng);

/// Image of a fan under v -> u v for a unimodular u.
Fan transform_fan(const Fan& f, const IntMatrix& u);

/// Complete simplicial fan in Z^n with exactly d rays, d in {n+1, n+2}.
/// The rays are e_1..e_n plus one or two random vectors making them span
/// positively; for d = n+2 a complete cone structure on them is picked at
/// random, and the result is moved by a random unimodular map. Every returned
/// fan passes validate_fan and is_complete.
Fan random_kleinschmidt_fan(std::size_t n, std::size_t d, Rng& rng);

/// Complete simplicial fan in Z^3 with between 4 and max_rays rays: the face
/// fan of a random simplicial lattice polytope, or the twisted fan of
/// oda_fan() in random coordinates, followed by a few random edge flips.
Fan random_complete_fan3(std::size_t max_rays, Rng& rng);

/// A non-projective complete simplicial fan in Z^3: rays -e_i and
/// (0,1,1), (1,0,1), (1,1,0), with a twisted middle band of cones.
Fan oda_fan();

}  // namespace toriclab
