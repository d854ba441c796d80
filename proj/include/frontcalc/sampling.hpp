#pragma once

// Seeded random germs for the verification suites.

#include <frontcalc/germ_calculus.hpp>

#include <cstdint>
#include <random>
#include <vector>

namespace frontcalc {

enum class PedalStratum {
  NonZeroValue,  // p(0,0) != 0
  Fold,          // p(0,0) = 0, dp/dx(0,0) != 0
  Umbrella,      // Morse in x with dp/dy(0,0) != 0
  Degenerate,    // Morse in x with dp/dy(0,0) = 0
  Any,
};

struct PedalSample {
  MapGerm phi;
  PedalFactorization factors;
  PedalStratum stratum;
};

struct PropositionTuple {
  Rational a;
  std::vector<Rational> b;
  Rational c;
  std::vector<Rational> d;
};

class GermSampler {
 public:
  explicit GermSampler(std::uint64_t seed) : rng_(seed) {}

  /// num / den with |num| <= max_num, 1 <= den <= max_den.
  Rational small_rational(int max_num = 4, int max_den = 3,
                          bool nonzero = false);
  /// Random sparse jet with terms of total degree in [min_degree, max_degree].
  Jet sparse_jet(std::size_t num_params, int order, unsigned min_degree,
                 unsigned max_degree, std::size_t terms);

  /// (n p, p, y) with n(0,0) = 0 and dn/dx(0,0) != 0.
  PedalSample pedal_type(std::size_t num_params, int order,
                         PedalStratum stratum = PedalStratum::Any);

  /// Normalized Legendrian germ with Phi(0, y) = 0, built from the Legendrian
  /// side: Phi2 with dPhi2/dx(0,0) = 0 and Phi1 = int -h dPhi2/dx dx with
  /// h(0,0) = 0, dh/dx(0,0) != 0. Not yet checked for normalization.
  MapGerm legendrian_candidate(std::size_t num_params, int order);

  /// Mix of tuples that satisfy 2 a d_i = 3 b_i c, near misses and free ones.
  PropositionTuple proposition_tuple(std::size_t num_params);

  std::mt19937_64& engine() { return rng_; }

 private:
  int uniform(int lo, int hi);
  std::mt19937_64 rng_;
};

}  // namespace frontcalc
