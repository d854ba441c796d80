#pragma once

// Truncated local algebras: dim R / (I + m^level) for an ideal I generated
// by jets, computed by linear algebra on the monomials of degree < level.
// Used as an independent cross-check of the rank criterion.

#include <frontcalc/jet.hpp>

#include <cstddef>
#include <span>
#include <vector>

namespace frontcalc {

/// Monomials in `num_vars` variables of total degree < level, graded.
std::vector<Exponents> monomials_below(std::size_t num_vars, unsigned level);

/// Generators must be known to order >= level - 1.
std::size_t truncated_quotient_dimension(std::span<const Jet> generators,
                                         std::size_t num_params,
                                         unsigned level);

/// Same dimension for the model ideal (x, y1, ..., y_{k-1}).
std::size_t model_quotient_dimension(std::size_t k, std::size_t num_params,
                                     unsigned level);

}  // namespace frontcalc
