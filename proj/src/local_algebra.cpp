#include <frontcalc/linear_algebra.hpp>
#include <frontcalc/local_algebra.hpp>

#include <map>

namespace frontcalc {

namespace {

void enumerate(std::size_t num_vars, unsigned degree, std::size_t var,
               Exponents& current, std::vector<Exponents>& out) {
  if (var + 1 == num_vars) {
    current[var] = degree;
    out.push_back(current);
    current[var] = 0;
    return;
  }
  for (unsigned e = degree + 1; e-- > 0;) {
    current[var] = e;
    enumerate(num_vars, degree - e, var + 1, current, out);
  }
  current[var] = 0;
}

}  // namespace

std::vector<Exponents> monomials_below(std::size_t num_vars, unsigned level) {
  std::vector<Exponents> out;
  Exponents current(num_vars, 0);
  for (unsigned d = 0; d < level; ++d) enumerate(num_vars, d, 0, current, out);
  return out;
}

std::size_t truncated_quotient_dimension(std::span<const Jet> generators,
                                         std::size_t num_params,
                                         unsigned level) {
  const auto monos = monomials_below(num_params + 1, level);
  if (level == 0) return 0;
  std::map<Exponents, std::size_t> index;
  for (std::size_t i = 0; i < monos.size(); ++i) index.emplace(monos[i], i);

  const int top = static_cast<int>(level) - 1;
  EchelonBasis basis;
  for (const Jet& g : generators) {
    const Jet gt = g.truncated(top);
    const auto low = gt.lowest_degree();
    if (!low) continue;
    for (const auto& m : monos) {
      if (total_degree(m) + *low >= level) break;
      const Jet prod =
          mul_to_order(Jet::monomial(num_params, top, m, 1), gt, top);
      SparseRow row;
      for (const auto& [e, c] : prod.terms()) row.emplace(index.at(e), c);
      basis.insert(std::move(row));
    }
  }
  return monos.size() - basis.rank();
}

std::size_t model_quotient_dimension(std::size_t k, std::size_t num_params,
                                     unsigned level) {
  std::vector<Jet> gens;
  const int top = static_cast<int>(level);
  for (std::size_t v = 0; v < k && v <= num_params; ++v) {
    gens.push_back(Jet::variable(num_params, top, v));
  }
  return truncated_quotient_dimension(gens, num_params, level);
}

}  // namespace frontcalc
