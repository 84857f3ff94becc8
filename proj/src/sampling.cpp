#include "sympma/sampling.hpp"

namespace sma {

Rational random_integer(Rng& rng, long range) {
  std::uniform_int_distribution<long> dist(-range, range);
  return Rational(dist(rng));
}

std::optional<std::vector<Rational>> sample_zero(const Polynomial& f, Rng& rng, long range,
                                                 int budget) {
  const std::size_t nv = f.num_vars();
  if (f.is_zero()) {
    std::vector<Rational> point(nv);
    for (auto& v : point) v = random_integer(rng, range);
    return point;
  }
  const auto used = f.support();
  for (int attempt = 0; attempt < budget; ++attempt) {
    std::vector<Rational> point(nv);
    for (auto& v : point) v = random_integer(rng, range);
    for (std::size_t var : used) {
      std::vector<std::optional<Rational>> values(point.begin(), point.end());
      values[var].reset();
      const Polynomial restricted = f.partial_evaluate(values);
      if (restricted.degree_in(var) != 1) continue;
      const Rational slope = restricted.coefficient_of_power(var, 1).constant_term();
      const Rational offset = restricted.coefficient_of_power(var, 0).constant_term();
      point[var] = -offset / slope;
      return point;
    }
  }
  return std::nullopt;
}

}  // namespace sma
