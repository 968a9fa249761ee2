#include "seifsec/quotient.hpp"

namespace seifsec {

SeifertData zd_quotient(const SeifertData& m, Int d) {
  if (d <= 0) throw std::invalid_argument("quotient order d must be positive");
  std::vector<ExceptionalPair> out;
  out.reserve(m.size());
  for (const auto& p : m.pairs()) {
    Int g = gcd(p.alpha, d);
    out.push_back({p.alpha / g, checked_mul(d / g, p.beta)});
  }
  return SeifertData(m.base_genus(), std::move(out));
}

}  // namespace seifsec
