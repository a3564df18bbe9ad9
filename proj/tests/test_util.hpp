#ifndef CIRES_TEST_UTIL_HPP
#define CIRES_TEST_UTIL_HPP

#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "cires/graded_matrix.hpp"
#include "cires/parse.hpp"
#include "cires/poly.hpp"

namespace cires {

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

inline std::ostream& operator<<(std::ostream& os, const std::vector<Poly>& ps) {
  os << "[";
  for (std::size_t i = 0; i < ps.size(); ++i) os << (i ? ", " : "") << ps[i].to_string();
  return os << "]";
}

}  // namespace cires

namespace testutil {

inline cires::RingPtr ring(std::vector<std::string> vars, std::uint32_t p = 32003) {
  return cires::make_ring(p, std::move(vars));
}

inline cires::Poly P(const cires::RingPtr& r, const std::string& s) { return cires::poly_parse(s, r); }

inline std::vector<cires::Poly> Ps(const cires::RingPtr& r, std::vector<std::string> ss) {
  std::vector<cires::Poly> out;
  for (const auto& s : ss) out.push_back(P(r, s));
  return out;
}

inline cires::GradedMatrix M(const cires::RingPtr& r, const std::vector<std::vector<std::string>>& rows,
                             std::vector<int> row_twists = {}) {
  std::vector<std::vector<cires::Poly>> ps;
  for (const auto& row : rows) {
    ps.emplace_back();
    for (const auto& s : row) ps.back().push_back(P(r, s));
  }
  return cires::GradedMatrix::from_rows(r, ps, std::move(row_twists));
}

/// Random homogeneous polynomial of degree d with roughly `density` of the
/// monomials present.
inline cires::Poly random_form(const cires::RingPtr& r, int d, std::mt19937_64& rng,
                               double density = 0.5) {
  std::vector<cires::Term> terms;
  std::size_t n = r->nvars();
  std::vector<int> e(n, 0);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<std::uint32_t> coeff(1, r->characteristic() - 1);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == n) {
      e[i] = left;
      if (coin(rng) < density) {
        cires::Monomial m;
        for (std::size_t k = 0; k < n; ++k) m.exp[k] = static_cast<std::uint16_t>(e[k]);
        m.deg = static_cast<std::uint32_t>(d);
        terms.push_back({m, coeff(rng)});
      }
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  if (n > 0 && d >= 0) rec(rec, 0, d);
  return cires::Poly::from_terms(r, std::move(terms));
}

}  // namespace testutil

#endif
