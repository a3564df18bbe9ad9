#ifndef CIRES_VERIFY_HPP
#define CIRES_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cires/mf.hpp"
#include "cires/operators.hpp"
#include "cires/resolution.hpp"

namespace cires {

struct ReportRow {
  std::size_t i = 0;
  std::size_t beta = 0;
  int ord = kOrdInfinity;  // ord of d_i; infinity for i = 0
  /// Minor ideals per r as sha256 of the canonical generator list.
  std::vector<std::pair<std::size_t, std::string>> minor_hashes;
};

struct ExperimentReport {
  std::string experiment;
  std::string input_hash;
  nlohmann::json params = nlohmann::json::object();
  std::optional<std::size_t> n0;
  std::vector<ReportRow> rows;
  bool pass = false;
  nlohmann::json witness;  // null on pass
  nlohmann::json notes = nlohmann::json::array();

  nlohmann::json to_json() const;
};

/// Rows i = 0..N with beta_i and ord d_i.
std::vector<ReportRow> profile_rows(const MinimalResolution& res);

/// ord d_i <= s_1 - 1 for i in [N - W, N]. Throws unless N >= W + 2.
ExperimentReport verify_main_theorem(CIPtr ci, const GradedMatrix& presentation, std::size_t N,
                                     std::size_t W);
ExperimentReport verify_main_theorem(const MinimalResolution& res, std::size_t W);

/// ord d_i <= s_1 - 1 for every 1 <= i <= N. Throws when the Betti numbers
/// do not have complexity one.
ExperimentReport verify_cx1(CIPtr ci, const GradedMatrix& presentation, std::size_t N);
ExperimentReport verify_cx1(CIPtr ci, const MatrixFactorization& mf, std::size_t N);
ExperimentReport verify_cx1(const MinimalResolution& res);

/// For each r <= r_max, the least n0 with I^r_i = I^r_{i+2} on [n0, N - 2]
/// and the inclusion I^r_i in I^r_{i+2} on the trailing window. Passes iff
/// n0 + W <= N - 2 for every r. Throws unless N >= W + 4.
ExperimentReport verify_minor_periodicity(CIPtr ci, const GradedMatrix& presentation,
                                          std::size_t r_max, std::size_t N, std::size_t W);
ExperimentReport verify_minor_periodicity(const MinimalResolution& res, std::size_t r_max,
                                          std::size_t W);

/// ord d_{2i+1} = s_1 - 1 exactly at every odd index <= N.
ExperimentReport verify_example_sharpness(CIPtr ci, const MatrixFactorization& mf, std::size_t N);

/// h_A equals the product of (1 + ... + z^{s_i - 1}) and h_A = h_B (1 + ... + z^{s_c - 1})
/// for B defined by the first c - 1 relations.
ExperimentReport verify_hpoly_product(const CIPresentation& ci);

/// ord of b stays deg b in each Q/(f_1..f_k), k = 0..c. Throws unless b is
/// a nonzero form with deg b <= s_c - 1.
bool verify_ord_descent(const CIPresentation& ci, const Poly& b);
ExperimentReport verify_ord_descent_report(const CIPresentation& ci, const std::vector<Poly>& bs);

/// Filter-regular search with the seed, then the section construction on
/// [lo, hi]; passes iff every check of the construction holds.
ExperimentReport verify_section(const MinimalResolution& res, std::size_t lo, std::size_t hi,
                                std::uint64_t seed, std::size_t attempts = 32);

}  // namespace cires

#endif
