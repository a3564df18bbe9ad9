#include "cires/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include "cires/hash.hpp"
#include "cires/hilbert.hpp"

namespace cires {

using nlohmann::json;

namespace {

json ord_json(int ord) {
  if (ord == kOrdInfinity) return "inf";
  return ord;
}

json matrix_json(const GradedMatrix& m) {
  return json{{"entries", m.to_strings()}, {"row_twists", m.row_twists()}, {"col_twists", m.col_twists()}};
}

json ideal_json(const std::vector<Poly>& gens) {
  json out = json::array();
  for (const auto& g : gens) out.push_back(g.to_string());
  return out;
}

std::string ideal_hash(const std::vector<Poly>& gens) { return sha256_hex(ideal_json(gens).dump()); }

int bound(const CIPresentation& ci) {
  if (ci.codim() == 0) throw std::invalid_argument("the order bound needs at least one relation");
  return ci.degrees()[0] - 1;
}

bool contained(const std::vector<Poly>& I, const std::vector<Poly>& J, const RingPtr& ring) {
  GroebnerBasis gb = groebner_basis(J, ring);
  return std::all_of(I.begin(), I.end(), [&](const Poly& g) { return normal_form(g, gb).is_zero(); });
}

ExperimentReport base_report(std::string name, const MinimalResolution& res) {
  ExperimentReport r;
  r.experiment = std::move(name);
  r.params["N"] = res.length();
  r.rows = profile_rows(res);
  return r;
}

}  // namespace

json ExperimentReport::to_json() const {
  json rows_json = json::array();
  for (const auto& row : rows) {
    json jr{{"i", row.i}, {"beta", row.beta}, {"ord", ord_json(row.ord)}};
    if (!row.minor_hashes.empty()) {
      json mh = json::object();
      for (const auto& [r, h] : row.minor_hashes) mh[std::to_string(r)] = h;
      jr["minor_hashes"] = mh;
    }
    rows_json.push_back(std::move(jr));
  }
  json out{{"experiment", experiment},
           {"input_hash", input_hash},
           {"params", params},
           {"n0", n0 ? json(*n0) : json(nullptr)},
           {"rows", rows_json},
           {"pass", pass},
           {"witness", witness}};
  if (!notes.empty()) out["notes"] = notes;
  return out;
}

std::vector<ReportRow> profile_rows(const MinimalResolution& res) {
  std::vector<ReportRow> rows;
  for (std::size_t i = 0; i <= res.length(); ++i) {
    ReportRow row;
    row.i = i;
    row.beta = res.betti[i];
    row.ord = i == 0 ? kOrdInfinity : ord_matrix(res.differential(i), *res.ci);
    rows.push_back(std::move(row));
  }
  return rows;
}

ExperimentReport verify_main_theorem(CIPtr ci, const GradedMatrix& presentation, std::size_t N,
                                     std::size_t W) {
  if (N < W + 2) throw std::invalid_argument("verify main: need N >= W + 2");
  return verify_main_theorem(minimal_resolution(presentation, std::move(ci), N), W);
}

ExperimentReport verify_main_theorem(const MinimalResolution& res, std::size_t W) {
  const std::size_t N = res.length();
  if (N < W + 2) throw std::invalid_argument("verify main: need N >= W + 2");
  const int b = bound(*res.ci);
  ExperimentReport r = base_report("main", res);
  r.params["W"] = W;
  r.params["bound"] = b;
  r.pass = true;
  for (std::size_t i = N - W; i <= N; ++i)
    if (r.rows[i].ord != kOrdInfinity && r.rows[i].ord > b) {
      r.pass = false;
      r.witness = {{"i", i}, {"ord", r.rows[i].ord}, {"matrix", matrix_json(res.differential(i))}};
      break;
    }
  std::size_t n0 = N + 1;
  while (n0 > 1 && (r.rows[n0 - 1].ord == kOrdInfinity || r.rows[n0 - 1].ord <= b)) --n0;
  if (n0 <= N) r.n0 = n0;
  return r;
}

ExperimentReport verify_cx1(CIPtr ci, const GradedMatrix& presentation, std::size_t N) {
  return verify_cx1(minimal_resolution(presentation, std::move(ci), N));
}

ExperimentReport verify_cx1(CIPtr ci, const MatrixFactorization& mf, std::size_t N) {
  return verify_cx1(mf_periodic_resolution(mf, std::move(ci), N));
}

ExperimentReport verify_cx1(const MinimalResolution& res) {
  const std::size_t cx = complexity_estimate(res.betti);
  if (cx != 1)
    throw std::invalid_argument("verify cx1: module has estimated complexity " + std::to_string(cx) +
                                ", not 1");
  const int b = bound(*res.ci);
  ExperimentReport r = base_report("cx1", res);
  r.params["bound"] = b;
  r.params["complexity"] = cx;
  r.pass = true;
  for (std::size_t i = 1; i <= res.length(); ++i)
    if (r.rows[i].ord != kOrdInfinity && r.rows[i].ord > b) {
      r.pass = false;
      r.witness = {{"i", i}, {"ord", r.rows[i].ord}, {"matrix", matrix_json(res.differential(i))}};
      break;
    }
  if (r.pass) r.n0 = 1;
  return r;
}

ExperimentReport verify_minor_periodicity(CIPtr ci, const GradedMatrix& presentation,
                                          std::size_t r_max, std::size_t N, std::size_t W) {
  if (N < W + 4) throw std::invalid_argument("verify minors: need N >= W + 4");
  return verify_minor_periodicity(minimal_resolution(presentation, std::move(ci), N), r_max, W);
}

ExperimentReport verify_minor_periodicity(const MinimalResolution& res, std::size_t r_max,
                                          std::size_t W) {
  const std::size_t N = res.length();
  if (N < W + 4) throw std::invalid_argument("verify minors: need N >= W + 4");
  if (r_max < 1) throw std::invalid_argument("verify minors: r_max must be positive");
  const RingPtr& ring = res.ci->ring();
  ExperimentReport r = base_report("minors", res);
  r.params["W"] = W;
  r.params["r_max"] = r_max;
  r.pass = true;
  std::optional<std::size_t> worst;
  const std::size_t window_lo = N - 2 - W;
  for (std::size_t rank = 1; rank <= r_max; ++rank) {
    MinorIdealChain chain = minor_ideal_chain(res, rank, 1, N);
    bool vacuous = true;
    for (std::size_t i = 1; i <= N; ++i) {
      const GradedMatrix& d = res.differential(i);
      if (rank <= std::min(d.rows(), d.cols())) vacuous = false;
      r.rows[i].minor_hashes.emplace_back(rank, ideal_hash(chain.ideals[i - 1]));
    }
    if (vacuous) {
      r.notes.push_back("r = " + std::to_string(rank) + " exceeds every matrix size: vacuous");
      continue;
    }
    for (std::size_t i = window_lo; i <= N - 2; ++i)
      if (!contained(chain.ideals[i - 1], chain.ideals[i + 1], ring)) {
        r.pass = false;
        if (r.witness.is_null())
          r.witness = {{"r", rank},
                       {"i", i},
                       {"failure", "inclusion"},
                       {"I_i", ideal_json(chain.ideals[i - 1])},
                       {"I_i_plus_2", ideal_json(chain.ideals[i + 1])}};
      }
    std::size_t n0 = N - 1;
    while (n0 > 1 && chain.ideals[n0 - 2] == chain.ideals[n0]) --n0;
    if (n0 + W > N - 2) {
      r.pass = false;
      if (r.witness.is_null()) {
        std::size_t i = std::min(n0 - 1, N - 2);
        r.witness = {{"r", rank},
                     {"i", i},
                     {"failure", "no stabilization on the window"},
                     {"I_i", ideal_json(chain.ideals[i - 1])},
                     {"I_i_plus_2", ideal_json(chain.ideals[i + 1])}};
      }
    }
    if (n0 <= N - 2) worst = std::max(worst.value_or(0), n0);
  }
  r.n0 = worst;
  return r;
}

ExperimentReport verify_example_sharpness(CIPtr ci, const MatrixFactorization& mf, std::size_t N) {
  const int b = bound(*ci);
  MinimalResolution res = mf_periodic_resolution(mf, ci, N);
  ExperimentReport r = base_report("sharpness", res);
  r.params["bound"] = b;
  r.pass = true;
  for (std::size_t i = 1; i <= N; i += 2)
    if (r.rows[i].ord != b) {
      r.pass = false;
      r.witness = {{"i", i}, {"ord", ord_json(r.rows[i].ord)}, {"matrix", matrix_json(res.differential(i))}};
      break;
    }
  if (r.pass) r.n0 = 1;
  return r;
}

ExperimentReport verify_hpoly_product(const CIPresentation& ci) {
  ExperimentReport r;
  r.experiment = "hpoly";
  const auto s = ci.degrees();
  ZPoly expected{1};
  for (int d : s) expected = zpoly_mul(expected, zpoly_geometric(d));
  const ZPoly& h = ci.hilbert().numerator;
  r.params["degrees"] = s;
  r.params["h"] = h;
  r.params["expected"] = expected;
  r.pass = h == expected;
  if (!r.pass) r.witness = {{"failure", "product formula"}, {"h", h}, {"expected", expected}};
  if (ci.codim() >= 1) {
    std::vector<Poly> prefix(ci.relations().begin(), ci.relations().end() - 1);
    ZPoly hB = prefix.empty() ? ZPoly{1} : CIPresentation(ci.ring(), prefix).hilbert().numerator;
    ZPoly factored = zpoly_mul(hB, zpoly_geometric(s.back()));
    r.params["h_B"] = hB;
    if (factored != h) {
      if (r.pass) r.witness = {{"failure", "factor identity"}, {"h", h}, {"h_B", hB}};
      r.pass = false;
    }
  }
  return r;
}

bool verify_ord_descent(const CIPresentation& ci, const Poly& b) {
  if (b.is_zero() || !b.is_homogeneous())
    throw std::invalid_argument("verify descent: b must be a nonzero form");
  if (ci.codim() == 0) throw std::invalid_argument("verify descent: no relations");
  if (b.degree() > ci.degrees().back() - 1)
    throw std::invalid_argument("verify descent: deg b must be at most s_c - 1");
  if (ord_poly(b) != b.degree()) return false;
  for (std::size_t k = 1; k <= ci.codim(); ++k) {
    CIPresentation B(ci.ring(), std::vector<Poly>(ci.relations().begin(), ci.relations().begin() + k));
    if (ord_poly(B.normal_form(b)) != b.degree()) return false;
  }
  return true;
}

ExperimentReport verify_ord_descent_report(const CIPresentation& ci, const std::vector<Poly>& bs) {
  ExperimentReport r;
  r.experiment = "descent";
  r.params["b"] = ideal_json(bs);
  r.pass = true;
  for (const auto& b : bs)
    if (!verify_ord_descent(ci, b)) {
      r.pass = false;
      r.witness = {{"b", b.to_string()}};
      break;
    }
  return r;
}

ExperimentReport verify_section(const MinimalResolution& res, std::size_t lo, std::size_t hi,
                                std::uint64_t seed, std::size_t attempts) {
  OperatorFamily ops = eisenbud_operators(lift_resolution(res), res.ci);
  ExtAction ext = ext_action(ops);
  FilterRegularResult fr = filter_regular_search(ext, lo, hi, attempts, seed);
  SectionData sd = section_construction(res, ops, fr.xi, lo, hi);
  ExperimentReport r = base_report("section", res);
  r.params["lo"] = lo;
  r.params["hi"] = hi;
  r.params["seed"] = seed;
  r.params["xi"] = fr.xi;
  r.params["attempts_used"] = fr.attempts_used;
  r.params["kernel_rank"] = sd.kernel_rank;
  r.params["homogeneous"] = sd.homogeneous;
  r.n0 = sd.n0;
  json checks{{"surjective", sd.surjective_on_window},   {"chain_map", sd.chain_map},
              {"block_form", sd.block_form},             {"kernel_identity", sd.kernel_identity},
              {"delta_complex", sd.delta_complex},       {"delta_minimal", sd.delta_minimal},
              {"betti_additivity", sd.betti_additivity}};
  r.params["checks"] = checks;
  r.pass = true;
  for (const auto& [name, ok] : checks.items())
    if (!ok.get<bool>()) {
      r.pass = false;
      if (r.witness.is_null()) r.witness = {{"failure", name}};
    }
  return r;
}

}  // namespace cires
