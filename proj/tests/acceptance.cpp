// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "betti_oracle.hpp"
#include "cires/cli.hpp"
#include "cires/io.hpp"
#include "cires/mf.hpp"
#include "cires/operators.hpp"
#include "cires/parse.hpp"
#include "cires/verify.hpp"

using namespace cires;
namespace fs = std::filesystem;

namespace {

constexpr double kTimeLimitSeconds = 60.0;

struct Verdict {
  bool pass = true;
  std::string detail;
};

class Failures {
 public:
  void check(bool ok, const std::string& what) {
    if (!ok && first_.empty()) first_ = what;
    ok_ = ok_ && ok;
  }
  Verdict verdict(const std::string& summary) const {
    return {ok_, ok_ ? summary : "first failure: " + first_};
  }

 private:
  bool ok_ = true;
  std::string first_;
};

RingPtr ring(std::vector<std::string> vars) { return make_ring(kDefaultCharacteristic, std::move(vars)); }

Poly P(const RingPtr& R, const std::string& s) { return poly_parse(s, R); }

CIPtr algebra(const RingPtr& R, const std::vector<std::string>& f) {
  std::vector<Poly> ps;
  for (const auto& s : f) ps.push_back(P(R, s));
  return std::make_shared<const CIPresentation>(R, ps);
}

GradedMatrix row(const RingPtr& R, const std::vector<std::string>& entries) {
  std::vector<Poly> ps;
  for (const auto& s : entries) ps.push_back(P(R, s));
  return GradedMatrix::from_rows(R, {ps}, {0});
}

std::vector<fs::path> corpus_files() {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(CIRES_CORPUS_DIR))
    if (e.path().extension() == ".json") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

MinimalResolution corpus_resolution(const InputSpec& spec, std::size_t N) {
  if (spec.presentation) return minimal_resolution(*spec.presentation, spec.algebra, N);
  return mf_periodic_resolution(*spec.factorization, spec.algebra, N);
}

Poly random_form(const RingPtr& R, int d, std::mt19937_64& rng) {
  std::vector<Term> terms;
  const std::size_t n = R->nvars();
  std::uniform_int_distribution<std::uint32_t> coeff(0, R->characteristic() - 1);
  std::vector<int> e(n, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == n) {
      e[i] = left;
      Monomial m;
      for (std::size_t k = 0; k < n; ++k) m.exp[k] = static_cast<std::uint16_t>(e[k]);
      m.deg = static_cast<std::uint32_t>(d);
      terms.push_back({m, coeff(rng)});
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[i] = a;
      self(self, i + 1, left - a);
    }
  };
  rec(rec, 0, d);
  std::erase_if(terms, [](const Term& t) { return t.coeff == 0; });
  return Poly::from_terms(R, terms);
}

// 1. Hilbert product formula.
Verdict hilbert_product() {
  Failures f;
  std::mt19937_64 rng(20260101);
  const std::vector<std::string> names{"x", "y", "z", "w"};
  int made = 0;
  while (made < 5) {
    const std::size_t n = 2 + rng() % 3;
    const std::size_t c = 1 + rng() % std::min<std::size_t>(3, n);
    RingPtr R = ring(std::vector<std::string>(names.begin(), names.begin() + static_cast<long>(n)));
    std::vector<Poly> fs;
    ZPoly expected{1};
    std::int64_t length = 1;
    for (std::size_t k = 0; k < c; ++k) {
      int d = 2 + static_cast<int>(rng() % 3);
      fs.push_back(random_form(R, d, rng));
      expected = zpoly_mul(expected, zpoly_geometric(d));
      length *= d;
    }
    if (!is_regular_sequence(fs, R)) continue;
    ++made;
    CIPresentation A(R, fs);
    std::string tag = "random CI #" + std::to_string(made);
    f.check(A.hilbert().numerator == expected, tag + " h-polynomial");
    f.check(verify_hpoly_product(A).pass, tag + " factor identity");
    f.check(zpoly_eval_one(A.hilbert().numerator) == length, tag + " h(1) = prod s_i");
  }
  RingPtr R = ring({"x", "y"});
  CIPtr A = algebra(R, {"x^3", "y^2"});
  f.check(A->hilbert().numerator == ZPoly{1, 2, 2, 1}, "(x^3, y^2) gives (1+z+z^2)(1+z)");
  f.check(A->hilbert().length == 6, "(x^3, y^2) has length 6");
  return f.verdict("5 random strict CIs (c <= 3) and (x^3,y^2) -> 1+2z+2z^2+z^3");
}

// 2. Residue field over (x^2, y^2).
Verdict residue_field() {
  Failures f;
  RingPtr R = ring({"x", "y"});
  CIPtr A = algebra(R, {"x^2", "y^2"});
  GradedMatrix pres = row(R, {"x", "y"});
  MinimalResolution res = minimal_resolution(pres, A, 10);
  testutil::GradedPieceOracle oracle(R, {Monomial::variable(0, 2), Monomial::variable(1, 2)});
  auto oracle_betti = oracle.betti(pres, 10);
  for (std::size_t n = 0; n <= 10; ++n) {
    f.check(res.betti[n] == n + 1, "beta_" + std::to_string(n) + " = n + 1");
    f.check(oracle_betti[n] == n + 1, "oracle beta_" + std::to_string(n) + " = n + 1");
  }
  const std::vector<Poly> maximal{P(R, "x"), P(R, "y")};
  std::vector<std::vector<Poly>> I(11);
  for (std::size_t n = 1; n <= 10; ++n) {
    f.check(ord_matrix(res.differential(n), *A) == 1, "ord d_" + std::to_string(n) + " = 1");
    I[n] = minor_ideal(res.differential(n), 1, *A);
    f.check(I[n] == maximal, "I^1_" + std::to_string(n) + " = (x, y)");
  }
  for (std::size_t n = 1; n <= 8; ++n)
    f.check(I[n] == I[n + 2], "I^1_" + std::to_string(n) + " = I^1_" + std::to_string(n + 2));
  f.check(verify_main_theorem(res, 6).pass, "main theorem report");
  f.check(verify_minor_periodicity(res, 1, 6).pass, "minor periodicity report");
  return f.verdict("beta_n = n+1 (n <= 10, oracle agrees), ord d_n = 1, I^1_n = (x,y) = I^1_{n+2}");
}

// 3. Sharpness of the bound.
Verdict sharpness() {
  Failures f;
  RingPtr R = ring({"x", "y"});
  CIPtr A = algebra(R, {"x^3", "y^2"});
  MatrixFactorization mf = ulrich_product(*A);
  f.check(mf.phi.at(0, 0) == P(R, "x^2") && mf.psi.at(0, 0) == P(R, "x"), "MF is (x^2, x)");
  MinimalResolution res = mf_periodic_resolution(mf, A, 10);
  MinimalResolution direct = minimal_resolution(row(R, {"x^2"}), A, 10);
  for (std::size_t i = 0; i <= 4; ++i) {
    const std::size_t odd = 2 * i + 1, even = 2 * i + 2;
    f.check(ord_matrix(res.differential(odd), *A) == 2, "ord d_" + std::to_string(odd) + " = 2");
    f.check(ord_matrix(res.differential(even), *A) == 1, "ord d_" + std::to_string(even) + " = 1");
    f.check(ord_matrix(direct.differential(odd), *A) == 2, "direct ord d_" + std::to_string(odd) + " = 2");
    f.check(ord_matrix(direct.differential(even), *A) == 1, "direct ord d_" + std::to_string(even) + " = 1");
  }
  f.check(verify_example_sharpness(A, mf, 10).pass, "sharpness report");
  return f.verdict("(x^2, x) over (x^3,y^2): ord d_{2i+1} = 2, ord d_{2i+2} = 1 for i <= 4");
}

// 4. Eisenbud identity on the corpus.
Verdict eisenbud_identity() {
  Failures f;
  std::size_t modules = 0;
  for (const auto& path : corpus_files()) {
    InputSpec spec = parse_input_file(path);
    if (!spec.presentation && !spec.factorization) continue;
    ++modules;
    const std::string tag = path.stem().string();
    MinimalResolution res = corpus_resolution(spec, 8);
    std::vector<GradedMatrix> lifted = lift_resolution(res);
    OperatorFamily ops = eisenbud_operators(lifted, spec.algebra);
    for (std::size_t i = 2; i <= 8; ++i) {
      GradedMatrix square = lifted[i - 2] * lifted[i - 1];
      GradedMatrix sum(square.ring(), square.row_twists(), square.col_twists());
      for (std::size_t j = 1; j <= ops.codim(); ++j)
        sum = sum + ops.t(j, i).scaled(spec.algebra->relations()[j - 1]);
      f.check(sum == square, tag + ": identity in degree " + std::to_string(i));
    }
    ExtAction ext = ext_action(ops);
    for (std::size_t a = 1; a <= ext.codim(); ++a)
      for (std::size_t b = a + 1; b <= ext.codim(); ++b)
        for (std::size_t n = 0; n + 4 <= 8; ++n)
          f.check(ext.T(a, n + 2) * ext.T(b, n) == ext.T(b, n + 2) * ext.T(a, n),
                  tag + ": T_" + std::to_string(a) + " T_" + std::to_string(b) + " commute at " +
                      std::to_string(n));
  }
  f.check(modules >= 10, "corpus has at least 10 modules");
  return f.verdict(std::to_string(modules) + " corpus modules, identity exact in degrees 2..8, Ext commutators zero");
}

// 5. Change of basis.
Verdict basis_change() {
  Failures f;
  struct Case {
    std::vector<std::string> vars, rel, module;
  };
  const std::vector<Case> cases{{{"x", "y"}, {"x^2", "y^2"}, {"x", "y"}},
                                {{"x", "y", "z"}, {"x^2", "y^2", "z^2"}, {"x", "y", "z"}}};
  for (const auto& cs : cases) {
    RingPtr R = ring(cs.vars);
    CIPtr A = algebra(R, cs.rel);
    MinimalResolution res = minimal_resolution(row(R, cs.module), A, 6);
    OperatorFamily ops = eisenbud_operators(lift_resolution(res), A);
    const std::size_t c = A->codim();
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      std::mt19937_64 rng(seed);
      std::uniform_int_distribution<std::uint32_t> coeff(0, R->characteristic() - 1);
      KMatrix a(c, c, R->field());
      do
        for (std::size_t i = 0; i < c; ++i)
          for (std::size_t j = 0; j < c; ++j) a.at(i, j) = coeff(rng);
      while (!a.inverse());
      PolyMatrix alpha(c, std::vector<Poly>(c, Poly(R)));
      for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = 0; j < c; ++j) alpha[i][j] = Poly::constant(R, a.at(i, j));
      OperatorFamily changed = operators_change_basis(ops, alpha);
      // g = alpha^{-1} f, recomputed independently with KMatrix.
      KMatrix ainv = *a.inverse();
      std::vector<Poly> g(c, Poly(R));
      for (std::size_t i = 0; i < c; ++i)
        for (std::size_t k = 0; k < c; ++k) g[i] += A->relations()[k].scaled(ainv.at(i, k));
      const std::string tag = std::to_string(c) + " relations, seed " + std::to_string(seed);
      f.check(changed.relations == g, tag + ": g = alpha^{-1} f");
      auto B = std::make_shared<const CIPresentation>(R, g);
      OperatorFamily direct = eisenbud_operators(lift_resolution(res), B);
      ExtAction e_direct = ext_action(direct), e_changed = ext_action(changed), e_orig = ext_action(ops);
      for (std::size_t n = 0; n + 2 <= 6; ++n)
        for (std::size_t i = 1; i <= c; ++i) {
          KMatrix combo(e_orig.T(1, n).rows(), e_orig.T(1, n).cols(), R->field());
          for (std::size_t k = 1; k <= c; ++k) combo = combo + e_orig.T(k, n).scaled(a.at(k - 1, i - 1));
          f.check(e_direct.T(i, n) == e_changed.T(i, n), tag + ": direct = changed, T_" + std::to_string(i) +
                                                              " in degree " + std::to_string(n));
          f.check(e_direct.T(i, n) == combo, tag + ": direct = alpha^tr T, T_" + std::to_string(i) +
                                                 " in degree " + std::to_string(n));
        }
    }
  }
  return f.verdict("3 seeded alpha for c = 2 and c = 3: direct operators for alpha^{-1} f = alpha^tr t on Ext, degrees <= 6");
}

GradedMatrix selection_rows(const RingPtr& R, const std::vector<int>& twists, const std::vector<std::size_t>& J) {
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < twists.size(); ++k)
    if (std::find(J.begin(), J.end(), k) == J.end()) keep.push_back(k);
  std::vector<int> rt;
  for (auto k : keep) rt.push_back(twists[k]);
  GradedMatrix s(R, rt, twists);
  for (std::size_t r = 0; r < keep.size(); ++r) s.at(r, keep[r]) = Poly::constant(R, 1);
  return s;
}

// 6. Section construction.
Verdict section() {
  Failures f;
  RingPtr R = ring({"x", "y"});
  CIPtr A = algebra(R, {"x^2", "y^2"});
  MinimalResolution res = minimal_resolution(row(R, {"x", "y"}), A, 12);
  OperatorFamily ops = eisenbud_operators(lift_resolution(res), A);
  ExtAction ext = ext_action(ops);
  const std::size_t lo = 1, hi = 10;
  FilterRegularResult xi = filter_regular_search(ext, lo, hi, 32, 2026);
  SectionData sd = section_construction(res, ops, xi.xi, lo, hi);
  for (std::size_t n = sd.n0; n <= hi; ++n) {
    const std::string at = " at n = " + std::to_string(n);
    f.check(sd.Xi[sd.index(n)].mod_maximal_ideal().rank() == res.betti[n], "F_{n+2} (x) k -> F_n (x) k onto" + at);
    f.check(sd.kernel_rank[sd.index(n)] == res.betti[n + 2] - res.betti[n], "rank G_n = beta_{n+2} - beta_n" + at);
  }
  for (std::size_t n = sd.n0 + 1; n <= hi; ++n) {
    const std::string at = " at n = " + std::to_string(n);
    const std::size_t k = sd.index(n);
    GradedMatrix S = selection_rows(R, res.twists(n + 1), sd.J[k - 1]);
    GradedMatrix Binv(R, {}, {}), B(R, {}, {});
    std::vector<int> rt = S.row_twists();
    rt.insert(rt.end(), sd.Xi[k - 1].row_twists().begin(), sd.Xi[k - 1].row_twists().end());
    Binv = GradedMatrix(R, rt, S.col_twists());
    for (std::size_t j = 0; j < S.cols(); ++j) {
      for (std::size_t i = 0; i < S.rows(); ++i) Binv.at(i, j) = S.at(i, j);
      for (std::size_t i = 0; i < sd.Xi[k - 1].rows(); ++i) Binv.at(S.rows() + i, j) = sd.Xi[k - 1].at(i, j);
    }
    std::vector<int> ct = sd.C[k].col_twists();
    ct.insert(ct.end(), sd.P[k].col_twists().begin(), sd.P[k].col_twists().end());
    B = GradedMatrix(R, sd.C[k].row_twists(), ct);
    for (std::size_t i = 0; i < B.rows(); ++i) {
      for (std::size_t j = 0; j < sd.C[k].cols(); ++j) B.at(i, j) = sd.C[k].at(i, j);
      for (std::size_t j = 0; j < sd.P[k].cols(); ++j) B.at(i, sd.C[k].cols() + j) = sd.P[k].at(i, j);
    }
    GradedMatrix lhs = A->reduce(Binv * res.differential(n + 2) * B);
    const GradedMatrix& delta = sd.delta_at(n);
    const GradedMatrix& U = sd.U[k - 1];
    const GradedMatrix& dn = res.differential(n);
    bool same = lhs.rows() == delta.rows() + dn.rows() && lhs.cols() == delta.cols() + dn.cols();
    for (std::size_t i = 0; same && i < lhs.rows(); ++i)
      for (std::size_t j = 0; same && j < lhs.cols(); ++j) {
        Poly want(R);
        const bool top = i < delta.rows(), left = j < delta.cols();
        if (top && left) want = delta.at(i, j);
        if (top && !left) want = U.at(i, j - delta.cols());
        if (!top && !left) want = dn.at(i - delta.rows(), j - delta.cols());
        same = lhs.at(i, j) == A->normal_form(want);
      }
    f.check(same, "block form [[delta, U], [0, d_n]] entry-wise" + at);
  }
  f.check(sd.chain_map && sd.block_form && sd.kernel_identity && sd.delta_complex && sd.delta_minimal &&
              sd.betti_additivity,
          "construction self-checks");
  std::vector<std::size_t> kernel_betti(sd.kernel_rank.begin(), sd.kernel_rank.end());
  const std::size_t cxM = complexity_estimate(res.betti);
  f.check(cxM == 2, "cx M = 2");
  f.check(complexity_estimate(kernel_betti) + 1 == cxM, "cx of the kernel complex = cx M - 1");
  MinimalResolution L = minimal_resolution(sd.L_presentation(sd.n0 + 1), A, 10);
  f.check(complexity_estimate(L.betti) == 1, "complexity_estimate(L) = 1 from its own resolution");
  std::ostringstream xs;
  for (auto a : xi.xi) xs << a << " ";
  return f.verdict("xi = ( " + xs.str() + ") seed 2026, n0 = " + std::to_string(sd.n0) +
                   ", rank G_n = 2, block form exact, cx L = cx M - 1 = 1");
}

// 7. Main theorem on the whole corpus.
Verdict main_sweep() {
  Failures f;
  std::size_t count = 0;
  for (const auto& path : corpus_files()) {
    InputSpec spec = parse_input_file(path);
    if (!spec.presentation && !spec.factorization) continue;
    ++count;
    ExperimentReport rep = verify_main_theorem(corpus_resolution(spec, 12), 6);
    f.check(rep.pass, path.stem().string() + ": " + rep.witness.dump());
  }
  f.check(count >= 10, "corpus has at least 10 modules");
  return f.verdict(std::to_string(count) + " corpus modules, N = 12, W = 6, ord d_i <= s_1 - 1");
}

std::string read(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// 8. Determinism, cache on and off.
Verdict determinism() {
  Failures f;
  std::random_device rd;
  const fs::path root = fs::temp_directory_path() / ("cires_accept_" + std::to_string(rd()));
  const std::string cache = (root / "cache").string();
  std::size_t artifacts = 0;
  for (const auto& path : corpus_files()) {
    InputSpec spec = parse_input_file(path);
    std::vector<std::vector<std::string>> commands{{"hilbert"}, {"verify", "hpoly"}};
    if (spec.presentation || spec.factorization) {
      commands.push_back({"resolve", "--length", "10", "--format", "csv"});
      commands.push_back({"resolve", "--length", "8", "--format", "json"});
      commands.push_back({"operators", "--length", "6"});
      commands.push_back({"minors", "--length", "8", "--r-max", "1", "--format", "json"});
      commands.push_back({"verify", "main", "--length", "12", "--window", "6"});
      commands.push_back({"verify", "main", "--length", "12", "--window", "6", "--format", "csv"});
      commands.push_back({"verify", "minors", "--length", "8", "--window", "4"});
    }
    if (spec.factorization) commands.push_back({"mf", "--length", "8"});
    if (path.stem() == "residue_field_x2_y2")
      commands.push_back({"verify", "section", "--length", "10", "--window", "5", "--seed", "17"});
    for (const auto& cmd : commands) {
      std::vector<std::string> outputs;
      std::vector<int> codes;
      int run = 0;
      for (const char* mode : {"--no-cache", "cold", "warm"}) {
        std::vector<std::string> args;
        args.push_back(cmd[0]);
        std::size_t positional = cmd[0] == "verify" ? 2 : 1;
        for (std::size_t k = 1; k < positional; ++k) args.push_back(cmd[k]);
        args.push_back(path.string());
        for (std::size_t k = positional; k < cmd.size(); ++k) args.push_back(cmd[k]);
        const fs::path out = root / ("run" + std::to_string(run++));
        args.push_back("--out");
        args.push_back(out.string());
        if (std::string(mode) == "--no-cache") {
          args.push_back("--no-cache");
        } else {
          args.push_back("--cache-dir");
          args.push_back(cache);
        }
        std::ostringstream so, se;
        codes.push_back(run_cli(args, so, se));
        std::string text;
        for (const auto& e : fs::directory_iterator(out)) text += e.path().filename().string() + "\n" + read(e.path());
        outputs.push_back(text);
        fs::remove_all(out);
      }
      std::string tag = path.stem().string() + " " + cmd[0] + (cmd.size() > 1 ? " " + cmd[1] : "");
      f.check(!outputs[0].empty() && codes[0] != kExitError, tag + ": produced an artifact");
      f.check(outputs[0] == outputs[1] && outputs[1] == outputs[2], tag + ": byte-identical across cache modes");
      f.check(codes[0] == codes[1] && codes[1] == codes[2], tag + ": identical exit codes");
      ++artifacts;
    }
  }
  fs::remove_all(root);
  return f.verdict(std::to_string(artifacts) + " artifacts identical across no-cache, cold-cache and warm-cache runs");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "hilbert-product-formula", hilbert_product}, {2, "residue-field-x2-y2", residue_field},
      {3, "sharpness-x3-y2", sharpness},               {4, "eisenbud-identity-corpus", eisenbud_identity},
      {5, "basis-change", basis_change},               {6, "section-construction", section},
      {7, "main-theorem-sweep", main_sweep},           {8, "determinism", determinism}};
  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > kTimeLimitSeconds) {
      v.pass = false;
      v.detail += " (over the 60 s limit)";
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (v.pass ? "PASS" : "FAIL") << "  criterion " << c.id << "  " << c.name
              << "  tolerance=exact  time=" << timing << "  " << v.detail << std::endl;
    if (!v.pass) ++failed;
  }
  std::cout << (failed == 0 ? "ALL CRITERIA PASS" : std::to_string(failed) + " CRITERIA FAILED") << std::endl;
  return failed == 0 ? 0 : 1;
}
