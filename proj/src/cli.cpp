#include "cires/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cires/cache.hpp"
#include "cires/hash.hpp"
#include "cires/hilbert.hpp"
#include "cires/io.hpp"
#include "cires/operators.hpp"
#include "cires/parse.hpp"
#include "cires/verify.hpp"

namespace cires {

using nlohmann::json;

namespace {

struct Options {
  std::string command;
  std::string experiment;
  std::string input;
  std::optional<std::size_t> length, window, r_max;
  std::optional<std::uint64_t> seed;
  std::string out_dir;
  std::string format;
  std::string cache_dir;
  bool no_cache = false;
};

struct Outcome {
  std::string artifact;
  int exit_code = kExitPass;
};

/// Effective parameters: flag, then input file, then default.
struct Params {
  std::size_t length, window, r_max;
  std::uint64_t seed;
};

Params resolve_params(const Options& o, const InputSpec& spec, std::size_t default_length) {
  Params p;
  p.length = o.length.value_or(spec.params.length.value_or(default_length));
  p.window = o.window.value_or(spec.params.window.value_or(6));
  p.r_max = o.r_max.value_or(spec.params.r_max.value_or(1));
  p.seed = o.seed.value_or(spec.params.seed.value_or(0));
  return p;
}

std::string profile_csv(const std::vector<ReportRow>& rows) {
  std::string out = "i,beta_i,ord_partial_i\n";
  for (const auto& r : rows)
    out += std::to_string(r.i) + "," + std::to_string(r.beta) + "," + ord_to_string(r.ord) + "\n";
  return out;
}

json rows_json(const std::vector<ReportRow>& rows) {
  json out = json::array();
  for (const auto& r : rows)
    out.push_back({{"i", r.i},
                   {"beta", r.beta},
                   {"ord", r.ord == kOrdInfinity ? json("inf") : json(r.ord)}});
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

const GradedMatrix& need_module(const InputSpec& spec) {
  if (!spec.presentation) throw std::invalid_argument("this command needs a \"module\" in the input");
  return *spec.presentation;
}

const MatrixFactorization& need_mf(const InputSpec& spec) {
  if (!spec.factorization)
    throw std::invalid_argument("this command needs \"mf\" or \"ulrich\" in the input");
  return *spec.factorization;
}

MinimalResolution module_resolution(const InputSpec& spec, std::size_t N) {
  if (spec.presentation) return minimal_resolution(*spec.presentation, spec.algebra, N);
  if (spec.factorization) return mf_periodic_resolution(*spec.factorization, spec.algebra, N);
  throw std::invalid_argument("this command needs a \"module\", \"mf\" or \"ulrich\" in the input");
}

json kmatrix_json(const KMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
    out.push_back(row);
  }
  return out;
}

Outcome cmd_resolve(const Options& o, const InputSpec& spec, const std::string& hash) {
  Params p = resolve_params(o, spec, 10);
  MinimalResolution res = minimal_resolution(need_module(spec), spec.algebra, p.length);
  auto rows = profile_rows(res);
  if (o.format == "csv") return {profile_csv(rows)};
  json diffs = json::array();
  for (const auto& d : res.diffs) diffs.push_back(matrix_to_json(d));
  json twists = json::array();
  for (std::size_t i = 0; i <= res.length(); ++i) twists.push_back(res.twists(i));
  return {dump({{"input_hash", hash},
                {"length", p.length},
                {"rows", rows_json(rows)},
                {"twists", twists},
                {"differentials", diffs}})};
}

Outcome cmd_operators(const Options& o, const InputSpec& spec, const std::string& hash) {
  Params p = resolve_params(o, spec, 8);
  MinimalResolution res = module_resolution(spec, p.length);
  OperatorFamily ops = eisenbud_operators(lift_resolution(res), spec.algebra);
  ExtAction ext = ext_action(ops);
  const bool identity = operators_identity_holds(ops);
  const bool chain = operators_are_chain_maps(ops);
  const bool commutes = ext_action_commutes(ext);
  const int code = identity && chain && commutes ? kExitPass : kExitFail;
  if (o.format == "csv") {
    std::string out = "j,i,rows,cols,ord\n";
    for (std::size_t j = 1; j <= ops.codim(); ++j)
      for (std::size_t i = 2; i <= ops.length(); ++i) {
        const GradedMatrix& t = ops.t(j, i);
        out += std::to_string(j) + "," + std::to_string(i) + "," + std::to_string(t.rows()) + "," +
               std::to_string(t.cols()) + "," + ord_to_string(ord_matrix(t, *spec.algebra)) + "\n";
      }
    return {out, code};
  }
  json tj = json::array(), ej = json::array();
  for (std::size_t j = 1; j <= ops.codim(); ++j) {
    for (std::size_t i = 2; i <= ops.length(); ++i)
      tj.push_back({{"j", j}, {"i", i}, {"matrix", matrix_to_json(ops.t(j, i))}});
    for (std::size_t n = 0; n + 2 <= ops.length(); ++n)
      ej.push_back({{"j", j}, {"n", n}, {"matrix", kmatrix_json(ext.T(j, n))}});
  }
  json rel = json::array();
  for (const auto& f : ops.relations) rel.push_back(f.to_string());
  return {dump({{"input_hash", hash},
                {"length", p.length},
                {"relations", rel},
                {"betti", res.betti},
                {"identity", identity},
                {"chain_maps", chain},
                {"ext_commutes", commutes},
                {"operators", tj},
                {"ext", ej}}),
          code};
}

Outcome cmd_minors(const Options& o, const InputSpec& spec, const std::string& hash) {
  Params p = resolve_params(o, spec, 10);
  MinimalResolution res = module_resolution(spec, p.length);
  std::string csv = "i,r,generators\n";
  json ideals = json::array(), stab = json::object();
  for (std::size_t r = 1; r <= p.r_max; ++r) {
    MinorIdealChain chain = minor_ideal_chain(res, r, 1, p.length);
    for (std::size_t i = 1; i <= p.length; ++i) {
      json gens = json::array();
      std::string joined;
      for (const auto& g : chain.ideals[i - 1]) {
        gens.push_back(g.to_string());
        joined += (joined.empty() ? "" : ";") + g.to_string();
      }
      csv += std::to_string(i) + "," + std::to_string(r) + "," + joined + "\n";
      ideals.push_back({{"i", i}, {"r", r}, {"generators", gens}});
    }
    stab[std::to_string(r)] = chain.stabilization ? json(*chain.stabilization) : json(nullptr);
  }
  if (o.format == "csv") return {csv};
  return {dump({{"input_hash", hash}, {"length", p.length}, {"r_max", p.r_max}, {"ideals", ideals},
                {"stabilization", stab}})};
}

Outcome cmd_hilbert(const Options& o, const InputSpec& spec, const std::string& hash) {
  const CIPresentation& A = *spec.algebra;
  const HilbertData& h = A.hilbert();
  ZPoly expected{1};
  for (int d : A.degrees()) expected = zpoly_mul(expected, zpoly_geometric(d));
  const int code = h.numerator == expected ? kExitPass : kExitFail;
  std::optional<HilbertData> mh;
  if (spec.presentation) mh = hilbert_series(*spec.presentation, spec.algebra.get());
  if (o.format == "csv") {
    std::string out = mh ? "k,h_k,module_h_k\n" : "k,h_k\n";
    std::size_t top = h.numerator.size();
    if (mh) top = std::max(top, mh->numerator.size());
    for (std::size_t k = 0; k < top; ++k) {
      out += std::to_string(k) + "," + std::to_string(k < h.numerator.size() ? h.numerator[k] : 0);
      if (mh) out += "," + std::to_string(k < mh->numerator.size() ? mh->numerator[k] : 0);
      out += "\n";
    }
    return {out, code};
  }
  json j{{"input_hash", hash},
         {"degrees", A.degrees()},
         {"h", h.numerator},
         {"dim", h.dim},
         {"product_formula", code == kExitPass}};
  if (h.length) j["length"] = *h.length;
  if (mh) {
    j["module"] = {{"h", mh->numerator}, {"dim", mh->dim}};
    if (mh->length) j["module"]["length"] = *mh->length;
  }
  return {dump(j), code};
}

Outcome cmd_mf(const Options& o, const InputSpec& spec, const std::string& hash) {
  Params p = resolve_params(o, spec, 10);
  const MatrixFactorization& mf = need_mf(spec);
  const bool valid = mf_validate(mf);
  MinimalResolution res = mf_periodic_resolution(mf, spec.algebra, p.length);
  auto rows = profile_rows(res);
  const int code = valid ? kExitPass : kExitFail;
  if (o.format == "csv") return {profile_csv(rows), code};
  return {dump({{"input_hash", hash},
                {"f", mf.f.to_string()},
                {"phi", matrix_to_json(mf.phi)},
                {"psi", matrix_to_json(mf.psi)},
                {"valid", valid},
                {"ord_phi", ord_to_string(ord_matrix(mf.phi, *spec.algebra))},
                {"ord_psi", ord_to_string(ord_matrix(mf.psi, *spec.algebra))},
                {"rows", rows_json(rows)}}),
          code};
}

Outcome cmd_verify(const Options& o, const InputSpec& spec, const std::string& hash) {
  Params p = resolve_params(o, spec, 12);
  const std::string& e = o.experiment;
  ExperimentReport rep;
  if (e == "main") {
    if (p.length < p.window + 2) throw std::invalid_argument("verify main: need N >= W + 2");
    rep = verify_main_theorem(module_resolution(spec, p.length), p.window);
  } else if (e == "cx1") {
    rep = verify_cx1(module_resolution(spec, p.length));
  } else if (e == "minors") {
    if (p.length < p.window + 4) throw std::invalid_argument("verify minors: need N >= W + 4");
    rep = verify_minor_periodicity(module_resolution(spec, p.length), p.r_max, p.window);
  } else if (e == "sharpness") {
    rep = verify_example_sharpness(spec.algebra, need_mf(spec), p.length);
  } else if (e == "hpoly") {
    rep = verify_hpoly_product(*spec.algebra);
  } else if (e == "descent") {
    std::vector<Poly> bs;
    for (const auto& s : spec.params.b) bs.push_back(poly_parse(s, spec.ring));
    if (bs.empty())
      for (std::size_t v = 0; v < spec.ring->nvars(); ++v) bs.push_back(Poly::variable(spec.ring, v));
    rep = verify_ord_descent_report(*spec.algebra, bs);
  } else if (e == "section") {
    if (p.length < p.window + 2) throw std::invalid_argument("verify section: need N >= W + 2");
    const std::size_t hi = p.length - 2, lo = hi - p.window;
    rep = verify_section(module_resolution(spec, p.length), lo, hi, p.seed);
  } else {
    throw std::invalid_argument("unknown experiment \"" + e +
                                "\" (main, cx1, minors, sharpness, hpoly, descent, section)");
  }
  rep.input_hash = hash;
  const int code = rep.pass ? kExitPass : kExitFail;
  if (o.format == "csv") return {profile_csv(rep.rows), code};
  return {dump(rep.to_json()), code};
}

Outcome dispatch(const Options& o, const InputSpec& spec, const std::string& hash) {
  if (o.command == "resolve") return cmd_resolve(o, spec, hash);
  if (o.command == "operators") return cmd_operators(o, spec, hash);
  if (o.command == "minors") return cmd_minors(o, spec, hash);
  if (o.command == "hilbert") return cmd_hilbert(o, spec, hash);
  if (o.command == "mf") return cmd_mf(o, spec, hash);
  return cmd_verify(o, spec, hash);
}

std::string artifact_name(const Options& o) {
  std::string stem = std::filesystem::path(o.input).stem().string() + "." + o.command;
  if (!o.experiment.empty()) stem += "_" + o.experiment;
  return stem + "." + o.format;
}

std::optional<ResultCache> open_cache(const Options& o, std::ostream& err) {
  if (o.no_cache) return std::nullopt;
  std::string dir = o.cache_dir;
  if (dir.empty())
    if (const char* env = std::getenv(kCacheEnvVar)) dir = env;
  if (dir.empty()) return std::nullopt;
  return ResultCache(dir, kToolVersion, &err);
}

void write_artifact(const Options& o, const std::string& artifact, std::ostream& out) {
  if (o.out_dir.empty()) {
    out << artifact;
    return;
  }
  std::filesystem::create_directories(o.out_dir);
  const auto path = std::filesystem::path(o.out_dir) / artifact_name(o);
  const auto tmp = std::filesystem::path(path.string() + ".tmp");
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    f << artifact;
    if (!f) throw std::runtime_error("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

int execute(const Options& o, std::ostream& out, std::ostream& err) {
  InputSpec spec = parse_input_file(o.input);
  const std::string hash = content_hash(spec);
  auto cache = open_cache(o, err);

  json flags{{"command", o.command},
             {"experiment", o.experiment},
             {"format", o.format},
             {"length", o.length ? json(*o.length) : json(nullptr)},
             {"window", o.window ? json(*o.window) : json(nullptr)},
             {"r_max", o.r_max ? json(*o.r_max) : json(nullptr)},
             {"seed", o.seed ? json(*o.seed) : json(nullptr)}};
  const std::string key = sha256_hex(hash + "\n" + flags.dump());
  if (cache) {
    if (auto hit = cache->get(key)) {
      write_artifact(o, hit->artifact, out);
      return hit->exit_code;
    }
  }
  Outcome result = dispatch(o, spec, hash);
  if (cache) cache->put(key, {result.artifact, result.exit_code});
  write_artifact(o, result.artifact, out);
  return result.exit_code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Resolutions, Eisenbud operators and order statistics over complete intersections", "cires"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);
  Options o;
  auto common = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "input JSON file")->required();
    sub->add_option("--length,-N", o.length, "resolution length N");
    sub->add_option("--window,-W", o.window, "trailing window W");
    sub->add_option("--r-max", o.r_max, "largest minor size");
    sub->add_option("--seed", o.seed, "random seed (default 0)");
    sub->add_option("--out", o.out_dir, "write the artifact into this directory");
    sub->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--cache-dir", o.cache_dir, std::string("cache directory (default $") + kCacheEnvVar + ")");
    sub->add_flag("--no-cache", o.no_cache, "neither read nor write the cache");
  };
  struct Cmd {
    const char* name;
    const char* help;
    const char* format;
  };
  const Cmd cmds[] = {{"resolve", "minimal free resolution: Betti numbers and orders", "csv"},
                      {"operators", "Eisenbud operators and their action on Ext", "json"},
                      {"minors", "ideals of minors of the differentials", "csv"},
                      {"hilbert", "Hilbert series of A (and of the module)", "json"},
                      {"mf", "matrix factorization and its periodic resolution", "json"},
                      {"verify", "run an experiment and emit a pass/fail report", "json"}};
  std::vector<std::pair<CLI::App*, const Cmd*>> subs;
  for (const auto& c : cmds) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    if (std::string(c.name) == "verify")
      sub->add_option("experiment", o.experiment, "main, cx1, minors, sharpness, hpoly, descent or section")
          ->required();
    common(sub);
    subs.emplace_back(sub, &c);
  }

  std::vector<std::string> argv_storage{"cires"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return kExitError;
  }
  for (const auto& [sub, c] : subs)
    if (sub->parsed()) {
      o.command = c->name;
      if (o.format.empty()) o.format = c->format;
    }
  try {
    return execute(o, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace cires
