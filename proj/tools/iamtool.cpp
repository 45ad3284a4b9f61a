// iamtool: counts, enumeration, bijections, generating functions and the
// verification suite for maximal I_k-avoiding matrices.
//
// Exit codes: 0 ok, 1 usage or invalid input, 2 verification failure,
// 3 enumeration budget exceeded.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "iam/acceptance.hpp"
#include "iam/bijection.hpp"
#include "iam/formulas.hpp"
#include "iam/genfunc.hpp"
#include "iam/json_io.hpp"
#include "iam/oracle.hpp"
#include "iam/skew.hpp"
#include "iam/symmetry.hpp"

using namespace iam;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;
constexpr int kExitBudget = 3;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string format = "text";
  std::uint64_t seed = kDefaultSeed;
  std::size_t budget = 64;
  std::string out_path;

  std::optional<int> m, n, k, t;
  std::vector<int> lambda, mu;
  std::string tag;
  bool with_oracle = false;
  std::string catalog;
  std::optional<int> upto;

  std::optional<std::size_t> limit;
  bool with_stats = false;

  std::string to;
  std::string in_path;

  bool t1 = false;
  int points = 20;

  bool quick = false;
  std::vector<int> only;
};

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : sep) + p;
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

class Runner {
 public:
  explicit Runner(const RunConfig& cfg) : cfg_(cfg) {
    if (!cfg_.out_path.empty()) {
      file_ = std::make_unique<std::ofstream>(cfg_.out_path);
      if (!*file_) throw UsageError("cannot open " + cfg_.out_path);
      out_ = file_.get();
    }
  }

  int count();
  int enumerate();
  int biject();
  int genfunc();
  int selftest();

 private:
  std::ostream& out() { return *out_; }
  EnumerationBudget budget() const {
    EnumerationBudget b;
    b.max_cells = cfg_.budget;
    b.max_results = cfg_.limit;
    return b;
  }
  bool has_shape() const { return !cfg_.lambda.empty(); }
  SkewShape shape() const { return SkewShape(Partition(cfg_.lambda), Partition(cfg_.mu)); }
  int need_k() const {
    if (!cfg_.k) throw UsageError("--k is required");
    return *cfg_.k;
  }
  std::pair<int, int> need_mn() const {
    if (!cfg_.n) throw UsageError("--n is required");
    return {cfg_.m.value_or(*cfg_.n), *cfg_.n};
  }

  struct CountRow {
    std::vector<std::string> id;
    BigInt formula;
    std::optional<BigInt> oracle;
  };
  CountRow count_one(std::vector<std::string> id, const std::function<BigInt()>& formula,
                     const std::function<BigInt()>& oracle);
  int emit_counts(const std::vector<CountRow>& rows, const std::vector<std::string>& id_columns);
  CountRow count_shape(const SkewShape& s, int k);

  const RunConfig& cfg_;
  std::unique_ptr<std::ofstream> file_;
  std::ostream* out_ = &std::cout;
};

Runner::CountRow Runner::count_one(std::vector<std::string> id, const std::function<BigInt()>& formula,
                                   const std::function<BigInt()>& oracle) {
  CountRow row{std::move(id), formula(), std::nullopt};
  if (cfg_.with_oracle) row.oracle = oracle();
  return row;
}

Runner::CountRow Runner::count_shape(const SkewShape& s, int k) {
  return count_one(
      {s.to_string(), std::to_string(k)}, [&] { return count_skew_fillings(s, k); },
      [&] { return oracle_count_shape(s, k, budget()); });
}

int Runner::emit_counts(const std::vector<CountRow>& rows, const std::vector<std::string>& id_columns) {
  bool agree = true;
  const bool csv = cfg_.format == "csv";
  if (csv) {
    for (const auto& c : id_columns) out() << c << ",";
    out() << "formula" << (cfg_.with_oracle ? ",oracle,verdict" : "") << "\n";
  }
  for (const auto& row : rows) {
    const bool same = !row.oracle || *row.oracle == row.formula;
    agree = agree && same;
    const char* verdict = same ? "AGREE" : "DISAGREE";
    if (cfg_.format == "json") {
      Json j{{"id", join(row.id, " ")}, {"count", to_string(row.formula)}};
      if (row.oracle) {
        j["oracle"] = to_string(*row.oracle);
        j["verdict"] = verdict;
      }
      out() << j.dump() << "\n";
    } else if (csv) {
      for (const auto& f : row.id) out() << csv_field(f) << ",";
      out() << to_string(row.formula);
      if (row.oracle) out() << "," << to_string(*row.oracle) << "," << verdict;
      out() << "\n";
    } else {
      if (rows.size() > 1) out() << join(row.id, " ") << " ";
      out() << to_string(row.formula);
      if (row.oracle) out() << " " << to_string(*row.oracle) << " " << verdict;
      out() << "\n";
    }
  }
  return agree ? 0 : kExitVerification;
}

int Runner::count() {
  std::vector<CountRow> rows;
  if (!cfg_.catalog.empty()) {
    std::ifstream in(cfg_.catalog);
    if (!in) throw UsageError("cannot open catalog " + cfg_.catalog);
    std::string line;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      const Json j = Json::parse(line);
      const int k = j.contains("k") ? j.at("k").get<int>() : need_k();
      rows.push_back(count_shape(shape_from_json(j), k));
    }
    return emit_counts(rows, {"shape", "k"});
  }
  if (has_shape()) {
    rows.push_back(count_shape(shape(), need_k()));
    return emit_counts(rows, {"shape", "k"});
  }
  std::optional<SymmetryClassTag> tag;
  if (!cfg_.tag.empty()) tag = parse_symmetry_tag(cfg_.tag);
  auto rect_row = [&](int m, int n, int k) {
    std::vector<std::string> id{std::to_string(m), std::to_string(n), std::to_string(k)};
    if (tag) {
      return count_one(
          id, [&] { return count_symmetry(*tag, m, n, k); },
          [&] { return brute_count_class(*tag, m, n, k, budget()); });
    }
    if (cfg_.t) {
      const int t = *cfg_.t;
      return count_one(
          {id[0], id[1], id[2], std::to_string(t)}, [&] { return count_truncated_rect(m, n, k, t); },
          [&] { return oracle_count_shape(TruncatedRect(m, n, k, t).shape(), k, budget()); });
    }
    return count_one(
        id, [&] { return count_iams(m, n, k); }, [&] { return oracle_count(m, n, k, budget()); });
  };
  std::vector<std::string> columns{"m", "n", "k"};
  if (cfg_.t && !tag) columns.push_back("t");
  if (cfg_.upto) {
    for (int m = 2; m <= *cfg_.upto; ++m)
      for (int n = m; n <= *cfg_.upto; ++n)
        for (int k = 2; k <= m; ++k) {
          if (tag && requires_square(*tag) && m != n) continue;
          rows.push_back(rect_row(m, n, k));
        }
    return emit_counts(rows, columns);
  }
  const auto [m, n] = need_mn();
  rows.push_back(rect_row(m, n, need_k()));
  return emit_counts(rows, columns);
}

int Runner::enumerate() {
  const int k = need_k();
  if (has_shape()) {
    for (const auto& f : enumerate_maximal_fillings(shape(), k, budget())) out() << to_json(f).dump() << "\n";
    return 0;
  }
  const auto [m, n] = need_mn();
  std::optional<SymmetryClassTag> tag;
  if (!cfg_.tag.empty()) tag = parse_symmetry_tag(cfg_.tag);
  for (const auto& mat : enumerate_maximal_iams(m, n, k, budget())) {
    if (tag && !in_class(mat, *tag)) continue;
    Json j = to_json(mat);
    if (cfg_.with_stats) {
      const auto s = stats(mat, k);
      j["v"] = s.v;
      j["vd"] = s.vd;
      j["d"] = s.d;
      j["pp"] = to_json(matrix_to_pp(mat, k));
    }
    out() << j.dump() << "\n";
  }
  return 0;
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

int Runner::biject() {
  const std::string text = read_input(cfg_.in_path);
  Json input;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] != '{' && text[first] != '[' && text[first] != '"') {
    input = Json(text.substr(first, text.find_last_not_of(" \t\r\n") - first + 1));
  } else {
    input = Json::parse(text);
  }

  // Normalize everything to a matrix first; the round trip is checked there.
  BinaryMatrix mat(1, 1);
  int k = 0;
  if (input.is_string()) {
    mat = BinaryMatrix::from_string(input.get<std::string>());
    k = need_k();
  } else if (input.is_object() && input.contains("rows")) {
    mat = matrix_from_json(input);
    k = need_k();
  } else if (input.is_object() && input.contains("pi")) {
    const auto pp = pp_from_json(input);
    k = cfg_.k.value_or(pp.bound() + 1);
    mat = pp_to_matrix(pp, pp.rows() + k - 1, pp.cols() + k - 1, k);
  } else if (input.is_array()) {
    const auto family = paths_from_json(input);
    k = static_cast<int>(family.paths.size()) + 1;
    const auto [m, n] = need_mn();
    mat = paths_to_matrix(family, m, n, k);
  } else {
    throw UsageError("input is not a matrix, plane partition or path family");
  }
  if (!is_maximal_iam(mat, k)) throw UsageError("input is not a maximal I_" + std::to_string(k) + "-avoiding matrix");

  const auto pp = matrix_to_pp(mat, k);
  const auto paths = matrix_to_paths(mat, k);
  const bool round_trip = pp_to_matrix(pp, mat.rows(), mat.cols(), k) == mat &&
                          paths_to_matrix(paths, mat.rows(), mat.cols(), k) == mat;

  Json result;
  if (cfg_.to == "pp") {
    result = to_json(pp);
  } else if (cfg_.to == "paths") {
    result = to_json(paths);
  } else {
    result = to_json(mat);
  }
  if (cfg_.format == "json") {
    out() << Json{{"k", k}, {"output", result}, {"round_trip", round_trip}}.dump() << "\n";
  } else {
    out() << result.dump() << "\n";
  }
  if (!round_trip) {
    std::cerr << "round trip failed\n";
    return kExitVerification;
  }
  return 0;
}

int Runner::genfunc() {
  const auto [m, n] = need_mn();
  const int k = need_k();
  if (cfg_.t1) {
    const QPoly p = volume_gf(m, n, k);
    if (cfg_.format == "json") {
      out() << Json{{"m", m}, {"n", n}, {"k", k}, {"coefficients", to_json(p)}}.dump() << "\n";
    } else {
      out() << p.to_csv() << "\n";
    }
    return 0;
  }
  bool agree = true;
  if (cfg_.format == "csv") out() << "q,t,lhs,rhs,verdict\n";
  for (const auto& [q, t] : sample_gf_points(cfg_.seed, cfg_.points, m + n + 2)) {
    const Rational lhs = gf_lhs(m, n, k, q, t);
    const Rational rhs = gf_rhs(m, n, k, q, t);
    const bool same = lhs == rhs;
    agree = agree && same;
    const char* verdict = same ? "AGREE" : "DISAGREE";
    if (cfg_.format == "json") {
      out() << Json{{"q", to_string(q)}, {"t", to_string(t)}, {"lhs", to_string(lhs)},
                    {"rhs", to_string(rhs)}, {"verdict", verdict}}
                   .dump()
            << "\n";
    } else {
      const char* sep = cfg_.format == "csv" ? "," : " ";
      out() << to_string(q) << sep << to_string(t) << sep << to_string(lhs) << sep << to_string(rhs)
            << sep << verdict << "\n";
    }
  }
  return agree ? 0 : kExitVerification;
}

int Runner::selftest() {
  AcceptanceOptions opt;
  opt.quick = cfg_.quick;
  opt.seed = cfg_.seed;
  opt.only = cfg_.only;
  bool ok = true;
  run_acceptance(opt, [&](const CriterionResult& r) {
    ok = ok && r.pass;
    if (cfg_.format == "json") {
      out() << Json{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"seconds", r.seconds},
                    {"detail", r.detail}}
                   .dump()
            << std::endl;
    } else {
      out() << format_result(r) << std::endl;
    }
  });
  return ok ? 0 : kExitVerification;
}

void add_size_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--m", cfg.m, "Rows (defaults to --n)");
  cmd->add_option("--n", cfg.n, "Columns");
  cmd->add_option("--k", cfg.k, "Forbidden chain length");
}

void add_shape_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--lambda", cfg.lambda, "Outer partition, e.g. 5,5,5,4")->delimiter(',');
  cmd->add_option("--mu", cfg.mu, "Inner partition, e.g. 1,0,0,0")->delimiter(',');
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximal I_k-avoiding matrices: counts, enumeration, bijections, verification"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for randomized checks")->capture_default_str();
  app.add_option("--budget", cfg.budget, "Largest number of cells the oracle may search")
      ->capture_default_str();
  app.add_option("--out", cfg.out_path, "Write output to this file");

  auto* count = app.add_subcommand("count", "Closed-form count, optionally checked by the oracle");
  add_size_options(count, cfg);
  add_shape_options(count, cfg);
  count->add_option("--t", cfg.t, "Staircase size of a truncated rectangle");
  count->add_option("--class", cfg.tag, "Symmetry class: U DS AS DAS VS HS VHS QTS HTS TS");
  count->add_flag("--with-oracle", cfg.with_oracle, "Also count by exhaustive search");
  count->add_option("--catalog", cfg.catalog, "JSON-lines file of shapes to count");
  count->add_option("--upto", cfg.upto, "Sweep 2 <= k <= m <= n <= N");

  auto* enumerate = app.add_subcommand("enumerate", "Stream maximal matrices or fillings as JSON lines");
  add_size_options(enumerate, cfg);
  add_shape_options(enumerate, cfg);
  enumerate->add_option("--class", cfg.tag, "Keep only members of this symmetry class");
  enumerate->add_option("--limit", cfg.limit, "Stop after this many results");
  enumerate->add_flag("--stats", cfg.with_stats, "Attach v, vd, d and the plane partition");

  auto* biject = app.add_subcommand("biject", "Convert between matrix, plane partition and paths");
  add_size_options(biject, cfg);
  biject->add_option("--to", cfg.to, "Target representation")
      ->required()
      ->check(CLI::IsMember({"pp", "paths", "matrix"}));
  biject->add_option("--in", cfg.in_path, "Input file (default stdin)");

  auto* genfunc = app.add_subcommand("genfunc", "Volume polynomial or (q,t) identity check");
  add_size_options(genfunc, cfg);
  genfunc->add_flag("--t1", cfg.t1, "Print the volume polynomial coefficients");
  genfunc->add_option("--points", cfg.points, "Number of seeded (q,t) points")->capture_default_str();

  auto* selftest = app.add_subcommand("selftest", "Run the verification suite");
  selftest->add_flag("--quick", cfg.quick, "Smaller sweeps");
  selftest->add_option("--only", cfg.only, "Run only these check ids")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    Runner run(cfg);
    if (*count) return run.count();
    if (*enumerate) return run.enumerate();
    if (*biject) return run.biject();
    if (*genfunc) return run.genfunc();
    if (*selftest) return run.selftest();
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const InvariantViolation& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kExitVerification;
  } catch (const Json::exception& e) {
    std::cerr << "bad JSON: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
