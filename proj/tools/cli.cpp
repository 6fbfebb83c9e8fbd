#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <openssl/evp.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "tropsolve/errors.hpp"
#include "tropsolve/freedom.hpp"
#include "tropsolve/io.hpp"
#include "tropsolve/normalize.hpp"
#include "tropsolve/oracle.hpp"
#include "tropsolve/rank.hpp"
#include "tropsolve/reduce.hpp"
#include "tropsolve/solver.hpp"

namespace tropsolve::cli {

namespace {

using nlohmann::json;

struct Report {
  std::string command;
  json inputs = json::array();
  json payload = json::object();
  int exit_code = kExitOk;
};

// ---------------------------------------------------------------------------
// Input handling

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i)
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return hex.str();
}

template <typename Parser>
auto load(Report& report, const std::string& path, Parser parse) {
  std::string text = read_text_file(path);
  report.inputs.push_back({{"path", path}, {"sha256", sha256_hex(text)}});
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Matrix load_matrix_input(Report& r, const std::string& path) {
  return load(r, path, [](const std::string& t) { return parse_matrix(t); });
}

Vector load_vector_input(Report& r, const std::string& path) {
  return load(r, path, [](const std::string& t) { return parse_vector(t); });
}

std::vector<std::size_t> parse_order(const std::string& spec) {
  std::vector<std::size_t> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit))
      throw ParseError("--scan-order: expected comma-separated 1-based indices");
    std::size_t v = std::stoul(item);
    if (v == 0) throw ParseError("--scan-order: indices are 1-based");
    out.push_back(v - 1);
  }
  return out;
}

// ---------------------------------------------------------------------------
// JSON encoding (1-based indices, canonical scalar strings)

json idx(std::size_t i) { return i + 1; }

json indices(const std::vector<std::size_t>& v) {
  json out = json::array();
  for (auto i : v) out.push_back(idx(i));
  return out;
}

json scalars(const Vector& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(to_string(s));
  return out;
}

json rationals(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

json matrix_json(const Matrix& a) {
  json out = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) out.push_back(scalars(row(a, i)));
  return out;
}

json q_json(const QMatrix& q) {
  json out = json::array();
  for (std::size_t i = 0; i < q.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < q.cols(); ++j) r.push_back(to_string(q(i, j)));
    out.push_back(std::move(r));
  }
  return out;
}

/// Solution vector with `unbounded` for uncapped columns.
json solution_json(const Vector& x, const std::vector<std::size_t>& unbounded) {
  json out = scalars(x);
  for (auto j : unbounded) out[j] = "unbounded";
  return out;
}

json coverage_json(const RowCoverage& c) {
  json out = json::array();
  for (std::size_t t = 0; t < c.rows.size(); ++t)
    out.push_back({{"row", idx(c.rows[t])}, {"columns", indices(c.columns[t])}});
  return out;
}

json normalization_json(const NormalizationResult& nr, const std::vector<std::size_t>& rows,
                        const std::vector<std::size_t>& cols) {
  ColumnMinima minima = column_minima(nr.q);
  json argmin = json::array();
  for (const auto& set : minima.argmin) argmin.push_back(indices(set));
  return {{"rows", indices(rows)},
          {"columns", indices(cols)},
          {"a_tilde", matrix_json(nr.a_tilde)},
          {"col_means", rationals(nr.col_means)},
          {"b_tilde", scalars(nr.b_tilde)},
          {"b_mean", to_string(nr.b_mean)},
          {"q", q_json(nr.q)},
          {"y_star", rationals(minima.y_star)},
          {"argmin", argmin}};
}

json combination_json(const std::vector<std::pair<std::size_t, Scalar>>& comb) {
  json out = json::array();
  for (const auto& [c, eta] : comb)
    out.push_back({{"index", idx(c)}, {"coefficient", to_string(eta)}});
  return out;
}

json rank_json(const RankReport& r, const char* kind) {
  json deps = json::array();
  for (const auto& d : r.dependent)
    deps.push_back({{"index", idx(d.index)}, {"combination", combination_json(d.combination)}});
  json trace = json::array();
  for (const auto& s : r.trace)
    trace.push_back({{"target", idx(s.target)},
                     {"verdict", s.verdict == Verdict::dependent ? "dependent" : "independent"}});
  return {{"kind", kind},
          {"rank", r.rank},
          {"independent", indices(r.independent)},
          {"dependent", deps},
          {"trace", trace}};
}

json dof_json(const DofReport& d) {
  json trace = json::array();
  for (const auto& s : d.trace)
    trace.push_back({{"rule", s.rule == DofRule::singleton ? "singleton" : "greedy"},
                     {"column", idx(s.column)},
                     {"removed_rows", indices(s.removed_rows)}});
  return {{"leading", indices(d.leading_cols)},
          {"free", indices(d.free_cols)},
          {"d_f", d.d_f},
          {"trace", trace}};
}

// ---------------------------------------------------------------------------
// Commands

json solve_payload(const SolveOutcome& out) {
  json p;
  if (out.solvable()) {
    const Solvable& s = out.solution();
    p["status"] = "solvable";
    p["x_star"] = solution_json(s.x_star, s.unbounded);
    p["y_star"] = solution_json(s.y_star, s.unbounded);
    p["witness_rows"] = json::array();
    p["forced_bottom"] = indices(s.forced_bottom);
    p["unbounded"] = indices(s.unbounded);
  } else {
    p["status"] = "unsolvable";
    p["x_star"] = nullptr;
    p["y_star"] = nullptr;
    p["witness_rows"] = indices(out.failure().witness_rows);
    p["forced_bottom"] = indices(out.pre.forced_bottom);
    p["unbounded"] = indices(out.pre.unbounded);
  }
  p["coverage"] = coverage_json(out.coverage());
  p["normalization"] = out.normalization
                           ? normalization_json(*out.normalization, out.pre.kept_rows,
                                                out.pre.kept_cols)
                           : json(nullptr);
  return p;
}

json check_payload(const Matrix& a, const Vector& b, const SolveOutcome& out) {
  auto principal = oracle::principal_solution(a, b);
  Vector candidate;
  json principal_json = json::array();
  for (const auto& x : principal) {
    candidate.push_back(x.value_or(Scalar::bottom()));
    principal_json.push_back(x ? to_string(*x) : std::string("unbounded"));
  }
  const bool oracle_solvable = verify(a, candidate, b);
  bool agrees = oracle_solvable == out.solvable();
  if (agrees && out.solvable()) agrees = candidate == out.solution().x_star;

  json exhaustive = nullptr;
  if (a.rows() <= oracle::kMaxExhaustiveDim && a.cols() <= oracle::kMaxExhaustiveDim) {
    bool e = oracle::exhaustive_solvable(a, b);
    exhaustive = e;
    agrees = agrees && e == out.solvable();
  }
  return {{"principal_solution", principal_json},
          {"oracle_solvable", oracle_solvable},
          {"exhaustive_solvable", exhaustive},
          {"agrees", agrees}};
}

Report cmd_normalize(const std::string& a_path, const std::string& b_path) {
  Report r{"normalize"};
  Matrix a = load_matrix_input(r, a_path);
  Vector b = load_vector_input(r, b_path);
  NormalizationResult nr = normalize(a, b);
  std::vector<std::size_t> rows(a.rows()), cols(a.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
  r.payload = normalization_json(nr, rows, cols);
  return r;
}

Report cmd_solve(const std::string& a_path, const std::string& b_path, bool check) {
  Report r{"solve"};
  Matrix a = load_matrix_input(r, a_path);
  Vector b = load_vector_input(r, b_path);
  SolveOutcome out = solve(a, b);
  r.payload = solve_payload(out);
  if (check) r.payload["check"] = check_payload(a, b, out);
  r.exit_code = out.solvable() ? kExitOk : kExitNegative;
  return r;
}

Report cmd_dof(const std::string& a_path, const std::string& b_path, bool exact) {
  Report r{"dof"};
  Matrix a = load_matrix_input(r, a_path);
  Vector b = load_vector_input(r, b_path);
  SolveOutcome out = solve(a, b);
  if (!out.solvable()) {
    r.payload = {{"status", "unsolvable"}, {"witness_rows", indices(out.failure().witness_rows)}};
    r.exit_code = kExitNegative;
    return r;
  }
  r.payload = dof_json(degrees_of_freedom(out.coverage(), a.cols()));
  r.payload["status"] = "solvable";
  if (exact) {
    MinimalCover mc = minimal_leading_oracle(out.coverage(), a.cols());
    r.payload["exact"] = {{"min_size", mc.min_size}, {"witness", indices(mc.witness)}};
  }
  return r;
}

Report cmd_rank(const std::string& a_path, const std::string& order, bool rows) {
  Report r{rows ? "rowrank" : "colrank"};
  Matrix a = load_matrix_input(r, a_path);
  std::vector<std::size_t> scan = order.empty() ? std::vector<std::size_t>{} : parse_order(order);
  RankReport rep = rows ? rowrank(a, scan) : colrank(a, scan);
  r.payload = rank_json(rep, rows ? "row" : "column");
  return r;
}

Report cmd_reduce(const std::string& a_path, const std::string& b_path) {
  Report r{"reduce"};
  Matrix a = load_matrix_input(r, a_path);
  Vector b = load_vector_input(r, b_path);
  ReducedSystem sys = reduce_system(a, b);

  json eta = json::array();
  for (std::size_t t = 0; t < sys.dep_cols.size(); ++t) {
    std::vector<std::pair<std::size_t, Scalar>> comb;
    for (std::size_t i = 0; i < sys.indep_cols.size(); ++i)
      comb.emplace_back(sys.indep_cols[i], sys.eta(i, t));
    eta.push_back({{"column", idx(sys.dep_cols[t])}, {"coefficients", combination_json(comb)}});
  }
  json xi = json::array();
  for (std::size_t t = 0; t < sys.dep_rows.size(); ++t) {
    std::vector<std::pair<std::size_t, Scalar>> comb;
    for (std::size_t j = 0; j < sys.indep_rows.size(); ++j)
      comb.emplace_back(sys.indep_rows[j], sys.xi(t, j));
    xi.push_back({{"row", idx(sys.dep_rows[t])}, {"coefficients", combination_json(comb)}});
  }
  json checks = json::array();
  for (const auto& c : sys.row_consistency)
    checks.push_back({{"row", idx(c.row)}, {"implied", to_string(c.implied)}, {"holds", c.holds}});

  SolveOutcome reduced = solve(sys.a_bar, sys.b_bar);
  const bool solvable = sys.consistent() && reduced.solvable();

  r.payload = {{"indep_cols", indices(sys.indep_cols)},
               {"indep_rows", indices(sys.indep_rows)},
               {"a_bar", matrix_json(sys.a_bar)},
               {"b_bar", scalars(sys.b_bar)},
               {"eta", eta},
               {"xi", xi},
               {"row_consistency", checks},
               {"reduced_solvable", reduced.solvable()},
               {"status", solvable ? "solvable" : "unsolvable"},
               {"dof", nullptr}};
  if (solvable) {
    ReductionDof d = dof_via_reduction(a, b);
    r.payload["dof"] = {{"k", d.k}, {"p", d.p}, {"reduced", d.reduced_dof}, {"direct", d.direct_dof}};
  }
  r.exit_code = solvable ? kExitOk : kExitNegative;
  return r;
}

Report cmd_check_equiv(const std::string& a_path, const std::string& a2_path) {
  Report r{"check-equiv"};
  Matrix a = load_matrix_input(r, a_path);
  Matrix a2 = load_matrix_input(r, a2_path);
  auto alphas = check_equivalence(a, a2);
  r.payload = {{"equivalent", alphas.has_value()},
               {"alphas", alphas ? rationals(*alphas) : json(nullptr)}};
  r.exit_code = alphas ? kExitOk : kExitNegative;
  return r;
}

// ---------------------------------------------------------------------------
// Text rendering. Works only from the JSON payload so both renderings carry
// the same data.

std::string join(const json& arr, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i) out += sep;
    out += arr[i].is_string() ? arr[i].get<std::string>() : arr[i].dump();
  }
  return out;
}

std::string tuple(const json& arr) { return "(" + join(arr) + ")"; }

void grid(std::ostream& os, const json& rows, const json* argmin = nullptr) {
  std::vector<std::vector<std::string>> cells;
  std::size_t width = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::vector<std::string> line;
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      std::string s = rows[i][j].get<std::string>();
      if (argmin && std::find((*argmin)[j].begin(), (*argmin)[j].end(), json(i + 1)) !=
                        (*argmin)[j].end())
        s = "[" + s + "]";
      width = std::max(width, s.size());
      line.push_back(std::move(s));
    }
    cells.push_back(std::move(line));
  }
  for (const auto& line : cells) {
    os << "   ";
    for (const auto& s : line) os << ' ' << std::setw(static_cast<int>(width)) << s;
    os << '\n';
  }
}

void render_normalization(std::ostream& os, const json& n) {
  os << "rows: " << join(n["rows"]) << "\n";
  os << "columns: " << join(n["columns"]) << "\n";
  os << "column means: " << tuple(n["col_means"]) << "\n";
  os << "b mean: " << n["b_mean"].get<std::string>() << "\n";
  os << "normalized A:\n";
  grid(os, n["a_tilde"]);
  os << "normalized b: " << tuple(n["b_tilde"]) << "\n";
  os << "Q (column minima in brackets):\n";
  grid(os, n["q"], &n["argmin"]);
  os << "column minima: " << tuple(n["y_star"]) << "\n";
}

void render_combination(std::ostream& os, const json& comb, const char* prefix) {
  if (comb.empty()) {
    os << "-inf";
    return;
  }
  os << "max(";
  for (std::size_t t = 0; t < comb.size(); ++t) {
    if (t) os << ", ";
    os << prefix << comb[t]["index"].get<std::size_t>() << " + "
       << comb[t]["coefficient"].get<std::string>();
  }
  os << ")";
}

void render_text(std::ostream& os, const Report& r) {
  const json& p = r.payload;
  os << "command: " << r.command << "\n";
  for (const auto& in : r.inputs)
    os << "input: " << in["path"].get<std::string>() << " sha256=" << in["sha256"].get<std::string>()
       << "\n";

  if (r.command == "normalize") {
    render_normalization(os, p);
  } else if (r.command == "solve") {
    os << "status: " << p["status"].get<std::string>() << "\n";
    if (!p["x_star"].is_null()) {
      os << "X* = " << tuple(p["x_star"]) << "\n";
      os << "Y* = " << tuple(p["y_star"]) << "\n";
    }
    os << "witness rows: " << join(p["witness_rows"]) << "\n";
    os << "forced -inf: " << join(p["forced_bottom"]) << "\n";
    os << "unbounded: " << join(p["unbounded"]) << "\n";
    os << "coverage:\n";
    for (const auto& c : p["coverage"])
      os << "  row " << c["row"].get<std::size_t>() << ": " << join(c["columns"]) << "\n";
    if (!p["normalization"].is_null()) render_normalization(os, p["normalization"]);
    if (p.contains("check")) {
      const json& c = p["check"];
      os << "check: principal solution " << tuple(c["principal_solution"])
         << ", oracle solvable " << c["oracle_solvable"].dump() << ", exhaustive "
         << c["exhaustive_solvable"].dump() << ", agrees " << c["agrees"].dump() << "\n";
    }
  } else if (r.command == "dof") {
    os << "status: " << p["status"].get<std::string>() << "\n";
    if (p["status"] == "unsolvable") {
      os << "witness rows: " << join(p["witness_rows"]) << "\n";
      return;
    }
    os << "leading: " << join(p["leading"]) << "\n";
    os << "free: " << join(p["free"]) << "\n";
    os << "degrees of freedom: " << p["d_f"].dump() << "\n";
    os << "trace:\n";
    for (const auto& s : p["trace"])
      os << "  " << s["rule"].get<std::string>() << " column " << s["column"].dump()
         << " removes rows " << join(s["removed_rows"]) << "\n";
    if (p.contains("exact"))
      os << "exact minimum leading set: " << p["exact"]["min_size"].dump() << " {"
         << join(p["exact"]["witness"]) << "}\n";
  } else if (r.command == "colrank" || r.command == "rowrank") {
    const bool rows = p["kind"] == "row";
    const char* label = rows ? "R" : "A";
    os << (rows ? "row" : "column") << " rank: " << p["rank"].dump() << "\n";
    os << "independent: " << join(p["independent"]) << "\n";
    for (const auto& d : p["dependent"]) {
      os << "  " << label << d["index"].dump() << " = ";
      render_combination(os, d["combination"], label);
      os << "\n";
    }
    os << "scan:\n";
    for (const auto& s : p["trace"])
      os << "  " << s["target"].dump() << " " << s["verdict"].get<std::string>() << "\n";
  } else if (r.command == "reduce") {
    os << "independent columns: " << join(p["indep_cols"]) << "\n";
    os << "independent rows: " << join(p["indep_rows"]) << "\n";
    os << "reduced A:\n";
    grid(os, p["a_bar"]);
    os << "reduced b: " << tuple(p["b_bar"]) << "\n";
    for (const auto& e : p["eta"]) {
      os << "  A" << e["column"].dump() << " = ";
      render_combination(os, e["coefficients"], "A");
      os << "\n";
    }
    for (const auto& x : p["xi"]) {
      os << "  R" << x["row"].dump() << " = ";
      render_combination(os, x["coefficients"], "R");
      os << "\n";
    }
    for (const auto& c : p["row_consistency"])
      os << "  row " << c["row"].dump() << " implies b = " << c["implied"].get<std::string>()
         << (c["holds"].get<bool>() ? " (holds)" : " (violated)") << "\n";
    os << "reduced system solvable: " << p["reduced_solvable"].dump() << "\n";
    os << "status: " << p["status"].get<std::string>() << "\n";
    if (!p["dof"].is_null())
      os << "degrees of freedom: k=" << p["dof"]["k"].dump() << " p=" << p["dof"]["p"].dump()
         << " k-p=" << p["dof"]["reduced"].dump() << " direct=" << p["dof"]["direct"].dump()
         << "\n";
  } else if (r.command == "check-equiv") {
    os << "equivalent: " << p["equivalent"].dump() << "\n";
    if (!p["alphas"].is_null()) os << "alphas: " << tuple(p["alphas"]) << "\n";
  }
}

json to_json(const Report& r) {
  return {{"command", r.command},
          {"inputs", r.inputs},
          {"payload", r.payload},
          {"exit_code", r.exit_code}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact max-plus linear system solver"};
  app.require_subcommand(1);
  bool as_json = false;
  std::string a_path, b_path, a2_path, order;
  bool check = false, exact = false;

  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", as_json, "emit a JSON report"); };

  auto* normalize_cmd = app.add_subcommand("normalize", "normalized system and Q");
  normalize_cmd->add_option("A", a_path, "matrix file")->required();
  normalize_cmd->add_option("b", b_path, "vector file")->required();
  add_json(normalize_cmd);

  auto* solve_cmd = app.add_subcommand("solve", "maximal solution of AX = b");
  solve_cmd->add_option("A", a_path, "matrix file")->required();
  solve_cmd->add_option("b", b_path, "vector file")->required();
  solve_cmd->add_flag("--check", check, "cross-check against the brute-force oracles");
  add_json(solve_cmd);

  auto* dof_cmd = app.add_subcommand("dof", "leading variables and degrees of freedom");
  dof_cmd->add_option("A", a_path, "matrix file")->required();
  dof_cmd->add_option("b", b_path, "vector file")->required();
  dof_cmd->add_flag("--exact", exact, "also report the exact minimum leading set");
  add_json(dof_cmd);

  auto* colrank_cmd = app.add_subcommand("colrank", "column rank");
  colrank_cmd->add_option("A", a_path, "matrix file")->required();
  colrank_cmd->add_option("--scan-order", order, "column layout, 1-based, comma-separated");
  add_json(colrank_cmd);

  auto* rowrank_cmd = app.add_subcommand("rowrank", "row rank");
  rowrank_cmd->add_option("A", a_path, "matrix file")->required();
  rowrank_cmd->add_option("--scan-order", order, "row layout, 1-based, comma-separated");
  add_json(rowrank_cmd);

  auto* reduce_cmd = app.add_subcommand("reduce", "row-column reduction of AX = b");
  reduce_cmd->add_option("A", a_path, "matrix file")->required();
  reduce_cmd->add_option("b", b_path, "vector file")->required();
  add_json(reduce_cmd);

  auto* equiv_cmd = app.add_subcommand("check-equiv", "test A2_j = A_j + alpha_j");
  equiv_cmd->add_option("A", a_path, "matrix file")->required();
  equiv_cmd->add_option("A2", a2_path, "matrix file")->required();
  add_json(equiv_cmd);

  std::vector<std::string> argv_store{"tropsolve"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Report report;
    if (normalize_cmd->parsed())
      report = cmd_normalize(a_path, b_path);
    else if (solve_cmd->parsed())
      report = cmd_solve(a_path, b_path, check);
    else if (dof_cmd->parsed())
      report = cmd_dof(a_path, b_path, exact);
    else if (colrank_cmd->parsed())
      report = cmd_rank(a_path, order, false);
    else if (rowrank_cmd->parsed())
      report = cmd_rank(a_path, order, true);
    else if (reduce_cmd->parsed())
      report = cmd_reduce(a_path, b_path);
    else
      report = cmd_check_equiv(a_path, a2_path);

    if (as_json)
      out << to_json(report).dump(2) << "\n";
    else
      render_text(out, report);
    return report.exit_code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace tropsolve::cli
