#include "peakalg/cli.hpp"

#include <unistd.h>

#include <chrono>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "peakalg/nsqf.hpp"
#include "peakalg/peak.hpp"
#include "peakalg/qsym.hpp"
#include "peakalg/tableaux.hpp"
#include "peakalg/verify.hpp"

namespace peakalg {

const char* status_name(Status s) {
  switch (s) {
    case Status::Ok:
      return "ok";
    case Status::Verified:
      return "verified";
    case Status::Violation:
      return "violation";
    case Status::Error:
      return "error";
  }
  return "error";
}

int exit_code(Status s) {
  switch (s) {
    case Status::Ok:
    case Status::Verified:
      return 0;
    case Status::Violation:
      return 2;
    case Status::Error:
      return 1;
  }
  return 1;
}

Json CommandResult::to_json() const {
  return Json{{"status", status_name(status)},
              {"elapsed_ms", elapsed_ms},
              {"payload", payload}};
}

namespace {

Json parts_array(const std::vector<int>& parts) {
  Json arr = Json::array();
  for (int p : parts) arr.push_back(p);
  return arr;
}

bool is_nsym_basis(const std::string& s) {
  return s == "H" || s == "E" || s == "R" || s == "Q" || s == "Pi" ||
         s == "S";
}

bool is_qsym_basis(const std::string& s) {
  return s == "M" || s == "F" || s == "K" || s == "SStar" ||
         s == "SBarStar";
}

/* Rewrites any element of the peak subalgebra over Q words; H/E/R inputs go
 * through the odd-word coordinates degree by degree. */
NSymElement nsym_to_q(const NSymElement& a) {
  switch (a.basis()) {
    case Basis::Q:
      return a;
    case Basis::S:
      return expand_s(a);
    case Basis::Pi: {
      NSymElement out(Basis::Q);
      for (const auto& [idx, c] : a.terms())
        out.add_scaled(pi_in_q_odd(PeakSet(idx.descents(), idx.weight())),
                       c);
      return out;
    }
    default: {
      const NSymElement h = to_h(a);
      NSymElement out(Basis::Q);
      std::map<int, NSymElement> by_degree;
      for (const auto& [idx, c] : h.terms()) {
        if (idx.empty()) {
          out.add(idx, c);
          continue;
        }
        by_degree.try_emplace(idx.weight(), Basis::H)
            .first->second.add(idx, c);
      }
      for (const auto& [n, comp] : by_degree) {
        const std::vector<Rational> coords = odd_q_coordinates(comp, n);
        const std::vector<Composition> odd = odd_compositions(n);
        for (size_t i = 0; i < odd.size(); ++i)
          if (coords[i] != 0) out.add(odd[i], coords[i]);
      }
      return out;
    }
  }
}

NSymElement expand_nsym(Basis src, const Composition& idx, Basis dst) {
  const NSymElement a = NSymElement::monomial(src, idx);
  switch (dst) {
    case Basis::H:
      return to_h(a);
    case Basis::E:
      return to_e(a);
    case Basis::R:
      return to_r(a);
    case Basis::Q:
      return nsym_to_q(a);
    case Basis::Pi:
      return q_element_to_pi(nsym_to_q(a));
    case Basis::S:
      if (src == Basis::S) return a;
      return expand_in_nsqf(a, idx.weight());
  }
  throw std::invalid_argument("unknown target basis");
}

QSymElement expand_qsym(QBasis src, const Composition& idx, QBasis dst) {
  if (src == dst) return QSymElement::monomial(src, idx);
  const int n = idx.weight();
  switch (src) {
    case QBasis::M:
      if (dst == QBasis::F)
        return m_to_f(QSymElement::monomial(QBasis::M, idx));
      if (dst == QBasis::K)
        return expand_over_k(QSymElement::monomial(QBasis::M, idx), n);
      break;
    case QBasis::F:
      if (dst == QBasis::M) return f_to_m_word(idx);
      if (dst == QBasis::K)
        return vartheta(QSymElement::monomial(QBasis::F, idx));
      break;
    case QBasis::K:
      if (dst == QBasis::M) return k_to_m(idx);
      if (dst == QBasis::F) return k_to_f(idx);
      break;
    case QBasis::SStar:
      if (dst == QBasis::M) return qsqf_star_m(idx);
      if (dst == QBasis::F) return qsqf_star_f(idx);
      if (dst == QBasis::K) return expand_over_k(qsqf_star_m(idx), n);
      break;
    case QBasis::SBarStar:
      if (dst == QBasis::M) return qsqf_bar_star_m(idx);
      if (dst == QBasis::F) return m_to_f(qsqf_bar_star_m(idx));
      if (dst == QBasis::K) return expand_over_k(qsqf_bar_star_m(idx), n);
      break;
  }
  throw std::invalid_argument("no expansion from " +
                              std::string(qbasis_name(src)) + " to " +
                              std::string(qbasis_name(dst)));
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  q += '"';
  return q;
}

std::string join_json_ints(const Json& arr, const char* sep) {
  std::string s;
  for (const auto& v : arr) {
    if (!s.empty()) s += sep;
    s += std::to_string(v.get<int>());
  }
  return s;
}

std::string pretty_element_payload(const Json& e) {
  const Json& terms = e.at("terms");
  if (terms.empty()) return "0";
  const std::string basis = e.at("basis").get<std::string>();
  std::string s;
  for (const auto& term : terms) {
    std::string cs = term.at("coeff").get<std::string>();
    if (s.empty()) {
    } else if (cs[0] == '-') {
      s += " - ";
      cs = cs.substr(1);
    } else {
      s += " + ";
    }
    s += cs + "*" + basis + "[" + join_json_ints(term.at("index"), ",") +
         "]";
  }
  return s;
}

std::string render_csv(const CommandResult& r, const std::string& command) {
  std::ostringstream os;
  if (command == "matrix") {
    return matrix_csv(matrix_from_json(r.payload));
  }
  if (command == "verify") {
    os << "name,pass,detail\n";
    for (const auto& c : r.payload.at("checks"))
      os << csv_quote(c.at("name").get<std::string>()) << ","
         << (c.at("pass").get<bool>() ? "true" : "false") << ","
         << csv_quote(c.at("detail").get<std::string>()) << "\n";
    return os.str();
  }
  if (command == "scan-conjecture") {
    os << "n,nonnegative,integral,unitriangular,witness\n";
    for (const auto& row : r.payload.at("rows"))
      os << row.at("n").get<int>() << ","
         << (row.at("nonnegative").get<bool>() ? "true" : "false") << ","
         << (row.at("integral").get<bool>() ? "true" : "false") << ","
         << (row.at("unitriangular").get<bool>() ? "true" : "false") << ","
         << csv_quote(row.at("witness").get<std::string>()) << "\n";
    return os.str();
  }
  if (command == "expand" || command == "pieri") {
    const Json& e = r.payload.at("result");
    os << "basis,index,coeff\n";
    for (const auto& term : e.at("terms"))
      os << e.at("basis").get<std::string>() << ","
         << csv_quote(join_json_ints(term.at("index"), ",")) << ","
         << term.at("coeff").get<std::string>() << "\n";
    return os.str();
  }
  if (command == "pct") {
    os << "shape,rows,p,m\n";
    const std::string shape = join_json_ints(r.payload.at("shape"), ",");
    for (const auto& t : r.payload.at("tableaux")) {
      std::string rows;
      for (const auto& row : t.at("rows")) {
        if (!rows.empty()) rows += "|";
        rows += join_json_ints(row, " ");
      }
      os << csv_quote(shape) << "," << csv_quote(rows) << ","
         << t.at("p").get<int>() << "," << t.at("m").get<int>() << "\n";
    }
    return os.str();
  }
  if (command == "covers") {
    os << "lower,upper,row\n";
    for (const auto& e : r.payload.at("covers"))
      os << csv_quote(join_json_ints(e.at("lower"), ",")) << ","
         << csv_quote(join_json_ints(e.at("upper"), ",")) << ","
         << e.at("row").get<int>() << "\n";
    return os.str();
  }
  return r.payload.dump(2) + "\n";
}

std::string render_pretty(const CommandResult& r,
                          const std::string& command) {
  std::ostringstream os;
  if (command == "matrix")
    return pretty_matrix(matrix_from_json(r.payload));
  if (command == "expand" || command == "pieri")
    return pretty_element_payload(r.payload.at("result")) + "\n";
  if (command == "verify") {
    int passed = 0, total = 0;
    for (const auto& c : r.payload.at("checks")) {
      ++total;
      const bool pass = c.at("pass").get<bool>();
      if (pass) ++passed;
      os << (pass ? "[PASS] " : "[FAIL] ")
         << c.at("name").get<std::string>();
      const std::string detail = c.at("detail").get<std::string>();
      if (!pass && !detail.empty()) os << ": " << detail;
      os << "\n";
    }
    os << passed << " of " << total << " checks passed\n";
    return os.str();
  }
  if (command == "scan-conjecture") {
    for (const auto& row : r.payload.at("rows")) {
      os << "n=" << row.at("n").get<int>()
         << "  nonnegative=" << (row.at("nonnegative").get<bool>() ? "yes" : "NO")
         << "  integral=" << (row.at("integral").get<bool>() ? "yes" : "NO")
         << "  unitriangular="
         << (row.at("unitriangular").get<bool>() ? "yes" : "NO") << "\n";
      const std::string w = row.at("witness").get<std::string>();
      if (!w.empty()) os << "  witness: " << w << "\n";
    }
    os << "status: " << status_name(r.status) << "\n";
    return os.str();
  }
  if (command == "pct") {
    for (const auto& t : r.payload.at("tableaux")) {
      for (const auto& row : t.at("rows"))
        os << join_json_ints(row, " ") << "\n";
      os << "p=" << t.at("p").get<int>() << " m=" << t.at("m").get<int>()
         << "\n\n";
    }
    os << "count: " << r.payload.at("count").get<int>()
       << "  weight sum: " << r.payload.at("weight_sum").get<std::string>()
       << "\n";
    return os.str();
  }
  if (command == "covers") {
    for (const auto& e : r.payload.at("covers"))
      os << "(" << join_json_ints(e.at("lower"), ",") << ") -> ("
         << join_json_ints(e.at("upper"), ",") << ")  row "
         << e.at("row").get<int>() << "\n";
    return os.str();
  }
  return r.payload.dump(2) + "\n";
}

std::vector<CheckResult> run_suite(const std::string& name, int max_n) {
  if (name == "tables") return verify_tables();
  if (name == "relations") return verify_relations();
  if (name == "euler") return verify_euler(max_n);
  if (name == "oracles") return verify_oracles();
  if (name == "pieri") return verify_pieri();
  if (name == "dual") return verify_dual();
  if (name == "classical") return verify_classical();
  if (name == "expansions") return verify_expansions();
  if (name == "tableaux") return verify_tableaux();
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace

CommandResult cmd_expand(const std::string& basis, const std::string& index,
                         const std::string& to) {
  const Composition idx = Composition::parse(index);
  Json result;
  if (is_nsym_basis(basis) && is_nsym_basis(to))
    result = element_json(
        expand_nsym(basis_from_name(basis), idx, basis_from_name(to)));
  else if (is_qsym_basis(basis) && is_qsym_basis(to))
    result = element_json(
        expand_qsym(qbasis_from_name(basis), idx, qbasis_from_name(to)));
  else
    throw std::invalid_argument("cannot expand basis '" + basis +
                                "' into '" + to + "'");
  CommandResult r;
  r.payload = Json{{"from", Json{{"basis", basis},
                                 {"index", parts_array(idx.parts())}}},
                   {"to", to},
                   {"result", std::move(result)}};
  return r;
}

CommandResult cmd_matrix(int n, const std::string& pair) {
  if (n < 1) throw std::invalid_argument("matrix needs n >= 1");
  const size_t comma = pair.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("pair must look like Q,S");
  const MatrixPair p = matrix_pair_from_names(pair.substr(0, comma),
                                              pair.substr(comma + 1));
  CommandResult r;
  r.payload = matrix_json(transition_matrix(n, p));
  return r;
}

CommandResult cmd_verify(const std::string& suite, int max_n) {
  if (max_n < 1) throw std::invalid_argument("verify needs max_n >= 1");
  std::vector<CheckResult> checks;
  if (suite == "all") {
    for (const char* name :
         {"tables", "relations", "euler", "oracles", "pieri", "dual",
          "classical", "expansions", "tableaux"}) {
      auto part = run_suite(name, max_n);
      checks.insert(checks.end(), part.begin(), part.end());
    }
  } else {
    checks = run_suite(suite, max_n);
  }

  Json arr = Json::array();
  int failed = 0;
  for (const auto& c : checks) {
    if (!c.pass) ++failed;
    arr.push_back(Json{{"name", c.name}, {"pass", c.pass},
                       {"detail", c.detail}});
  }
  CommandResult r;
  r.status = failed == 0 ? Status::Verified : Status::Violation;
  r.payload = Json{{"suite", suite},
                   {"checks", std::move(arr)},
                   {"passed", static_cast<int>(checks.size()) - failed},
                   {"failed", failed}};
  return r;
}

CommandResult cmd_scan_conjecture(int max_n, int jobs) {
  const std::vector<ScanRow> rows = scan_conjecture(max_n, jobs);
  Json arr = Json::array();
  bool all = true;
  for (const ScanRow& row : rows) {
    all = all && row.nonnegative && row.integral && row.unitriangular;
    arr.push_back(Json{{"n", row.n},
                       {"nonnegative", row.nonnegative},
                       {"integral", row.integral},
                       {"unitriangular", row.unitriangular},
                       {"witness", row.witness}});
  }
  CommandResult r;
  r.status = all ? Status::Verified : Status::Violation;
  r.payload = Json{{"max_n", max_n}, {"rows", std::move(arr)}};
  return r;
}

CommandResult cmd_pct(const std::string& shape, const std::string& content) {
  const Composition sh = Composition::parse(shape);
  const Composition ct = Composition::parse(content);
  const std::vector<Tableau> list = pct(sh, ct);
  Json arr = Json::array();
  for (const Tableau& t : list) {
    Json tj = tableau_json(t);
    tj["p"] = p_stat(t);
    tj["m"] = m_stat(t);
    arr.push_back(std::move(tj));
  }
  CommandResult r;
  r.payload = Json{{"shape", parts_array(sh.parts())},
                   {"content", parts_array(ct.parts())},
                   {"count", static_cast<int>(list.size())},
                   {"tableaux", std::move(arr)},
                   {"weight_sum", rational_str(pct_weight_sum(sh, ct))}};
  return r;
}

CommandResult cmd_pieri(const std::string& alpha, int s, bool peak) {
  if (s < 0) throw std::invalid_argument("pieri needs s >= 0");
  const Composition a = Composition::parse(alpha);
  const NSymElement e = peak ? pieri_peak(a, s) : pieri(a, s);
  CommandResult r;
  r.payload = Json{{"alpha", parts_array(a.parts())},
                   {"s", s},
                   {"peak", peak},
                   {"result", element_json(e)}};
  return r;
}

CommandResult cmd_covers(const std::string& alpha) {
  const Composition a = Composition::parse(alpha);
  Json arr = Json::array();
  for (const PosetEdge& e : poset_covers(a))
    arr.push_back(Json{{"lower", parts_array(e.lower.parts())},
                       {"upper", parts_array(e.upper.parts())},
                       {"row", e.row}});
  CommandResult r;
  r.payload = Json{{"alpha", parts_array(a.parts())},
                   {"covers", std::move(arr)}};
  return r;
}

std::string render(const CommandResult& r, Format f,
                   const std::string& command) {
  switch (f) {
    case Format::JsonOut:
      return Json{{"status", status_name(r.status)},
                  {"payload", r.payload}}
                 .dump(2) +
             "\n";
    case Format::Csv:
      return render_csv(r, command);
    case Format::Pretty:
      return render_pretty(r, command);
  }
  return "";
}

int run_cli(const std::vector<std::string>& args, std::string& out,
            std::string& err) {
  CLI::App app{"exact arithmetic for the peak subalgebra of NSym"};
  app.name("peakalg");
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "auto";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"auto", "json", "csv", "pretty"}));
  int jobs = 1;
  app.add_option("--jobs", jobs, "worker threads for scans");

  auto* expand = app.add_subcommand(
      "expand", "expand one basis element over another basis");
  std::string basis, index, to;
  expand->add_option("--basis", basis, "source basis")->required();
  expand->add_option("--index", index, "index word, e.g. 2,2,1")->required();
  expand->add_option("--to", to, "target basis")->required();

  auto* matrix =
      app.add_subcommand("matrix", "transition matrix between degree-n bases");
  int n = 0;
  std::string pair;
  matrix->add_option("--n", n, "degree")->required();
  matrix->add_option("--pair", pair, "row,column bases, e.g. Q,S")
      ->required();

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "all";
  int max_n = 12;
  verify->add_option("--suite", suite,
                     "tables|relations|euler|oracles|pieri|dual|classical|"
                     "expansions|tableaux|all");
  verify->add_option("--max-n", max_n, "degree bound for the euler suite");

  auto* scan = app.add_subcommand(
      "scan-conjecture",
      "test nonnegativity/integrality/unitriangularity of M_n(Pi,Sbar)");
  int scan_max = 0;
  scan->add_option("--max-n", scan_max, "largest degree to scan")->required();
  scan->add_option("--jobs", jobs, "worker threads");

  auto* pct_cmd =
      app.add_subcommand("pct", "enumerate peak composition tableaux");
  std::string shape, content;
  pct_cmd->add_option("--shape", shape, "shape composition")->required();
  pct_cmd->add_option("--content", content, "content composition")
      ->required();

  auto* pieri_cmd =
      app.add_subcommand("pieri", "right Pieri expansion of S_alpha * Q_s");
  std::string alpha;
  int s = 0;
  bool peak = false;
  pieri_cmd->add_option("--alpha", alpha, "index composition")->required();
  pieri_cmd->add_option("--s", s, "degree of the Q factor")->required();
  pieri_cmd->add_flag("--peak", peak, "restrict to peak compositions");

  auto* covers_cmd =
      app.add_subcommand("covers", "covers in the peak composition poset");
  std::string cov_alpha;
  covers_cmd->add_option("--alpha", cov_alpha, "peak composition")
      ->required();

  std::vector<const char*> argv;
  argv.push_back("peakalg");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out = app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err = std::string(e.what()) + "\n";
    return exit_code(Status::Error);
  }

  std::string command;
  std::function<CommandResult()> action;
  if (expand->parsed()) {
    command = "expand";
    action = [&] { return cmd_expand(basis, index, to); };
  } else if (matrix->parsed()) {
    command = "matrix";
    action = [&] { return cmd_matrix(n, pair); };
  } else if (verify->parsed()) {
    command = "verify";
    action = [&] { return cmd_verify(suite, max_n); };
  } else if (scan->parsed()) {
    command = "scan-conjecture";
    action = [&] { return cmd_scan_conjecture(scan_max, jobs); };
  } else if (pct_cmd->parsed()) {
    command = "pct";
    action = [&] { return cmd_pct(shape, content); };
  } else if (pieri_cmd->parsed()) {
    command = "pieri";
    action = [&] { return cmd_pieri(alpha, s, peak); };
  } else if (covers_cmd->parsed()) {
    command = "covers";
    action = [&] { return cmd_covers(cov_alpha); };
  } else {
    err = "no command given\n";
    return exit_code(Status::Error);
  }

  CommandResult result;
  try {
    const auto start = std::chrono::steady_clock::now();
    result = action();
    result.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
  } catch (const std::exception& e) {
    err = std::string("error: ") + e.what() + "\n";
    return exit_code(Status::Error);
  }

  Format f = Format::JsonOut;
  if (format == "csv")
    f = Format::Csv;
  else if (format == "pretty")
    f = Format::Pretty;
  else if (format == "auto" && isatty(STDOUT_FILENO))
    f = Format::Pretty;
  out = render(result, f, command);
  return exit_code(result.status);
}

}  // namespace peakalg
