#include "peakalg/json_io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace peakalg {

namespace {

Json parts_array(const std::vector<int>& parts) {
  Json arr = Json::array();
  for (int p : parts) arr.push_back(p);
  return arr;
}

template <typename Index>
Json terms_array(const std::map<Index, Rational>& terms) {
  Json arr = Json::array();
  for (const auto& [idx, c] : terms)
    arr.push_back(Json{{"index", parts_array(idx.parts())},
                       {"coeff", rational_str(c)}});
  return arr;
}

std::vector<int> int_vector(const Json& arr) {
  if (!arr.is_array()) throw std::invalid_argument("expected a JSON array");
  std::vector<int> out;
  out.reserve(arr.size());
  for (const auto& v : arr) out.push_back(v.get<int>());
  return out;
}

}  // namespace

Json element_json(const NSymElement& a) {
  return Json{{"basis", std::string(basis_name(a.basis()))},
              {"terms", terms_array(a.terms())}};
}

Json element_json(const QSymElement& a) {
  return Json{{"basis", std::string(qbasis_name(a.basis()))},
              {"terms", terms_array(a.terms())}};
}

Json element_json(const SymElement& a) {
  return Json{{"basis", a.gen == SymGen::h ? "h" : "q"},
              {"terms", terms_array(a.terms)}};
}

Json matrix_json(const TransitionMatrix& m) {
  Json index = Json::array();
  for (const auto& a : m.index) index.push_back(parts_array(a.parts()));
  Json entries = Json::array();
  for (const auto& row : m.entries) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(rational_str(v));
    entries.push_back(std::move(r));
  }
  return Json{{"n", m.n},
              {"rows", m.rows},
              {"cols", m.cols},
              {"index", std::move(index)},
              {"entries", std::move(entries)}};
}

TransitionMatrix matrix_from_json(const Json& j) {
  TransitionMatrix m;
  m.n = j.at("n").get<int>();
  m.rows = j.at("rows").get<std::string>();
  m.cols = j.at("cols").get<std::string>();
  for (const auto& arr : j.at("index"))
    m.index.emplace_back(int_vector(arr));
  for (const auto& arr : j.at("entries")) {
    std::vector<Rational> row;
    for (const auto& v : arr) row.push_back(parse_rational(v.get<std::string>()));
    m.entries.push_back(std::move(row));
  }
  const size_t k = m.index.size();
  if (m.entries.size() != k)
    throw std::invalid_argument("matrix entries/index size mismatch");
  for (const auto& row : m.entries)
    if (row.size() != k)
      throw std::invalid_argument("ragged matrix entries");
  return m;
}

std::string matrix_csv(const TransitionMatrix& m) {
  std::ostringstream os;
  /* index labels contain commas, so they are always quoted */
  os << m.rows << "\\" << m.cols;
  for (const auto& a : m.index) os << ",\"(" << a.str() << ")\"";
  os << "\n";
  for (size_t i = 0; i < m.entries.size(); ++i) {
    os << "\"(" << m.index[i].str() << ")\"";
    for (const auto& v : m.entries[i]) os << "," << rational_str(v);
    os << "\n";
  }
  return os.str();
}

Json tableau_json(const Tableau& t) {
  Json rows = Json::array();
  for (const auto& row : t.rows) rows.push_back(parts_array(row));
  return Json{{"shape", parts_array(t.shape.parts())},
              {"rows", std::move(rows)}};
}

Json polynomial_json(const TruncatedPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [exp, c] : p.terms)
    terms.push_back(Json{{"exp", parts_array(exp)},
                         {"coeff", rational_str(c)}});
  return Json{{"k", p.k},
              {"max_degree", p.max_degree},
              {"terms", std::move(terms)}};
}

std::string pretty_element(const NSymElement& a) { return a.str(); }

std::string pretty_element(const QSymElement& a) { return a.str(); }

std::string pretty_matrix(const TransitionMatrix& m) {
  const size_t k = m.index.size();
  std::vector<std::string> labels;
  labels.reserve(k);
  for (const auto& a : m.index) labels.push_back("(" + a.str() + ")");

  std::vector<std::vector<std::string>> cells(k);
  std::vector<size_t> width(k + 1, 0);
  std::string corner = m.rows + "\\" + m.cols;
  width[0] = corner.size();
  for (size_t i = 0; i < k; ++i) {
    width[0] = std::max(width[0], labels[i].size());
    cells[i].reserve(k);
    for (size_t j = 0; j < k; ++j) {
      cells[i].push_back(rational_str(m.entries[i][j]));
      width[j + 1] = std::max({width[j + 1], cells[i][j].size(),
                               labels[j].size()});
    }
  }

  std::ostringstream os;
  auto pad = [&os](const std::string& s, size_t w) {
    os << std::string(w - s.size(), ' ') << s;
  };
  pad(corner, width[0]);
  for (size_t j = 0; j < k; ++j) {
    os << "  ";
    pad(labels[j], width[j + 1]);
  }
  os << "\n";
  for (size_t i = 0; i < k; ++i) {
    pad(labels[i], width[0]);
    for (size_t j = 0; j < k; ++j) {
      os << "  ";
      pad(cells[i][j], width[j + 1]);
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace peakalg
