#pragma once

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "exact.hpp"
#include "matrix.hpp"
#include "report.hpp"
#include "tables.hpp"

namespace hyperbranch {

inline constexpr int schema_version = 1;

inline std::vector<std::string> const& document_groups()
{
  static std::vector<std::string> const groups{"sym", "hyperoct"};
  return groups;
}

inline std::vector<std::string> const& document_kinds()
{
  static std::vector<std::string> const kinds{"induced",   "irreducible", "modified-induced",
                                              "modified-irreducible", "fchar", "branching",
                                              "transition"};
  return kinds;
}

/// On-disk/wire form of any labelled integer matrix produced here.
struct TableDocument
{
  std::string group;
  int n = 0;
  std::string kind;
  std::string variant; // "irreducible" | "induced" for branching documents, else empty
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  std::vector<Integer> col_class_orders; // empty unless the columns are classes
  IntMatrix entries;
  int schema = schema_version;

  void validate() const
  {
    auto const& g = document_groups();
    auto const& k = document_kinds();
    if (std::find(g.begin(), g.end(), group) == g.end())
      throw DomainError("unknown group tag '" + group + "'");
    if (std::find(k.begin(), k.end(), kind) == k.end())
      throw DomainError("unknown table kind '" + kind + "'");
    if (schema != schema_version)
      throw DomainError("unsupported schema version " + std::to_string(schema));
    if (entries.rows() != row_labels.size() || entries.cols() != col_labels.size())
      throw DomainError("entries do not match label dimensions");
    if (!col_class_orders.empty() && col_class_orders.size() != col_labels.size())
      throw DomainError("class orders do not match column count");
  }

  friend bool operator==(TableDocument const&, TableDocument const&) = default;
};

inline TableDocument make_document(CharacterTable const& t, std::string group, int n,
                                   std::string kind)
{
  TableDocument d{std::move(group), n, std::move(kind), {}, t.row_labels, t.col_labels,
                  t.class_orders, t.entries};
  d.validate();
  return d;
}

inline TableDocument make_document(BranchingMatrix const& b, int n, std::string variant)
{
  TableDocument d{"sym", n, "branching", std::move(variant), b.row_labels, b.col_labels, {},
                  b.entries};
  d.validate();
  return d;
}

inline TableDocument make_document(TransitionMatrix const& t, std::vector<std::string> labels,
                                   std::string group, int n)
{
  TableDocument d{std::move(group), n, "transition", {}, labels, labels, {}, t.matrix()};
  d.validate();
  return d;
}

// ---- JSON -----------------------------------------------------------------

inline nlohmann::json to_json(TableDocument const& d)
{
  d.validate();
  nlohmann::json j;
  j["schema_version"] = d.schema;
  j["group"] = d.group;
  j["n"] = d.n;
  j["kind"] = d.kind;
  if (!d.variant.empty())
    j["variant"] = d.variant;
  j["row_labels"] = d.row_labels;
  j["col_labels"] = d.col_labels;
  auto orders = nlohmann::json::array();
  for (auto const& o : d.col_class_orders)
    orders.push_back(to_int64(o));
  j["col_class_orders"] = orders;
  auto entries = nlohmann::json::array();
  for (auto const& v : d.entries.data())
    entries.push_back(to_int64(v));
  j["entries"] = entries;
  return j;
}

/// Throws DomainError on any schema violation.
inline TableDocument document_from_json(nlohmann::json const& j)
{
  try {
    TableDocument d;
    d.schema = j.at("schema_version").get<int>();
    d.group = j.at("group").get<std::string>();
    d.n = j.at("n").get<int>();
    d.kind = j.at("kind").get<std::string>();
    if (j.contains("variant"))
      d.variant = j.at("variant").get<std::string>();
    d.row_labels = j.at("row_labels").get<std::vector<std::string>>();
    d.col_labels = j.at("col_labels").get<std::vector<std::string>>();
    for (auto const& o : j.at("col_class_orders"))
      d.col_class_orders.emplace_back(o.get<long long>());
    auto const& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != d.row_labels.size() * d.col_labels.size())
      throw DomainError("entries length does not match labels");
    d.entries = IntMatrix(d.row_labels.size(), d.col_labels.size());
    std::size_t idx = 0;
    for (std::size_t r = 0; r < d.entries.rows(); ++r)
      for (std::size_t c = 0; c < d.entries.cols(); ++c) {
        auto const& v = entries[idx++];
        if (!v.is_number_integer())
          throw DomainError("non-integral entry");
        d.entries(r, c) = v.get<long long>();
      }
    d.validate();
    return d;
  } catch (nlohmann::json::exception const& e) {
    throw DomainError(std::string("malformed table document: ") + e.what());
  }
}

inline TableDocument parse_document(std::string_view text)
{
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (nlohmann::json::exception const& e) {
    throw DomainError(std::string("invalid JSON: ") + e.what());
  }
  return document_from_json(j);
}

inline nlohmann::json to_json(Report const& r)
{
  nlohmann::json j;
  j["check"] = r.check;
  j["n"] = r.n;
  j["pass"] = r.pass;
  if (r.first_mismatch) {
    j["first_mismatch"] = {{"row_label", r.first_mismatch->row_label},
                           {"col_label", r.first_mismatch->col_label},
                           {"lhs", r.first_mismatch->lhs.str()},
                           {"rhs", r.first_mismatch->rhs.str()}};
  }
  if (!r.detail.empty())
    j["detail"] = r.detail;
  return j;
}

// ---- grid formats ---------------------------------------------------------

/// Labels and integers recovered from a CSV or LaTeX rendering.
struct Grid
{
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  IntMatrix entries;
};

namespace detail {

inline std::string csv_field(std::string const& s)
{
  if (s.find_first_of(",\"\n\r") == std::string::npos)
    return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"')
      q += '"';
    q += ch;
  }
  return q + '"';
}

inline std::vector<std::vector<std::string>> csv_records(std::string_view text)
{
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool quoted = false;
  bool any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char const ch = text[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += ch;
      }
      continue;
    }
    if (ch == '"') {
      quoted = true;
      any = true;
    } else if (ch == ',') {
      record.push_back(std::move(field));
      field.clear();
      any = true;
    } else if (ch == '\n' || ch == '\r') {
      if (ch == '\r' && i + 1 < text.size() && text[i + 1] == '\n')
        ++i;
      if (any || !field.empty()) {
        record.push_back(std::move(field));
        records.push_back(std::move(record));
      }
      record.clear();
      field.clear();
      any = false;
    } else {
      field += ch;
      any = true;
    }
  }
  if (quoted)
    throw DomainError("unterminated quoted CSV field");
  if (any || !field.empty()) {
    record.push_back(std::move(field));
    records.push_back(std::move(record));
  }
  return records;
}

inline Integer parse_integer(std::string_view s)
{
  auto const b = s.find_first_not_of(" \t");
  auto const e = s.find_last_not_of(" \t");
  if (b == std::string_view::npos)
    throw DomainError("empty numeric field");
  std::string t(s.substr(b, e - b + 1));
  std::size_t start = (t[0] == '-') ? 1 : 0;
  if (start == t.size() || t.find_first_not_of("0123456789", start) != std::string::npos)
    throw DomainError("not an integer: '" + t + "'");
  return Integer(t);
}

inline std::string trim(std::string_view s)
{
  auto const b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos)
    return {};
  auto const e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

inline Grid grid_from_records(std::vector<std::vector<std::string>> const& records)
{
  if (records.empty())
    throw DomainError("empty grid");
  Grid g;
  g.col_labels.assign(records[0].begin() + 1, records[0].end());
  g.entries = IntMatrix(records.size() - 1, g.col_labels.size());
  for (std::size_t r = 1; r < records.size(); ++r) {
    if (records[r].size() != g.col_labels.size() + 1)
      throw DomainError("grid row " + std::to_string(r) + " has the wrong width");
    g.row_labels.push_back(records[r][0]);
    for (std::size_t c = 0; c < g.col_labels.size(); ++c)
      g.entries(r - 1, c) = parse_integer(records[r][c + 1]);
  }
  return g;
}

} // namespace detail

/// Header row of column labels (first cell empty), then one record per row.
inline std::string to_csv(TableDocument const& d)
{
  std::ostringstream os;
  os << "";
  for (auto const& c : d.col_labels)
    os << ',' << detail::csv_field(c);
  os << "\r\n";
  for (std::size_t r = 0; r < d.entries.rows(); ++r) {
    os << detail::csv_field(d.row_labels[r]);
    for (std::size_t c = 0; c < d.entries.cols(); ++c)
      os << ',' << d.entries(r, c);
    os << "\r\n";
  }
  return os.str();
}

inline Grid parse_csv(std::string_view text)
{
  return detail::grid_from_records(detail::csv_records(text));
}

/// Tabular with row and column labels outside the ruled grid.
inline std::string to_latex(TableDocument const& d)
{
  std::size_t const cols = d.col_labels.size();
  std::string const rule = "\\cline{2-" + std::to_string(cols + 1) + "}";
  std::ostringstream os;
  os << "\\begin{tabular}{r|";
  for (std::size_t c = 0; c < cols; ++c)
    os << "c|";
  os << "}\n";
  for (auto const& c : d.col_labels)
    os << " & " << c;
  os << " \\\\\n" << rule << '\n';
  for (std::size_t r = 0; r < d.entries.rows(); ++r) {
    os << d.row_labels[r];
    for (std::size_t c = 0; c < cols; ++c)
      os << " & " << d.entries(r, c);
    os << " \\\\\n" << rule << '\n';
  }
  os << "\\end{tabular}\n";
  return os.str();
}

inline Grid parse_latex(std::string_view text)
{
  std::vector<std::vector<std::string>> records;
  std::istringstream is{std::string(text)};
  std::string line;
  while (std::getline(is, line)) {
    auto const t = detail::trim(line);
    if (t.empty() || t.rfind("\\begin", 0) == 0 || t.rfind("\\end", 0) == 0 ||
        t.rfind("\\cline", 0) == 0 || t.rfind("\\hline", 0) == 0)
      continue;
    auto const end = t.rfind("\\\\");
    if (end == std::string::npos)
      throw DomainError("LaTeX row without terminator");
    std::string_view body(t.data(), end);
    std::vector<std::string> fields;
    std::size_t pos = 0;
    while (true) {
      auto const amp = body.find('&', pos);
      fields.push_back(detail::trim(body.substr(pos, amp == std::string_view::npos ? amp : amp - pos)));
      if (amp == std::string_view::npos)
        break;
      pos = amp + 1;
    }
    records.push_back(std::move(fields));
  }
  return detail::grid_from_records(records);
}

/// Right-aligned text grid for terminals.
inline std::string to_pretty(TableDocument const& d)
{
  std::size_t const cols = d.col_labels.size();
  std::vector<std::size_t> width(cols + 1, 0);
  for (auto const& r : d.row_labels)
    width[0] = std::max(width[0], r.size());
  if (!d.col_class_orders.empty())
    width[0] = std::max<std::size_t>(width[0], 3);
  for (std::size_t c = 0; c < cols; ++c) {
    width[c + 1] = d.col_labels[c].size();
    if (!d.col_class_orders.empty())
      width[c + 1] = std::max(width[c + 1], d.col_class_orders[c].str().size());
    for (std::size_t r = 0; r < d.entries.rows(); ++r)
      width[c + 1] = std::max(width[c + 1], d.entries(r, c).str().size());
  }
  auto pad = [](std::string const& s, std::size_t w) { return std::string(w - s.size(), ' ') + s; };
  std::ostringstream os;
  os << d.group << ' ' << d.n << ' ' << d.kind;
  if (!d.variant.empty())
    os << " (" << d.variant << ')';
  os << '\n' << pad("", width[0]);
  for (std::size_t c = 0; c < cols; ++c)
    os << "  " << pad(d.col_labels[c], width[c + 1]);
  os << '\n';
  if (!d.col_class_orders.empty()) {
    os << pad("|C|", width[0]);
    for (std::size_t c = 0; c < cols; ++c)
      os << "  " << pad(d.col_class_orders[c].str(), width[c + 1]);
    os << '\n';
  }
  for (std::size_t r = 0; r < d.entries.rows(); ++r) {
    os << pad(d.row_labels[r], width[0]);
    for (std::size_t c = 0; c < cols; ++c)
      os << "  " << pad(d.entries(r, c).str(), width[c + 1]);
    os << '\n';
  }
  return os.str();
}

} // namespace hyperbranch
