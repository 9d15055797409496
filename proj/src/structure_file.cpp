#include "algebroid/structure_file.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace algebroid {

namespace {

struct Pos {
  int line = 1;
  int column = 1;
};

// A value with the source position of every character.
struct Text {
  std::string s;
  std::vector<Pos> at;
  Pos start() const { return at.empty() ? Pos{} : at.front(); }
};

struct Entry {
  Pos key_pos;
  Text value;
};

const std::map<std::string, StructureKind>& kinds() {
  static const std::map<std::string, StructureKind> k{
      {"lie", StructureKind::Lie},           {"lsa", StructureKind::Lsa},
      {"jacobi", StructureKind::Jacobi},     {"jlsa", StructureKind::Jlsa},
      {"manifold", StructureKind::Manifold}, {"jkv-manifold", StructureKind::JkvManifold},
  };
  return k;
}

const std::vector<std::string>& known_keys() {
  static const std::vector<std::string> k{"kind", "base", "rank", "anchor", "table", "christoffel",
                                          "phi0", "pi",   "h",    "E",      "g",     "theta"};
  return k;
}

int depth_change(const std::string& s) {
  int d = 0;
  for (char c : s) d += c == '[' ? 1 : c == ']' ? -1 : 0;
  return d;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

Text trimmed(const Text& t) {
  std::size_t b = 0, e = t.s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(t.s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(t.s[e - 1]))) --e;
  Text r;
  r.s = t.s.substr(b, e - b);
  r.at.assign(t.at.begin() + static_cast<long>(b), t.at.begin() + static_cast<long>(e));
  return r;
}

Text slice(const Text& t, std::size_t b, std::size_t e) {
  Text r;
  r.s = t.s.substr(b, e - b);
  r.at.assign(t.at.begin() + static_cast<long>(b), t.at.begin() + static_cast<long>(e));
  return r;
}

std::map<std::string, Entry> split_entries(std::string_view text) {
  std::map<std::string, Entry> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  std::string open_key;
  int depth = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string body = raw.substr(0, raw.find('#'));
    int col_base = 1;
    std::string rest = body;
    if (depth == 0) {
      if (trim(body).empty()) continue;
      const auto eq = body.find('=');
      if (eq == std::string::npos) throw ParseError(line, 1, "expected 'key = value'");
      const std::string key = trim(body.substr(0, eq));
      const int key_col = static_cast<int>(body.find_first_not_of(" \t")) + 1;
      if (std::find(known_keys().begin(), known_keys().end(), key) == known_keys().end())
        throw ParseError(line, key_col, "unknown key '" + key + "'");
      if (out.count(key)) throw ParseError(line, key_col, "duplicate key '" + key + "'");
      out[key].key_pos = {line, key_col};
      open_key = key;
      rest = body.substr(eq + 1);
      col_base = static_cast<int>(eq) + 2;
    }
    Text& v = out[open_key].value;
    if (!v.s.empty()) {
      v.s += ' ';
      v.at.push_back({line, 1});
    }
    for (std::size_t i = 0; i < rest.size(); ++i) {
      v.s += rest[i];
      v.at.push_back({line, col_base + static_cast<int>(i)});
    }
    depth += depth_change(rest);
    if (depth < 0) throw ParseError(line, 1, "unbalanced ']'");
  }
  if (depth != 0) throw ParseError(line, 1, "unterminated list for key '" + open_key + "'");
  return out;
}

using Grid = std::vector<std::vector<Text>>;

Grid parse_grid(const Text& raw_value) {
  const Text v = trimmed(raw_value);
  if (v.s.size() < 2 || v.s.front() != '[' || v.s.back() != ']')
    throw ParseError(v.start().line, v.start().column, "expected a bracketed list");
  Grid rows(1);
  std::size_t item_start = 1;
  int paren = 0;
  auto close_item = [&](std::size_t end) { rows.back().push_back(trimmed(slice(v, item_start, end))); };
  for (std::size_t i = 1; i + 1 < v.s.size(); ++i) {
    const char c = v.s[i];
    if (c == '(') ++paren;
    if (c == ')') --paren;
    if (c == '[' || c == ']') throw ParseError(v.at[i].line, v.at[i].column, "nested brackets");
    if (paren == 0 && (c == ',' || c == ';')) {
      close_item(i);
      item_start = i + 1;
      if (c == ';') rows.emplace_back();
    }
  }
  close_item(v.s.size() - 1);
  for (const auto& row : rows)
    for (const auto& item : row)
      if (item.s.empty()) throw ParseError(v.start().line, v.start().column, "empty list entry");
  return rows;
}

Scalar scalar_at(const Text& t, const Chart& chart) {
  return parse_scalar(t.s, chart, t.start().line, t.start().column - 1);
}

std::vector<std::vector<Scalar>> scalar_grid(const Entry& e, const Chart& chart, std::size_t rows, std::size_t cols,
                                             const std::string& key) {
  const Grid g = parse_grid(e.value);
  if (g.size() != rows)
    throw ParseError(e.key_pos.line, e.key_pos.column,
                     key + ": expected " + std::to_string(rows) + " rows, found " + std::to_string(g.size()));
  std::vector<std::vector<Scalar>> out;
  for (const auto& row : g) {
    if (row.size() != cols)
      throw ParseError(row.front().start().line, row.front().start().column,
                       key + ": expected " + std::to_string(cols) + " entries, found " + std::to_string(row.size()));
    std::vector<Scalar> r;
    for (const auto& item : row) r.push_back(scalar_at(item, chart));
    out.push_back(std::move(r));
  }
  return out;
}

Matrix matrix_of(const std::vector<std::vector<Scalar>>& rows) { return Matrix(rows); }

}  // namespace

std::string kind_name(StructureKind k) {
  for (const auto& [name, kind] : kinds())
    if (kind == k) return name;
  return "?";
}

StructureFile parse_structure(std::string_view text) {
  const std::map<std::string, Entry> entries = split_entries(text);
  auto need = [&](const std::string& key) -> const Entry& {
    auto it = entries.find(key);
    if (it == entries.end()) throw ParseError(1, 1, "missing key '" + key + "'");
    return it->second;
  };
  auto forbid = [&](const std::string& key, const std::string& why) {
    auto it = entries.find(key);
    if (it != entries.end()) throw ParseError(it->second.key_pos.line, it->second.key_pos.column, key + ": " + why);
  };

  StructureFile f;
  const Entry& kind = need("kind");
  const auto k = kinds().find(trim(kind.value.s));
  if (k == kinds().end()) throw ParseError(kind.value.start().line, kind.value.start().column, "unknown kind");
  f.kind = k->second;

  const Entry& base = need("base");
  std::vector<std::string> names;
  std::istringstream words(base.value.s);
  for (std::string w; words >> w;) names.push_back(w);
  const bool line = !names.empty() && names.back() == "t";
  if (line) names.pop_back();
  try {
    f.chart = Chart(names);
  } catch (const std::invalid_argument& err) {
    throw ParseError(base.value.start().line, base.value.start().column, err.what());
  }
  if (line) f.chart = f.chart.with_line();
  const auto dim = static_cast<std::size_t>(f.chart.dimension());

  if (f.is_manifold()) {
    forbid("anchor", "manifold kinds use the coordinate frame");
    forbid("table", "manifold kinds give 'christoffel'");
    if (line) throw ParseError(base.value.start().line, base.value.start().column, "manifold charts carry no line");
    f.rank = static_cast<int>(dim);
    if (auto it = entries.find("rank"); it != entries.end() && trim(it->second.value.s) != std::to_string(dim))
      throw ParseError(it->second.key_pos.line, it->second.key_pos.column, "rank must equal the base dimension");
  } else {
    forbid("christoffel", "only manifold kinds carry a connection");
    const Entry& r = need("rank");
    try {
      std::size_t used = 0;
      f.rank = std::stoi(trim(r.value.s), &used);
      if (used != trim(r.value.s).size() || f.rank < 1 || f.rank > kMaxRank) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw ParseError(r.value.start().line, r.value.start().column, "rank must be an integer in [1, " + std::to_string(kMaxRank) + "]");
    }
  }
  const auto rank = static_cast<std::size_t>(f.rank);

  if (!f.is_manifold()) f.anchor = scalar_grid(need("anchor"), f.chart, rank, dim, "anchor");
  const char* table_key = f.is_manifold() ? "christoffel" : "table";
  for (auto& row : scalar_grid(need(table_key), f.chart, rank * rank, rank, table_key))
    f.table.emplace_back(std::move(row));

  auto row_of = [&](const std::string& key) -> std::optional<std::vector<Scalar>> {
    if (!entries.count(key)) return std::nullopt;
    return scalar_grid(entries.at(key), f.chart, 1, rank, key).front();
  };
  auto square = [&](const std::string& key) -> std::optional<Matrix> {
    if (!entries.count(key)) return std::nullopt;
    return matrix_of(scalar_grid(entries.at(key), f.chart, rank, rank, key));
  };

  if (auto p = row_of("phi0")) {
    if (!f.has_phi0()) forbid("phi0", "kind carries no phi0");
    f.phi0 = Cosection::linear(*p);
  } else if (f.has_phi0()) {
    need("phi0");
  }
  if (auto p = square("pi")) {
    if (f.is_lsa() || f.is_manifold()) forbid("pi", "bivectors live on lie or jacobi kinds");
    if (!p->is_skew()) forbid("pi", "matrix is not skew");
    Multisection m(f.rank, 2);
    for (int i = 0; i < f.rank; ++i)
      for (int j = i + 1; j < f.rank; ++j) m.add(bit(i) | bit(j), (*p)(i, j));
    f.pi = m;
  }
  if (auto h = square("h")) {
    if (!h->is_symmetric()) forbid("h", "matrix is not symmetric");
    f.h = h;
  }
  if (auto g = square("g")) {
    if (!g->is_symmetric()) forbid("g", "matrix is not symmetric");
    f.g = g;
  }
  if (auto e = row_of("E")) f.e = Section(*e);
  if (auto th = row_of("theta")) f.theta = Cosection::linear(*th);
  if (f.kind == StructureKind::JkvManifold) {
    need("h");
    need("E");
  }
  return f;
}

StructureFile parse_structure_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_structure(ss.str());
}

namespace {

std::string row_text(const std::vector<Scalar>& row, const Chart& c) {
  std::string s;
  for (std::size_t i = 0; i < row.size(); ++i) s += (i ? ", " : "") + format(row[i], c);
  return s;
}

std::string grid_text(const std::vector<std::vector<Scalar>>& rows, const Chart& c) {
  std::string s = "[";
  for (std::size_t i = 0; i < rows.size(); ++i) s += (i ? ";\n  " : "") + row_text(rows[i], c);
  return s + "]";
}

std::vector<std::vector<Scalar>> rows_of(const Matrix& m) {
  std::vector<std::vector<Scalar>> r(static_cast<std::size_t>(m.size()));
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) r[i].push_back(m(i, j));
  return r;
}

}  // namespace

std::string emit(const StructureFile& f) {
  const Chart& c = f.chart;
  std::ostringstream os;
  os << "kind = " << kind_name(f.kind) << "\n";
  os << "base =";
  for (const auto& n : c.base_names()) os << " " << n;
  if (c.has_line()) os << " t";
  os << "\n";
  if (!f.is_manifold()) {
    os << "rank = " << f.rank << "\n";
    os << "anchor = " << grid_text(f.anchor, c) << "\n";
  }
  std::vector<std::vector<Scalar>> table;
  for (const auto& s : f.table) table.push_back(s.components());
  os << (f.is_manifold() ? "christoffel = " : "table = ") << grid_text(table, c) << "\n";
  if (f.phi0) os << "phi0 = [" << row_text(f.phi0->components(), c) << "]\n";
  if (f.pi) os << "pi = " << grid_text(rows_of(bivector_matrix(*f.pi)), c) << "\n";
  if (f.h) os << "h = " << grid_text(rows_of(*f.h), c) << "\n";
  if (f.e) os << "E = [" << row_text(f.e->components(), c) << "]\n";
  if (f.g) os << "g = " << grid_text(rows_of(*f.g), c) << "\n";
  if (f.theta) os << "theta = [" << row_text(f.theta->components(), c) << "]\n";
  return os.str();
}

AnchoredBundle bundle_of(const StructureFile& f) {
  if (f.is_manifold()) return AnchoredBundle::tangent(f.chart);
  return AnchoredBundle(f.chart, f.anchor);
}

LieAlgebroid lie_of(const StructureFile& f) {
  if (f.kind == StructureKind::Lie || f.kind == StructureKind::Jacobi)
    return LieAlgebroid::candidate(bundle_of(f), f.table);
  if (f.is_lsa()) return commutator_algebroid(lsa_of(f));
  return LieAlgebroid::tangent(f.chart);
}

LeftSymmetricAlgebroid lsa_of(const StructureFile& f) {
  if (f.is_lsa()) return LeftSymmetricAlgebroid::candidate(bundle_of(f), f.table);
  if (f.is_manifold()) return patch_of(f).lsa();
  throw std::invalid_argument(kind_name(f.kind) + " file carries no left-symmetric product");
}

JacobiAlgebroid jacobi_of(const StructureFile& f) {
  if (!f.phi0) throw std::invalid_argument(kind_name(f.kind) + " file carries no phi0");
  return JacobiAlgebroid::candidate(lie_of(f), *f.phi0);
}

JacobiLSA jlsa_of(const StructureFile& f) {
  if (f.kind == StructureKind::Jlsa) return JacobiLSA::candidate(lsa_of(f), *f.phi0);
  if (f.is_manifold()) return patch_of(f).bar_nabla_jlsa();
  throw std::invalid_argument(kind_name(f.kind) + " file carries no Jacobi left-symmetric structure");
}

AffinePatch patch_of(const StructureFile& f) {
  if (!f.is_manifold()) throw std::invalid_argument(kind_name(f.kind) + " file carries no affine patch");
  return AffinePatch(f.chart, f.table);
}

}  // namespace algebroid
