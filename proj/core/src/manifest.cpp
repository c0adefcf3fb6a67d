#include "gradsym/manifest.hpp"

#include <cctype>
#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "gradsym/charts.hpp"
#include "gradsym/errors.hpp"
#include "gradsym/expr_parser.hpp"

namespace gradsym {

namespace {

enum class Section { none, chart, metric, symplectic, ltensor };

std::string_view trim(std::string_view s, int* lead = nullptr) {
  std::size_t b = 0;
  while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  std::size_t e = s.size();
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  if (lead) *lead = static_cast<int>(b);
  return s.substr(b, e - b);
}

bool is_key_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.'; }

// Splits "a=1, b=2, c=x,y" at commas that start a new key=value pair.
// Returns (offset, piece) pairs relative to the line.
std::vector<std::pair<int, std::string_view>> split_pairs(std::string_view s) {
  std::vector<std::pair<int, std::string_view>> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != ',') continue;
    std::size_t j = i + 1;
    while (j < s.size() && s[j] == ' ') ++j;
    std::size_t k = j;
    while (k < s.size() && is_key_char(s[k])) ++k;
    while (k < s.size() && s[k] == ' ') ++k;
    if (k > j && k < s.size() && s[k] == '=') {
      out.emplace_back(static_cast<int>(start), s.substr(start, i - start));
      start = i + 1;
    }
  }
  out.emplace_back(static_cast<int>(start), s.substr(start));
  return out;
}

class ManifestReader {
 public:
  explicit ManifestReader(std::string_view text) : text_(text) {}

  ChartManifest read() {
    std::size_t pos = 0;
    int line_no = 0;
    while (pos <= text_.size()) {
      const std::size_t nl = text_.find('\n', pos);
      std::string_view line = text_.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      ++line_no;
      handle_line(line, line_no);
      if (nl == std::string_view::npos) break;
      pos = nl + 1;
    }
    finish(line_no);
    return m_;
  }

 private:
  void handle_line(std::string_view raw, int line_no) {
    int lead = 0;
    const std::string_view line = trim(raw, &lead);
    if (line.empty() || line[0] == '#') return;
    if (line[0] == '[') {
      if (line.back() != ']') throw ParseError("unterminated section header", line_no, lead + 1);
      const std::string name(trim(line.substr(1, line.size() - 2)));
      if (name == "chart") section_ = Section::chart;
      else if (name == "metric") section_ = Section::metric;
      else if (name == "symplectic") section_ = Section::symplectic;
      else if (name == "ltensor") section_ = Section::ltensor;
      else throw ParseError("unknown section '" + name + "'", line_no, lead + 2);
      if (!seen_.insert(name).second) throw ParseError("duplicate section '" + name + "'", line_no, lead + 2);
      if (section_ != Section::chart && !chart_done()) chart_complete(line_no, lead + 1);
      return;
    }
    if (section_ == Section::none) throw ParseError("entry outside of any section", line_no, lead + 1);
    if (section_ == Section::chart) {
      for (const auto& [off, piece] : split_pairs(line)) key_value(piece, line_no, lead + off);
    } else {
      key_value(line, line_no, lead);
    }
  }

  // `piece` starts at 0-based column `col0` of the line.
  void key_value(std::string_view piece, int line_no, int col0) {
    int lead = 0;
    const std::string_view p = trim(piece, &lead);
    col0 += lead;
    const std::size_t eq = p.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected key=value", line_no, col0 + 1);
    int klead = 0;
    const std::string key(trim(p.substr(0, eq), &klead));
    int vlead = 0;
    const std::string_view value = trim(p.substr(eq + 1), &vlead);
    const int key_col = col0 + klead + 1;
    const int value_col = col0 + static_cast<int>(eq) + 1 + vlead + 1;
    if (key.empty()) throw ParseError("missing key", line_no, col0 + 1);
    if (value.empty()) throw ParseError("missing value for '" + key + "'", line_no, value_col);
    switch (section_) {
      case Section::chart: chart_key(key, value, line_no, key_col, value_col); break;
      case Section::metric: tensor_key(key, 'g', 2, value, line_no, key_col, value_col); break;
      case Section::symplectic: tensor_key(key, 'w', 2, value, line_no, key_col, value_col); break;
      case Section::ltensor: tensor_key(key, 'L', 3, value, line_no, key_col, value_col); break;
      case Section::none: break;
    }
  }

  void chart_key(const std::string& key, std::string_view value, int line_no, int key_col, int value_col) {
    if (!chart_keys_.insert(key).second) throw ParseError("duplicate key '" + key + "'", line_no, key_col);
    if (key == "name") {
      m_.name = std::string(value);
    } else if (key == "dim") {
      int d = 0;
      for (char c : value) {
        if (!std::isdigit(static_cast<unsigned char>(c)) || d > 1000)
          throw ParseError("dim must be a positive integer", line_no, value_col);
        d = d * 10 + (c - '0');
      }
      if (d <= 0) throw ParseError("dim must be a positive integer", line_no, value_col);
      m_.dim = d;
    } else if (key == "coords") {
      coords_line_ = line_no;
      coords_col_ = value_col;
      std::size_t start = 0;
      while (true) {
        const std::size_t comma = value.find(',', start);
        int lead = 0;
        const std::string_view name =
            trim(value.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start), &lead);
        const int col = value_col + static_cast<int>(start) + lead;
        if (name.empty()) throw ParseError("empty coordinate name", line_no, col);
        if (!std::isalpha(static_cast<unsigned char>(name[0])))
          throw ParseError("coordinate names must start with a letter", line_no, col);
        for (char c : name)
          if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
            throw ParseError("invalid character in coordinate name", line_no, col);
        for (const auto& existing : m_.coords)
          if (existing == name) throw ParseError("duplicate coordinate '" + std::string(name) + "'", line_no, col);
        if (name == "d") throw ParseError("'d' is reserved for the exterior derivative", line_no, col);
        m_.coords.emplace_back(name);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
      }
    } else if (key == "kahler") {
      if (value == "true") m_.kahler_expected = true;
      else if (value == "false") m_.kahler_expected = false;
      else throw ParseError("kahler must be true or false", line_no, value_col);
    } else {
      throw ParseError("unknown chart key '" + key + "'", line_no, key_col);
    }
  }

  void tensor_key(const std::string& key, char prefix, int arity, std::string_view value, int line_no, int key_col,
                  int value_col) {
    const std::string expected = std::string(1, prefix) + (arity == 2 ? ".i.j" : ".i.j.k");
    if (key.size() < 2 || key[0] != prefix || key[1] != '.')
      throw ParseError("expected a key of the form " + expected, line_no, key_col);
    std::vector<int> idx;
    std::size_t start = 2;
    while (true) {
      const std::size_t dot = key.find('.', start);
      const std::string part = key.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
      const int col = key_col + static_cast<int>(start);
      if (part.empty() || part.size() > 2 || !std::all_of(part.begin(), part.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ParseError("expected a key of the form " + expected, line_no, col);
      const int i = std::stoi(part);
      if (i < 1 || i > m_.dim)
        throw ParseError("index " + part + " out of range 1.." + std::to_string(m_.dim), line_no, col);
      idx.push_back(i - 1);
      if (dot == std::string::npos) break;
      start = dot + 1;
    }
    if (static_cast<int>(idx.size()) != arity) throw ParseError("expected a key of the form " + expected, line_no, key_col);
    ManifestEntry e{std::string(value), line_no, value_col};
    bool fresh = false;
    if (arity == 2) {
      auto& target = prefix == 'g' ? m_.metric : m_.symplectic;
      fresh = target.emplace(std::make_pair(idx[0], idx[1]), e).second;
    } else {
      fresh = m_.ltensor.emplace(std::make_tuple(idx[0], idx[1], idx[2]), e).second;
    }
    if (!fresh) throw ParseError("duplicate entry '" + key + "'", line_no, key_col);
  }

  bool chart_done() const { return checked_; }

  void chart_complete(int line_no, int col) {
    checked_ = true;
    if (m_.dim == 0) throw ParseError("[chart] section must set dim", line_no, col);
    if (m_.coords.empty()) throw ParseError("[chart] section must set coords", line_no, col);
    if (static_cast<int>(m_.coords.size()) != m_.dim)
      throw ParseError("dim=" + std::to_string(m_.dim) + " but " + std::to_string(m_.coords.size()) +
                           " coordinates are listed", coords_line_, coords_col_);
  }

  void finish(int line_no) {
    if (!seen_.count("chart")) throw ParseError("missing [chart] section", 1, 1);
    if (!checked_) chart_complete(line_no, 1);
    if (!seen_.count("metric")) throw ParseError("missing [metric] section", line_no, 1);
    if (!seen_.count("symplectic")) throw ParseError("missing [symplectic] section", line_no, 1);
    if (m_.name.empty()) m_.name = "manifest";
  }

  std::string_view text_;
  ChartManifest m_;
  int coords_line_ = 0;
  int coords_col_ = 0;
  Section section_ = Section::none;
  std::set<std::string> seen_;
  std::set<std::string> chart_keys_;
  bool checked_ = false;
};

Scalar entry_value(const ManifestEntry& e, const std::vector<std::string>& coords) {
  return parse_scalar_expr(e.expr, coords, e.line, e.column - 1);
}

std::string index_name(char prefix, std::initializer_list<int> idx) {
  std::string s(1, prefix);
  for (int i : idx) s += "." + std::to_string(i + 1);
  return s;
}

}  // namespace

ChartManifest read_manifest(std::string_view text) { return ManifestReader(text).read(); }

ChartGeometry build_chart(const ChartManifest& m) {
  const int n = m.dim;
  const auto& coords = m.coords;
  Matrix g = zero_matrix(n, n, n), w = zero_matrix(n, n, n);

  for (const auto& [ij, e] : m.metric) {
    const auto [i, j] = ij;
    const Scalar v = entry_value(e, coords);
    g[i][j] = v;
    auto mirror = m.metric.find({j, i});
    if (mirror == m.metric.end()) {
      g[j][i] = v;
    } else if (!(entry_value(mirror->second, coords) == v)) {
      throw ConstructionError("metric is not symmetric: " + index_name('g', {i, j}) + " = " + v.to_string(coords) +
                              " but " + index_name('g', {j, i}) + " = " +
                              entry_value(mirror->second, coords).to_string(coords));
    }
  }
  for (const auto& [ij, e] : m.symplectic) {
    const auto [i, j] = ij;
    const Scalar v = entry_value(e, coords);
    if (i == j) {
      if (!v.is_zero())
        throw ConstructionError("symplectic form is not antisymmetric: " + index_name('w', {i, j}) + " = " +
                                v.to_string(coords) + " on the diagonal");
      continue;
    }
    w[i][j] = v;
    auto mirror = m.symplectic.find({j, i});
    if (mirror == m.symplectic.end()) {
      w[j][i] = -v;
    } else if (!(entry_value(mirror->second, coords) == -v)) {
      throw ConstructionError("symplectic form is not antisymmetric: " + index_name('w', {i, j}) + " = " +
                              v.to_string(coords) + " but " + index_name('w', {j, i}) + " = " +
                              entry_value(mirror->second, coords).to_string(coords));
    }
  }

  std::optional<LTensor> l;
  if (!m.ltensor.empty()) {
    LTensor t(n, std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n, Scalar(n))));
    for (const auto& [ijk, e] : m.ltensor) {
      const auto [i, j, k] = ijk;
      const Scalar v = entry_value(e, coords);
      if (j == k) {
        if (!v.is_zero())
          throw ConstructionError("L tensor is not antisymmetric in its last two slots: " +
                                  index_name('L', {i, j, k}) + " = " + v.to_string(coords));
        continue;
      }
      t[i][j][k] = v;
      auto mirror = m.ltensor.find({i, k, j});
      if (mirror == m.ltensor.end()) {
        t[i][k][j] = -v;
      } else if (!(entry_value(mirror->second, coords) == -v)) {
        throw ConstructionError("L tensor is not antisymmetric in its last two slots: " +
                                index_name('L', {i, j, k}) + " and " + index_name('L', {i, k, j}) +
                                " do not cancel");
      }
    }
    l = std::move(t);
  }
  return ChartGeometry(m.name, coords, std::move(g), std::move(w), std::move(l));
}

ChartGeometry parse_manifest(std::string_view text) { return build_chart(read_manifest(text)); }

ChartGeometry load_chart(const std::string& source) {
  constexpr std::string_view prefix = "builtin:";
  if (source.rfind(prefix, 0) == 0) return builtin_chart(source.substr(prefix.size()));
  std::ifstream in(source);
  if (!in) throw UsageError("cannot open manifest '" + source + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_manifest(buf.str());
}

}  // namespace gradsym
