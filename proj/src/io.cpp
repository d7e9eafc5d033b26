#include "pbv/io.hpp"

#include "pbv/errors.hpp"
#include "pbv/expr.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

namespace pbv {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::string_view trim(std::string_view s, std::size_t& col) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
    ++col;
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

struct Entry {
  std::string key;
  std::string value;
  std::size_t line;
  std::size_t key_col;
  std::size_t val_col;
};

struct Sections {
  std::map<std::string, std::vector<Entry>> by_name;
};

Sections split_sections(const std::string& text) {
  static const std::vector<std::string> known{"ring", "dual_basis", "volume", "poisson",
                                             "options"};
  Sections out;
  std::istringstream in(text);
  std::string raw;
  std::string current;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::size_t col = 1;
    line = trim(line, col);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError("unterminated section header", lineno, col);
      std::string name(line.substr(1, line.size() - 2));
      if (std::find(known.begin(), known.end(), name) == known.end())
        throw ParseError("unknown section [" + name + "]", lineno, col);
      current = name;
      out.by_name.try_emplace(current);
      continue;
    }
    if (current.empty()) throw ParseError("content before the first section header", lineno, col);
    auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ParseError("expected `key = value`", lineno, col);
    std::size_t key_col = col;
    std::string_view key = trim(line.substr(0, eq), key_col);
    std::size_t val_col = col + eq + 1;
    std::string_view value = trim(line.substr(eq + 1), val_col);
    if (key.empty()) throw ParseError("empty key", lineno, col);
    out.by_name[current].push_back(
        {std::string(key), std::string(value), lineno, key_col, val_col});
  }
  return out;
}

std::vector<std::string> parse_generator_list(const Entry& e) {
  std::vector<std::string> names;
  std::string_view rest = e.value;
  std::size_t col = e.val_col;
  while (true) {
    auto comma = rest.find(',');
    std::size_t item_col = col;
    std::string_view item = trim(rest.substr(0, comma), item_col);
    if (item.empty() || !is_ident_start(item.front()) ||
        !std::all_of(item.begin(), item.end(), is_ident_char))
      throw ParseError("invalid generator name", e.line, item_col);
    if (std::find(names.begin(), names.end(), item) != names.end())
      throw ParseError("duplicate generator " + std::string(item), e.line, item_col);
    names.emplace_back(item);
    if (comma == std::string_view::npos) break;
    col += comma + 1;
    rest = rest.substr(comma + 1);
  }
  return names;
}

unsigned lookup_gen(const std::vector<std::string>& names, std::string_view name,
                    std::size_t line, std::size_t col) {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end())
    throw ParseError("undeclared generator " + std::string(name), line, col);
  return static_cast<unsigned>(it - names.begin());
}

/// Parses a bracketed name list out of a key such as `E[x][y]` or `a[y,z]`,
/// returning the prefix before the first bracket.
std::string_view split_key_indices(const Entry& e, std::vector<std::pair<std::string, std::size_t>>& out) {
  std::string_view key = e.key;
  auto open = key.find('[');
  if (open == std::string_view::npos || key.back() != ']')
    throw ParseError("expected indexed key such as a[...]", e.line, e.key_col);
  std::string_view head = key.substr(0, open);
  std::string_view rest = key.substr(open);
  std::size_t col = e.key_col + open;
  while (!rest.empty()) {
    if (rest.front() != '[') throw ParseError("malformed index", e.line, col);
    auto close = rest.find(']');
    if (close == std::string_view::npos) throw ParseError("malformed index", e.line, col);
    std::string_view inside = rest.substr(1, close - 1);
    std::size_t item_col = col + 1;
    while (true) {
      auto comma = inside.find(',');
      std::size_t c = item_col;
      std::string_view item = trim(inside.substr(0, comma), c);
      if (item.empty()) throw ParseError("empty index", e.line, c);
      out.emplace_back(std::string(item), c);
      if (comma == std::string_view::npos) break;
      item_col += comma + 1;
      inside = inside.substr(comma + 1);
    }
    col += close + 1;
    rest = rest.substr(close + 1);
  }
  return head;
}

Subset parse_subset_key(const Entry& e, const std::vector<std::string>& names,
                        std::string_view expect_head) {
  std::vector<std::pair<std::string, std::size_t>> items;
  auto head = split_key_indices(e, items);
  if (head != expect_head)
    throw ParseError("expected key " + std::string(expect_head) + "[...]", e.line, e.key_col);
  Subset out;
  for (const auto& [name, col] : items) {
    unsigned i = lookup_gen(names, name, e.line, col);
    if (!out.empty() && i <= out.back())
      throw ParseError("indices must be strictly increasing in declaration order", e.line, col);
    out.push_back(i);
  }
  return out;
}

} // namespace

InputDocument parse_document(const std::string& text, const std::string& source) {
  Sections sec = split_sections(text);

  auto ring_it = sec.by_name.find("ring");
  if (ring_it == sec.by_name.end())
    throw ParseError("missing [ring] section in " + source, 1, 1);

  std::vector<std::string> names;
  std::optional<unsigned> smooth_dim;
  std::vector<std::tuple<Entry, std::string, std::string, std::size_t>> relation_texts;
  for (const auto& e : ring_it->second) {
    if (e.key == "generators") {
      if (!names.empty()) throw ParseError("duplicate generators line", e.line, e.key_col);
      names = parse_generator_list(e);
    } else if (e.key == "smooth_dim") {
      try {
        smooth_dim = static_cast<unsigned>(std::stoul(e.value));
      } catch (const std::exception&) {
        throw ParseError("smooth_dim must be a non-negative integer", e.line, e.val_col);
      }
    } else if (e.key == "relation") {
      auto arrow = e.value.find("->");
      if (arrow == std::string::npos)
        throw ParseError("relation must have the shape `lead -> rhs`", e.line, e.val_col);
      relation_texts.emplace_back(e, e.value.substr(0, arrow), e.value.substr(arrow + 2),
                                  e.val_col + arrow + 2);
    } else {
      throw ParseError("unknown [ring] key " + e.key, e.line, e.key_col);
    }
  }
  if (names.empty())
    throw ParseError("missing generators line in [ring]", 1, 1);
  const std::size_t r = names.size();

  std::vector<RewriteRule> rules;
  for (const auto& [e, lead_text, rhs_text, rhs_col] : relation_texts) {
    Poly lead = parse_poly(lead_text, names, e.line, e.val_col);
    if (lead.terms().size() != 1 || !(lead.terms().begin()->second == Rational(1)))
      throw ParseError("relation lead must be a single monic monomial", e.line, e.val_col);
    rules.push_back({lead.terms().begin()->first, parse_poly(rhs_text, names, e.line, rhs_col)});
  }

  unsigned n = smooth_dim.value_or(static_cast<unsigned>(r));
  if (n > r) throw ParseError("smooth_dim exceeds the number of generators", 1, 1);

  std::vector<std::vector<Poly>> E(r, std::vector<Poly>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      E[i][j] = Poly::constant(i == j ? 1 : 0, r);
  if (auto it = sec.by_name.find("dual_basis"); it != sec.by_name.end()) {
    for (const auto& e : it->second) {
      std::vector<std::pair<std::string, std::size_t>> idx;
      auto head = split_key_indices(e, idx);
      if (head != "E" || idx.size() != 2)
        throw ParseError("expected key E[i][j]", e.line, e.key_col);
      unsigned i = lookup_gen(names, idx[0].first, e.line, idx[0].second);
      unsigned j = lookup_gen(names, idx[1].first, e.line, idx[1].second);
      E[i][j] = parse_poly(e.value, names, e.line, e.val_col);
    }
  }

  std::map<Subset, Poly> vol_a, vol_b;
  if (auto it = sec.by_name.find("volume"); it != sec.by_name.end()) {
    for (const auto& e : it->second) {
      std::string head = e.key.substr(0, e.key.find('['));
      if (head != "a" && head != "b")
        throw ParseError("expected key a[...] or b[...]", e.line, e.key_col);
      Subset I = parse_subset_key(e, names, head);
      if (I.size() != n)
        throw ParseError("volume index tuple must have smooth_dim entries", e.line, e.key_col);
      (head == "a" ? vol_a : vol_b)[I] = parse_poly(e.value, names, e.line, e.val_col);
    }
  } else {
    if (n == r) {
      Subset full;
      for (unsigned i = 0; i < n; ++i) full.push_back(i);
      vol_a[full] = vol_b[full] = Poly::constant(1, r);
    } else {
      throw ParseError("a [volume] section is required when smooth_dim < generators", 1, 1);
    }
  }

  std::map<std::pair<unsigned, unsigned>, Poly> table;
  if (auto it = sec.by_name.find("poisson"); it != sec.by_name.end()) {
    for (const auto& e : it->second) {
      std::string_view key = e.key;
      if (key.size() < 5 || key.front() != '{' || key.back() != '}')
        throw ParseError("expected key {i,j}", e.line, e.key_col);
      auto comma = key.find(',');
      if (comma == std::string_view::npos) throw ParseError("expected key {i,j}", e.line, e.key_col);
      std::size_t c1 = e.key_col + 1, c2 = e.key_col + comma + 1;
      std::string_view first = trim(key.substr(1, comma - 1), c1);
      std::string_view second = trim(key.substr(comma + 1, key.size() - comma - 2), c2);
      unsigned i = lookup_gen(names, first, e.line, c1);
      unsigned j = lookup_gen(names, second, e.line, c2);
      if (i == j) throw ParseError("bracket of a generator with itself", e.line, e.key_col);
      Poly v = parse_poly(e.value, names, e.line, e.val_col);
      if (j < i) {
        std::swap(i, j);
        v = -v;
      }
      auto [slot, fresh] = table.try_emplace({i, j}, v);
      if (!fresh) throw ParseError("duplicate bracket entry", e.line, e.key_col);
    }
  }

  InputDocument doc;
  auto pres =
      std::make_shared<Presentation>(names, std::move(rules), n, std::move(E), std::move(vol_a),
                                     std::move(vol_b));
  doc.structure = make_poisson(pres, std::move(table));
  if (auto it = sec.by_name.find("options"); it != sec.by_name.end())
    for (const auto& e : it->second) doc.options[e.key] = e.value;
  return doc;
}

InputDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0, 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str(), path);
}

namespace {

/// Single-line cursor for multivector/form expressions.
struct Cursor {
  std::string_view s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  void expect(char c, const char* what) {
    if (peek() != c) throw ParseError(std::string("expected ") + what, 1, i + 1);
    ++i;
  }
  std::string_view ident() {
    skip_ws();
    std::size_t start = i;
    if (i < s.size() && is_ident_start(s[i]))
      while (i < s.size() && is_ident_char(s[i])) ++i;
    if (start == i) throw ParseError("expected a generator name", 1, i + 1);
    return s.substr(start, i - start);
  }
};

Poly parse_paren_poly(Cursor& cur, const PresPtr& pres) {
  cur.expect('(', "`(` opening a coefficient");
  std::size_t start = cur.i;
  int depth = 1;
  while (cur.i < cur.s.size() && depth > 0) {
    if (cur.s[cur.i] == '(') ++depth;
    if (cur.s[cur.i] == ')') --depth;
    ++cur.i;
  }
  if (depth != 0) throw ParseError("unbalanced parentheses", 1, start);
  return parse_poly(cur.s.substr(start, cur.i - 1 - start), pres->gen_names(), 1, start + 1);
}

/// One `(poly) factor ^ factor ...` term; the factor syntax is `(d x)*`
/// for multivectors and `d x` for forms.
std::pair<Poly, Subset> parse_term(Cursor& cur, const PresPtr& pres, bool dual, int& sign) {
  Poly c = parse_paren_poly(cur, pres);
  std::vector<unsigned> idx;
  bool first = true;
  while (true) {
    cur.skip_ws();
    if (cur.done() || cur.peek() == '+') break;
    if (!first) cur.expect('^', "`^` between factors");
    first = false;
    std::size_t col = cur.i + 1;
    if (dual) cur.expect('(', "`(d name)*`");
    cur.skip_ws();
    auto d = cur.ident();
    if (d != "d") throw ParseError("expected `d`", 1, col);
    auto name = cur.ident();
    unsigned g = lookup_gen(pres->gen_names(), name, 1, col);
    if (dual) {
      cur.expect(')', "`)`");
      cur.expect('*', "`*`");
    }
    idx.push_back(g);
  }
  // sort the factor indices, tracking the permutation sign; a repeated
  // factor makes the whole term vanish
  sign = 1;
  for (std::size_t a = 1; a < idx.size(); ++a)
    for (std::size_t b = a; b > 0 && idx[b - 1] >= idx[b]; --b) {
      if (idx[b - 1] == idx[b]) {
        sign = 0;
        return {c, Subset(idx.begin(), idx.end())};
      }
      std::swap(idx[b - 1], idx[b]);
      sign = -sign;
    }
  return {c, Subset(idx.begin(), idx.end())};
}

template <typename Out>
Out parse_graded(const PresPtr& pres, std::string_view text, bool dual) {
  Cursor cur{text};
  cur.skip_ws();
  if (cur.peek() == '0') {
    ++cur.i;
    if (!cur.done()) throw ParseError("unexpected content after 0", 1, cur.i + 1);
    return Out(pres, 0);
  }
  std::optional<Out> out;
  while (true) {
    int sign = 1;
    auto [c, K] = parse_term(cur, pres, dual, sign);
    if (!out)
      out.emplace(pres, static_cast<unsigned>(K.size()));
    else if (K.size() != out->deg)
      throw ParseError("terms have different degrees", 1, cur.i + 1);
    if (sign != 0) out->add(K, Rational(sign) * c);
    if (cur.done()) break;
    cur.expect('+', "`+` between terms");
  }
  return *out;
}

} // namespace

Multivector parse_multivector(const PresPtr& pres, std::string_view text) {
  return parse_graded<Multivector>(pres, text, true);
}

KForm parse_kform(const PresPtr& pres, std::string_view text) {
  return parse_graded<KForm>(pres, text, false);
}

} // namespace pbv
