#include "doc.hpp"

#include "cusg/error.hpp"

#include <map>
#include <sstream>

namespace cusg::cli {

namespace {

struct Token {
  std::string text;
  int column;
};

std::vector<Token> split_words(std::string_view line, int offset) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back({std::string(line.substr(start, i - start)), offset + static_cast<int>(start) + 1});
  }
  return out;
}

struct Entry {
  int a, b, c;
  int line, column;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  SemigroupDoc run() {
    std::istringstream in{std::string(text_)};
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
      ++lineno;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      auto colon = raw.find(':');
      auto words = split_words(raw, 0);
      if (words.empty()) continue;
      if (colon == std::string::npos) throw ParseError(lineno, words[0].column, "expected `key: value`");
      std::string key = trim(raw.substr(0, colon));
      auto rest = split_words(std::string_view(raw).substr(colon + 1), static_cast<int>(colon) + 1);
      line(lineno, key, static_cast<int>(raw.find_first_not_of(" \t")) + 1, rest);
    }
    return finish();
  }

 private:
  static std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
  }

  int element(int lineno, const Token& t) const {
    auto it = index_.find(t.text);
    if (it == index_.end()) throw ParseError(lineno, t.column, "unknown element `" + t.text + "`");
    return it->second;
  }

  void need_elements(int lineno, int column) const {
    if (names_.empty()) throw ParseError(lineno, column, "`elements:` must come first");
  }

  void expect_count(int lineno, int column, const std::vector<Token>& rest, std::size_t n, const char* shape) const {
    if (rest.size() != n) throw ParseError(lineno, column, std::string("expected `") + shape + "`");
  }

  void line(int lineno, const std::string& key, int column, const std::vector<Token>& rest) {
    if (key == "elements") {
      if (!names_.empty()) throw ParseError(lineno, column, "duplicate `elements:`");
      if (rest.empty()) throw ParseError(lineno, column, "empty carrier");
      for (const auto& t : rest) {
        if (index_.count(t.text)) throw ParseError(lineno, t.column, "duplicate element `" + t.text + "`");
        index_[t.text] = static_cast<int>(names_.size());
        names_.push_back(t.text);
      }
      elements_line_ = lineno;
      return;
    }
    need_elements(lineno, column);
    if (key == "zero") {
      expect_count(lineno, column, rest, 1, "zero: <element>");
      zero_ = element(lineno, rest[0]);
    } else if (key == "unit") {
      expect_count(lineno, column, rest, 1, "unit: <element>");
      unit_ = element(lineno, rest[0]);
    } else if (key == "add" || key == "mul") {
      if (rest.size() != 4 || rest[2].text != "=")
        throw ParseError(lineno, column, "expected `" + key + ": a b = c`");
      Entry e{element(lineno, rest[0]), element(lineno, rest[1]), element(lineno, rest[3]), lineno, rest[0].column};
      (key == "add" ? add_ : mul_).push_back(e);
    } else if (key == "le" || key == "aux") {
      expect_count(lineno, column, rest, 2, (key + ": a b").c_str());
      Entry e{element(lineno, rest[0]), element(lineno, rest[1]), 0, lineno, rest[0].column};
      (key == "le" ? le_ : aux_).push_back(e);
      if (key == "aux") has_aux_ = true;
    } else if (key == "order") {
      if (rest.size() != 1 || rest[0].text != "algebraic")
        throw ParseError(lineno, column, "expected `order: algebraic`");
      algebraic_ = true;
    } else {
      throw ParseError(lineno, column, "unknown key `" + key + "`");
    }
  }

  // Fills a table from entries; x∘zero is implicit for addition and multiplication.
  std::vector<int> table(const std::vector<Entry>& entries, int zero, bool additive, const char* what) const {
    const int n = static_cast<int>(names_.size());
    std::vector<int> t(static_cast<std::size_t>(n) * n, -1);
    auto set = [&](int a, int b, int c, const Entry* e) {
      int& slot = t[static_cast<std::size_t>(a) * n + b];
      if (slot >= 0 && slot != c) {
        throw ParseError(e ? e->line : 0, e ? e->column : 0,
                         std::string("conflicting ") + what + " entries for " + names_[a] + " " + names_[b]);
      }
      slot = c;
    };
    for (const auto& e : entries) set(e.a, e.b, e.c, &e);
    for (const auto& e : entries)
      if (t[static_cast<std::size_t>(e.b) * n + e.a] < 0) set(e.b, e.a, e.c, nullptr);
    for (int x = 0; x < n; ++x) {
      for (int side = 0; side < 2; ++side) {
        int a = side ? x : zero, b = side ? zero : x;
        if (t[static_cast<std::size_t>(a) * n + b] < 0) set(a, b, additive ? x : zero, nullptr);
      }
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (t[static_cast<std::size_t>(a) * n + b] < 0)
          throw ParseError(0, 0, std::string(what) + " table incomplete: missing " + names_[a] + " " + names_[b]);
    return t;
  }

  SemigroupDoc finish() {
    if (names_.empty()) throw ParseError(0, 0, "missing `elements:`");
    const int n = static_cast<int>(names_.size());
    SemigroupDoc doc;
    doc.kind = SemigroupDoc::Kind::Finite;
    if (zero_ < 0) {
      auto it = index_.find("0");
      if (it == index_.end()) throw ParseError(elements_line_, 1, "no `zero:` line and no element named 0");
      zero_ = it->second;
    }
    FinPom& m = doc.pom;
    m.n = n;
    m.zero = zero_;
    m.names = names_;
    m.add = table(add_, zero_, true, "add");
    m.leq.assign(static_cast<std::size_t>(n) * n, 0);
    if (algebraic_) {
      m = algebraic_order(m);
      m.names = names_;
    }
    for (const auto& e : le_) m.leq[static_cast<std::size_t>(e.a) * n + e.b] = 1;
    for (int a = 0; a < n; ++a) m.leq[static_cast<std::size_t>(a) * n + a] = 1;
    for (int c = 0; c < n; ++c)
      for (int a = 0; a < n; ++a)
        if (m.le(a, c))
          for (int b = 0; b < n; ++b)
            if (m.le(c, b)) m.leq[static_cast<std::size_t>(a) * n + b] = 1;
    doc.algebraic = algebraic_;

    if (has_aux_) {
      std::vector<std::uint8_t> aux(static_cast<std::size_t>(n) * n, 0);
      for (const auto& e : aux_) aux[static_cast<std::size_t>(e.a) * n + e.b] = 1;
      doc.aux = std::move(aux);
    }
    if (!mul_.empty() || unit_ >= 0) {
      if (unit_ < 0) throw ParseError(0, 0, "`mul:` lines need a `unit:` line");
      doc.mul = table(mul_, zero_, false, "mul");
      doc.unit = unit_;
    }

    Verdict v = validate(m, has_aux_ ? OrderKind::Pre : OrderKind::Partial);
    if (!v.holds()) {
      int line = elements_line_;
      for (const auto& e : le_)
        if (v.witness.size() >= 2 && e.a == v.witness[0] && e.b == v.witness[1]) line = e.line;
      throw ParseError(line, 0, "not a positively ordered monoid: " + v.tag + " fails" +
                                    (v.note.empty() ? "" : " (" + v.note + ")"));
    }
    return doc;
  }

  std::string_view text_;
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
  int elements_line_ = 0;
  int zero_ = -1, unit_ = -1;
  bool algebraic_ = false, has_aux_ = false;
  std::vector<Entry> add_, mul_, le_, aux_;
};

}  // namespace

FinW SemigroupDoc::finw() const {
  if (aux) return FinW{pom, *aux};
  return with_order_as_aux(pom);
}

SemigroupDoc parse_document(std::string_view text) { return Parser(text).run(); }

SemigroupDoc finite_doc(const FinPom& m) {
  SemigroupDoc doc;
  doc.pom = m;
  bool usable = m.names.size() == static_cast<std::size_t>(m.n);
  std::map<std::string, int> seen;
  for (int a = 0; usable && a < m.n; ++a) {
    const std::string& s = m.names[a];
    usable = !s.empty() && s.find_first_of(" \t#:=") == std::string::npos && seen.emplace(s, a).second;
  }
  if (!usable) {
    doc.pom.names.clear();
    for (int a = 0, next = 1; a < m.n; ++a) doc.pom.names.push_back(a == m.zero ? "0" : "x" + std::to_string(next++));
  }
  return doc;
}

std::string serialize(const SemigroupDoc& doc) {
  if (doc.kind == SemigroupDoc::Kind::Named) return to_string(doc.named) + "\n";
  const FinPom& m = doc.pom;
  const int n = m.n;
  std::ostringstream out;
  out << "elements:";
  for (int a = 0; a < n; ++a) out << ' ' << m.name(a);
  out << "\nzero: " << m.name(m.zero) << '\n';
  // Entries the parser would infer (x∘0 and mirrored b∘a) are omitted.
  auto write_table = [&](const char* key, const std::vector<int>& t, bool additive) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int c = t[static_cast<std::size_t>(a) * n + b];
        if ((a == m.zero || b == m.zero) && c == (additive ? (a == m.zero ? b : a) : m.zero)) continue;
        if (b < a && c == t[static_cast<std::size_t>(b) * n + a]) continue;
        out << key << ": " << m.name(a) << ' ' << m.name(b) << " = " << m.name(c) << '\n';
      }
  };
  write_table("add", m.add, true);
  // With `order: algebraic` only the comparisons beyond the algebraic order are listed.
  FinPom alg = algebraic_order(m);
  bool algebraic = doc.algebraic;
  if (algebraic) out << "order: algebraic\n";
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && m.le(a, b) && !(algebraic && alg.le(a, b))) out << "le: " << m.name(a) << ' ' << m.name(b) << '\n';
  if (doc.aux) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if ((*doc.aux)[static_cast<std::size_t>(a) * n + b]) out << "aux: " << m.name(a) << ' ' << m.name(b) << '\n';
  }
  if (doc.mul) {
    out << "unit: " << m.name(doc.unit) << '\n';
    write_table("mul", *doc.mul, false);
  }
  return out.str();
}

}  // namespace cusg::cli
