#include "cusg/tensor.hpp"

#include "cusg/error.hpp"
#include "cusg/properties.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace cusg {

// ---- carriers ---------------------------------------------------------------

FinPomCarrier::FinPomCarrier(FinPom m) : m_(std::move(m)) {
  check_shape(m_);
  for (int a = 0; a < m_.n; ++a)
    if (a != m_.zero) universe_.push_back(a);
}

std::optional<Code> FinPomCarrier::parse(std::string_view s) const {
  int i = m_.index_of(std::string(s));
  if (i < 0) return std::nullopt;
  return i;
}

GridCarrier::GridCarrier(std::int64_t denominator, std::int64_t torsion, std::int64_t cap)
    : D_(denominator), N_(torsion), cap_(cap) {
  if (D_ < 1 || N_ < 1 || cap_ < 0) throw InputError("grid carrier needs D, N >= 1 and cap >= 0");
  for (std::int64_t num = 1; num <= cap_ * D_; ++num)
    for (std::int64_t t = 0; t < N_; ++t) universe_.push_back(encode(num, t));
}

std::string GridCarrier::label() const {
  if (D_ == 1 && N_ == 1) return "nat";
  return "grid(1/" + std::to_string(D_) + ", Z/" + std::to_string(N_) + ")";
}

Code GridCarrier::encode(std::int64_t num, std::int64_t tau) const { return num * N_ + tau; }

Code GridCarrier::add(Code x, Code y) const { return encode(num(x) + num(y), (tau(x) + tau(y)) % N_); }

bool GridCarrier::leq(Code x, Code y) const { return x == y || num(x) < num(y); }

bool GridCarrier::valid(Code x) const { return x >= 0 && (num(x) > 0 || tau(x) == 0); }

std::string GridCarrier::show(Code x) const {
  std::string s = to_string(Q(num(x), D_));
  if (N_ > 1 && x != 0) s += "|" + std::to_string(tau(x));
  return s;
}

std::optional<Code> GridCarrier::parse(std::string_view s) const {
  std::int64_t t = 0;
  auto bar = s.find('|');
  std::string_view value = s.substr(0, bar);
  try {
    if (bar != std::string_view::npos) t = std::stoll(std::string(s.substr(bar + 1)));
    Q q = parse_rational(value) * D_;
    if (boost::multiprecision::denominator(q) != 1 || t < 0 || t >= N_) return std::nullopt;
    Code c = encode(to_i64(boost::multiprecision::numerator(q)), t);
    if (!valid(c)) return std::nullopt;
    return c;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

// ---- formal sums ------------------------------------------------------------

FormalSum canonical(const Carrier& M, const Carrier& N, FormalSum f) {
  f.erase(std::remove_if(f.begin(), f.end(), [&](const Term& t) { return M.is_zero(t.first) || N.is_zero(t.second); }),
          f.end());
  std::sort(f.begin(), f.end());
  return f;
}

std::string show_sum(const Carrier& M, const Carrier& N, const FormalSum& f) {
  if (f.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += " + ";
    s += M.show(f[i].first) + "@" + N.show(f[i].second);
  }
  return s;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

FormalSum parse_sum(const Carrier& M, const Carrier& N, std::string_view s) {
  FormalSum f;
  s = trim(s);
  if (s.empty() || s == "0") return f;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t plus = s.find('+', start);
    std::string_view term = trim(s.substr(start, plus == std::string_view::npos ? std::string_view::npos : plus - start));
    auto at = term.find('@');
    if (at == std::string_view::npos) throw InputError("term '" + std::string(term) + "' is not of the form a@b");
    auto a = M.parse(trim(term.substr(0, at)));
    auto b = N.parse(trim(term.substr(at + 1)));
    if (!a) throw InputError("'" + std::string(trim(term.substr(0, at))) + "' is not an element of " + M.label());
    if (!b) throw InputError("'" + std::string(trim(term.substr(at + 1))) + "' is not an element of " + N.label());
    f.push_back({*a, *b});
    if (plus == std::string_view::npos) break;
    start = plus + 1;
  }
  std::sort(f.begin(), f.end());
  return f;
}

// ---- certificates -----------------------------------------------------------

const char* to_string(StepKind k) {
  switch (k) {
    case StepKind::SplitLeft: return "split-left";
    case StepKind::SplitRight: return "split-right";
    case StepKind::MergeLeft: return "merge-left";
    case StepKind::MergeRight: return "merge-right";
    case StepKind::Relax: return "relax";
    case StepKind::ZeroAbsorb: return "zero-absorb";
  }
  return "?";
}

const char* to_string(TensorVerdict::Status s) {
  switch (s) {
    case TensorVerdict::Status::Yes: return "Yes";
    case TensorVerdict::Status::No: return "No";
    case TensorVerdict::Status::Unknown: return "Unknown";
  }
  return "?";
}

std::optional<FormalSum> apply_step(const Carrier& M, const Carrier& N, const FormalSum& state,
                                    const Step& s, std::string* error) {
  auto bad = [&](const std::string& why) -> std::optional<FormalSum> {
    if (error) *error = std::string(to_string(s.kind)) + ": " + why;
    return std::nullopt;
  };
  const int size = static_cast<int>(state.size());
  std::vector<int> pos = s.positions;
  for (int p : pos)
    if (p < 0 || p >= size) return bad("position out of range");
  std::vector<int> sorted = pos;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return bad("repeated position");

  FormalSum out;
  auto keep_others = [&] {
    for (int i = 0; i < size; ++i)
      if (!std::binary_search(sorted.begin(), sorted.end(), i)) out.push_back(state[i]);
  };
  switch (s.kind) {
    case StepKind::SplitLeft:
    case StepKind::SplitRight: {
      if (pos.size() != 1 || s.parts.size() < 2) return bad("needs one position and at least two parts");
      bool left = s.kind == StepKind::SplitLeft;
      const Carrier& C = left ? M : N;
      Term t = state[pos[0]];
      Code total = C.zero();
      for (Code x : s.parts) {
        if (!C.valid(x) || C.is_zero(x)) return bad("parts must be nonzero elements");
        total = C.add(total, x);
      }
      if (total != (left ? t.first : t.second)) return bad("parts do not sum to the coordinate");
      keep_others();
      for (Code x : s.parts) out.push_back(left ? Term{x, t.second} : Term{t.first, x});
      break;
    }
    case StepKind::MergeLeft:
    case StepKind::MergeRight: {
      if (pos.size() < 2) return bad("needs at least two positions");
      bool left = s.kind == StepKind::MergeLeft;
      const Carrier& C = left ? M : N;
      Code shared = left ? state[pos[0]].second : state[pos[0]].first;
      Code total = C.zero();
      for (int p : pos) {
        if ((left ? state[p].second : state[p].first) != shared) return bad("terms do not share the fixed coordinate");
        total = C.add(total, left ? state[p].first : state[p].second);
      }
      keep_others();
      out.push_back(left ? Term{total, shared} : Term{shared, total});
      break;
    }
    case StepKind::Relax: {
      if (pos.size() > 1) return bad("at most one position");
      if (!M.valid(s.term.first) || !N.valid(s.term.second)) return bad("invalid term");
      if (!pos.empty()) {
        Term t = state[pos[0]];
        if (!M.leq(t.first, s.term.first) || !N.leq(t.second, s.term.second)) return bad("term does not dominate");
      }
      keep_others();
      out.push_back(s.term);
      break;
    }
    case StepKind::ZeroAbsorb: {
      if (pos.size() != 1) return bad("needs one position");
      Term t = state[pos[0]];
      if (!M.is_zero(t.first) && !N.is_zero(t.second)) return bad("term has no zero coordinate");
      keep_others();
      break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool replay(const Carrier& M, const Carrier& N, const FormalSum& source, const FormalSum& target,
            const Certificate& cert, std::string* error) {
  FormalSum state = source;
  std::sort(state.begin(), state.end());
  for (std::size_t i = 0; i < cert.size(); ++i) {
    std::string why;
    auto next = apply_step(M, N, state, cert[i], &why);
    if (!next) {
      if (error) *error = "step " + std::to_string(i + 1) + ": " + why;
      return false;
    }
    state = std::move(*next);
  }
  if (canonical(M, N, state) != canonical(M, N, target)) {
    if (error) *error = "chain ends at " + show_sum(M, N, state);
    return false;
  }
  return true;
}

bool is_equivalence(const Certificate& cert) {
  return std::none_of(cert.begin(), cert.end(), [](const Step& s) { return s.kind == StepKind::Relax; });
}

std::string serialize(const Carrier& M, const Carrier& N, const Certificate& cert) {
  std::ostringstream os;
  for (const Step& s : cert) {
    os << to_string(s.kind) << " [";
    for (std::size_t i = 0; i < s.positions.size(); ++i) os << (i ? " " : "") << s.positions[i];
    os << "]";
    if (s.kind == StepKind::SplitLeft) {
      os << " ";
      for (std::size_t i = 0; i < s.parts.size(); ++i) os << (i ? " " : "") << M.show(s.parts[i]);
    } else if (s.kind == StepKind::SplitRight) {
      os << " ";
      for (std::size_t i = 0; i < s.parts.size(); ++i) os << (i ? " " : "") << N.show(s.parts[i]);
    } else if (s.kind == StepKind::Relax) {
      os << " " << M.show(s.term.first) << "@" << N.show(s.term.second);
    }
    os << "\n";
  }
  return os.str();
}

Certificate parse_certificate(const Carrier& M, const Carrier& N, std::string_view text) {
  Certificate cert;
  std::istringstream is{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    auto fail = [&](const std::string& why) {
      throw InputError("certificate line " + std::to_string(lineno) + ": " + why);
    };
    auto open = line.find('['), close = line.find(']');
    if (open == std::string::npos || close == std::string::npos || close < open) fail("missing position list");
    std::string kind(trim(std::string_view(line).substr(0, open)));
    Step s;
    static const std::map<std::string, StepKind> kinds = {
        {"split-left", StepKind::SplitLeft},   {"split-right", StepKind::SplitRight},
        {"merge-left", StepKind::MergeLeft},   {"merge-right", StepKind::MergeRight},
        {"relax", StepKind::Relax},            {"zero-absorb", StepKind::ZeroAbsorb}};
    auto it = kinds.find(kind);
    if (it == kinds.end()) fail("unknown step '" + kind + "'");
    s.kind = it->second;
    std::istringstream ps(line.substr(open + 1, close - open - 1));
    int p;
    while (ps >> p) s.positions.push_back(p);
    std::string rest(trim(std::string_view(line).substr(close + 1)));
    std::istringstream rs(rest);
    std::string tok;
    if (s.kind == StepKind::SplitLeft || s.kind == StepKind::SplitRight) {
      const Carrier& C = s.kind == StepKind::SplitLeft ? M : N;
      while (rs >> tok) {
        auto c = C.parse(tok);
        if (!c) fail("unknown element '" + tok + "'");
        s.parts.push_back(*c);
      }
    } else if (s.kind == StepKind::Relax) {
      FormalSum t = parse_sum(M, N, rest);
      if (t.size() != 1) fail("relax needs exactly one term");
      s.term = t[0];
    }
    cert.push_back(std::move(s));
  }
  return cert;
}

// ---- bidirectional search ---------------------------------------------------

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<Code>& v) const {
    std::size_t h = 1469598103934665603ULL;
    for (Code c : v) {
      h ^= static_cast<std::size_t>(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

std::vector<Code> key_of(const FormalSum& f) {
  std::vector<Code> k;
  k.reserve(2 * f.size());
  for (auto& [a, b] : f) {
    k.push_back(a);
    k.push_back(b);
  }
  return k;
}

// Binary decompositions inside the universe: splits[a] = {(x,y) : x+y = a, x ≤ y by code}.
std::map<Code, std::vector<std::pair<Code, Code>>> binary_splits(const Carrier& C) {
  std::map<Code, std::vector<std::pair<Code, Code>>> out;
  const auto& u = C.universe();
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i; j < u.size(); ++j) out[C.add(u[i], u[j])].push_back({u[i], u[j]});
  return out;
}

int position_of(const FormalSum& f, const Term& t) {
  auto it = std::lower_bound(f.begin(), f.end(), t);
  return static_cast<int>(it - f.begin());
}

FormalSum without(const FormalSum& f, std::initializer_list<int> positions) {
  FormalSum out;
  for (int i = 0; i < static_cast<int>(f.size()); ++i)
    if (std::find(positions.begin(), positions.end(), i) == positions.end()) out.push_back(f[i]);
  return out;
}

FormalSum with(FormalSum f, std::initializer_list<Term> terms) {
  for (const Term& t : terms) f.push_back(t);
  std::sort(f.begin(), f.end());
  return f;
}

struct Move {
  FormalSum state;
  Step step;  // forward step: from the source state to `state` (forward search),
              // or from `state` to the source state (backward search)
};

class Engine {
 public:
  Engine(const Carrier& M, const Carrier& N, const SearchOptions& opt, bool order)
      : M_(M), N_(N), opt_(opt), order_(order), lsplit_(binary_splits(M)), rsplit_(binary_splits(N)) {}

  std::vector<Move> forward(const FormalSum& s) const {
    std::vector<Move> out;
    const int n = static_cast<int>(s.size());
    for (int p = 0; p < n; ++p) {
      if (p > 0 && s[p] == s[p - 1]) continue;
      if (n + 1 <= opt_.size_bound) {
        split(s, p, true, out);
        split(s, p, false, out);
      }
      if (order_) {
        for (Code a : M_.universe())
          if (a != s[p].first && M_.leq(s[p].first, a)) relax(s, p, {a, s[p].second}, out);
        for (Code b : N_.universe())
          if (b != s[p].second && N_.leq(s[p].second, b)) relax(s, p, {s[p].first, b}, out);
      }
    }
    merges(s, out, [](const FormalSum& next, Step st) { return Move{next, std::move(st)}; });
    if (order_ && n + 1 <= opt_.size_bound)
      for (Code a : M_.universe())
        for (Code b : N_.universe()) {
          Step st;
          st.kind = StepKind::Relax;
          st.term = {a, b};
          out.push_back({with(s, {{a, b}}), st});
        }
    return out;
  }

  // Predecessors h with a forward step h → s; the step is expressed relative to h.
  std::vector<Move> backward(const FormalSum& s) const {
    std::vector<Move> out;
    const int n = static_cast<int>(s.size());
    // h merges two terms of s, so s is a split of h.
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (s[p].second == s[q].second) {
          Term merged{M_.add(s[p].first, s[q].first), s[p].second};
          FormalSum h = with(without(s, {p, q}), {merged});
          Step st;
          st.kind = StepKind::SplitLeft;
          st.positions = {position_of(h, merged)};
          st.parts = {s[p].first, s[q].first};
          out.push_back({h, st});
        }
        if (s[p].first == s[q].first) {
          Term merged{s[p].first, N_.add(s[p].second, s[q].second)};
          FormalSum h = with(without(s, {p, q}), {merged});
          Step st;
          st.kind = StepKind::SplitRight;
          st.positions = {position_of(h, merged)};
          st.parts = {s[p].second, s[q].second};
          out.push_back({h, st});
        }
      }
    for (int p = 0; p < n; ++p) {
      if (p > 0 && s[p] == s[p - 1]) continue;
      // h splits a term of s, so s is a merge of h.
      if (n + 1 <= opt_.size_bound) {
        for (bool left : {true, false}) {
          const auto& table = left ? lsplit_ : rsplit_;
          auto it = table.find(left ? s[p].first : s[p].second);
          if (it == table.end()) continue;
          for (auto [x, y] : it->second) {
            Term tx = left ? Term{x, s[p].second} : Term{s[p].first, x};
            Term ty = left ? Term{y, s[p].second} : Term{s[p].first, y};
            FormalSum h = with(without(s, {p}), {tx, ty});
            Step st;
            st.kind = left ? StepKind::MergeLeft : StepKind::MergeRight;
            int px = position_of(h, tx), py = position_of(h, ty);
            if (px == py) ++py;
            st.positions = {px, py};
            out.push_back({h, st});
          }
        }
      }
      if (order_) {
        Term t = s[p];
        auto lower = [&](Term from) {
          FormalSum h = with(without(s, {p}), {from});
          Step st;
          st.kind = StepKind::Relax;
          st.positions = {position_of(h, from)};
          st.term = t;
          out.push_back({h, st});
        };
        for (Code a : M_.universe())
          if (a != t.first && M_.leq(a, t.first)) lower({a, t.second});
        for (Code b : N_.universe())
          if (b != t.second && N_.leq(b, t.second)) lower({t.first, b});
        // h lacks the term; the forward step inserts it.
        Step st;
        st.kind = StepKind::Relax;
        st.term = t;
        out.push_back({without(s, {p}), st});
      }
    }
    return out;
  }

 private:
  void split(const FormalSum& s, int p, bool left, std::vector<Move>& out) const {
    const auto& table = left ? lsplit_ : rsplit_;
    auto it = table.find(left ? s[p].first : s[p].second);
    if (it == table.end()) return;
    for (auto [x, y] : it->second) {
      Term tx = left ? Term{x, s[p].second} : Term{s[p].first, x};
      Term ty = left ? Term{y, s[p].second} : Term{s[p].first, y};
      Step st;
      st.kind = left ? StepKind::SplitLeft : StepKind::SplitRight;
      st.positions = {p};
      st.parts = {x, y};
      out.push_back({with(without(s, {p}), {tx, ty}), st});
    }
  }

  void relax(const FormalSum& s, int p, Term to, std::vector<Move>& out) const {
    Step st;
    st.kind = StepKind::Relax;
    st.positions = {p};
    st.term = to;
    out.push_back({with(without(s, {p}), {to}), st});
  }

  template <class F>
  void merges(const FormalSum& s, std::vector<Move>& out, F make) const {
    const int n = static_cast<int>(s.size());
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (q > p + 1 && s[q] == s[q - 1]) continue;
        if (s[p].second == s[q].second) {
          Step st;
          st.kind = StepKind::MergeLeft;
          st.positions = {p, q};
          out.push_back(make(with(without(s, {p, q}), {{M_.add(s[p].first, s[q].first), s[p].second}}), st));
        }
        if (s[p].first == s[q].first) {
          Step st;
          st.kind = StepKind::MergeRight;
          st.positions = {p, q};
          out.push_back(make(with(without(s, {p, q}), {{s[p].first, N_.add(s[p].second, s[q].second)}}), st));
        }
      }
  }

  const Carrier& M_;
  const Carrier& N_;
  SearchOptions opt_;
  bool order_;
  std::map<Code, std::vector<std::pair<Code, Code>>> lsplit_, rsplit_;
};

struct Node {
  int parent;  // -1 at the root
  Step step;
};

TensorVerdict search(const Carrier& M, const Carrier& N, const FormalSum& f_raw, const FormalSum& g_raw,
                     const SearchOptions& opt, bool order) {
  TensorVerdict v;
  FormalSum f = canonical(M, N, f_raw);
  FormalSum g = canonical(M, N, g_raw);
  if (opt.size_bound < static_cast<int>(std::max(f.size(), g.size())))
    throw InputError("size bound is smaller than the input sums");

  // Zero-absorb steps lead from the sorted raw source to its canonical form.
  Certificate prefix;
  {
    FormalSum state = f_raw;
    std::sort(state.begin(), state.end());
    for (;;) {
      auto it = std::find_if(state.begin(), state.end(),
                             [&](const Term& t) { return M.is_zero(t.first) || N.is_zero(t.second); });
      if (it == state.end()) break;
      Step st;
      st.kind = StepKind::ZeroAbsorb;
      st.positions = {static_cast<int>(it - state.begin())};
      prefix.push_back(st);
      state.erase(it);
    }
  }

  // 0 ≤ g by definition: insert the terms of g.
  if (order && f.empty()) {
    v.status = TensorVerdict::Status::Yes;
    v.certificate = prefix;
    FormalSum state;
    for (const Term& t : g) {
      Step st;
      st.kind = StepKind::Relax;
      st.term = t;
      v.certificate.push_back(st);
      state = with(state, {t});
    }
    return v;
  }

  Engine eng(M, N, opt, order);
  using Map = std::unordered_map<std::vector<Code>, int, VecHash>;
  std::vector<Node> fnodes{{-1, {}}}, bnodes{{-1, {}}};
  std::vector<FormalSum> fstates{f}, bstates{g};
  Map fseen{{key_of(f), 0}}, bseen{{key_of(g), 0}};
  std::vector<int> ffront{0}, bfront{0};

  auto build = [&](int fi, int bi) {
    Certificate cert = prefix;
    std::vector<Step> head;
    for (int i = fi; fnodes[i].parent >= 0; i = fnodes[i].parent) head.push_back(fnodes[i].step);
    std::reverse(head.begin(), head.end());
    cert.insert(cert.end(), head.begin(), head.end());
    for (int i = bi; bnodes[i].parent >= 0; i = bnodes[i].parent) cert.push_back(bnodes[i].step);
    return cert;
  };

  auto meet = fseen.find(key_of(g));
  if (meet != fseen.end()) {
    v.status = TensorVerdict::Status::Yes;
    v.certificate = build(meet->second, 0);
    return v;
  }
  int fdepth = 0, bdepth = 0;
  while (fdepth + bdepth < opt.depth && (!ffront.empty() || !bfront.empty())) {
    bool expand_forward = !ffront.empty() && (bfront.empty() || ffront.size() <= bfront.size());
    std::vector<int> next;
    if (expand_forward) {
      ++fdepth;
      for (int idx : ffront) {
        FormalSum cur = fstates[idx];
        for (Move& mv : eng.forward(cur)) {
          auto k = key_of(mv.state);
          if (fseen.count(k)) continue;
          int id = static_cast<int>(fnodes.size());
          fnodes.push_back({idx, std::move(mv.step)});
          fstates.push_back(std::move(mv.state));
          fseen.emplace(k, id);
          auto hit = bseen.find(k);
          if (hit != bseen.end()) {
            v.status = TensorVerdict::Status::Yes;
            v.certificate = build(id, hit->second);
            v.depth = fdepth + bdepth;
            return v;
          }
          next.push_back(id);
        }
      }
      ffront = std::move(next);
    } else {
      ++bdepth;
      for (int idx : bfront) {
        FormalSum cur = bstates[idx];
        for (Move& mv : eng.backward(cur)) {
          auto k = key_of(mv.state);
          if (bseen.count(k)) continue;
          int id = static_cast<int>(bnodes.size());
          bnodes.push_back({idx, std::move(mv.step)});
          bstates.push_back(std::move(mv.state));
          bseen.emplace(k, id);
          auto hit = fseen.find(k);
          if (hit != fseen.end()) {
            v.status = TensorVerdict::Status::Yes;
            v.certificate = build(hit->second, id);
            v.depth = fdepth + bdepth;
            return v;
          }
          next.push_back(id);
        }
      }
      bfront = std::move(next);
    }
    if (fnodes.size() + bnodes.size() > opt.max_states) {
      v.note = "state limit reached";
      break;
    }
  }
  v.status = TensorVerdict::Status::Unknown;
  v.depth = fdepth + bdepth;
  v.frontier = ffront.size() + bfront.size();
  if (ffront.empty() && bfront.empty() && v.note.empty()) v.note = "search space exhausted within the size bound";
  return v;
}

// No is only reported from a certified saturation of two finite carriers.
void settle_with_saturation(const Carrier& M, const Carrier& N, const FormalSum& f, const FormalSum& g,
                            const SearchOptions& opt, bool order, TensorVerdict& v) {
  if (v.status != TensorVerdict::Status::Unknown || !M.finite() || !N.finite()) return;
  Saturation s = tensor_saturate(M, N, opt.size_bound);
  if (!s.ok) {
    v.note += (v.note.empty() ? "" : "; ") + std::string("saturation overflow: ") + s.diagnostics;
    return;
  }
  int cf = s.class_of(canonical(M, N, f)), cg = s.class_of(canonical(M, N, g));
  bool related = order ? s.prepom.le(cf, cg) : cf == cg;
  if (!related) {
    v.status = TensorVerdict::Status::No;
    v.note = "certified by saturation";
  } else {
    v.note += (v.note.empty() ? "" : "; ") + std::string("saturation proves the relation but no chain was found");
  }
}

}  // namespace

TensorVerdict tensor_leq(const Carrier& M, const Carrier& N, const FormalSum& f, const FormalSum& g,
                         const SearchOptions& opt) {
  TensorVerdict v = search(M, N, f, g, opt, true);
  settle_with_saturation(M, N, f, g, opt, true, v);
  return v;
}

TensorVerdict tensor_equiv(const Carrier& M, const Carrier& N, const FormalSum& f, const FormalSum& g,
                           const SearchOptions& opt) {
  TensorVerdict v = search(M, N, f, g, opt, false);
  settle_with_saturation(M, N, f, g, opt, false, v);
  return v;
}

// ---- auxiliary relation -----------------------------------------------------

TensorVerdict tensor_auxrel(const FinW& M, const FinW& N, const FormalSum& f, const FormalSum& g,
                            const SearchOptions& opt) {
  for (const FinW* w : {&M, &N}) {
    Verdict v = validate_prew(*w);
    if (!v.holds()) throw InputError("tensor_auxrel: factor is not a PreW-semigroup (" + v.tag + " fails)");
  }
  // W1 on a finite carrier: a^≺ has a largest element e(a) with e(a) ≺ e(a).
  auto tops = [](const FinW& w) {
    std::vector<int> top(w.n(), -1);
    for (int a = 0; a < w.n(); ++a)
      for (int e = 0; e < w.n() && top[a] < 0; ++e) {
        if (!w.prec(e, a)) continue;
        bool all = true;
        for (int b = 0; b < w.n() && all; ++b) all = !w.prec(b, a) || w.prec(b, e);
        if (all) top[a] = e;
      }
    return top;
  };
  auto tm = tops(M), tn = tops(N);
  FinPomCarrier CM(M.base), CN(N.base);
  FormalSum gc = canonical(CM, CN, g);
  // The largest predecessor sum: drop terms whose predecessors vanish.
  FormalSum pred;
  for (auto [a, b] : gc) {
    Term t{tm[a], tn[b]};
    if (!CM.is_zero(t.first) && !CN.is_zero(t.second)) pred.push_back(t);
  }
  std::sort(pred.begin(), pred.end());
  TensorVerdict v = tensor_leq(CM, CN, f, pred, opt);
  if (v.status != TensorVerdict::Status::Yes) {
    v.note = "against predecessor sum " + show_sum(CM, CN, pred) + (v.note.empty() ? "" : "; " + v.note);
    return v;
  }
  // Extend the chain from pred up to g: relax each predecessor term, then insert the rest.
  FormalSum state = pred;
  std::vector<char> used(gc.size(), 0);
  for (std::size_t i = 0; i < gc.size(); ++i) {
    Term t{tm[gc[i].first], tn[gc[i].second]};
    if (CM.is_zero(t.first) || CN.is_zero(t.second)) continue;
    if (t == gc[i]) continue;
    int p = position_of(state, t);
    Step st;
    st.kind = StepKind::Relax;
    st.positions = {p};
    st.term = gc[i];
    state = *apply_step(CM, CN, state, st);
    v.certificate.push_back(st);
    used[i] = 1;
  }
  for (std::size_t i = 0; i < gc.size(); ++i) {
    Term t{tm[gc[i].first], tn[gc[i].second]};
    if (!(CM.is_zero(t.first) || CN.is_zero(t.second))) continue;
    Step st;
    st.kind = StepKind::Relax;
    st.term = gc[i];
    state = *apply_step(CM, CN, state, st);
    v.certificate.push_back(st);
  }
  v.note = "via predecessor sum " + show_sum(CM, CN, pred);
  return v;
}

// ---- saturation -------------------------------------------------------------

int Saturation::class_of(const FormalSum& f) const {
  if (!ok) throw InputError("saturation did not certify");
  int c = 0;
  for (const Term& t : f) {
    auto it = std::lower_bound(generators.begin(), generators.end(), t);
    if (it == generators.end() || *it != t) throw InputError("term is not a generator of the saturated product");
    c = act[c][it - generators.begin()];
  }
  return c;
}

namespace {

using Key = std::uint64_t;

Key pack(const std::vector<int>& idx) {
  Key k = 0;
  for (std::size_t i = 0; i < idx.size(); ++i) k |= static_cast<Key>(idx[i] + 1) << (8 * i);
  return k;
}

std::vector<int> unpack(Key k) {
  std::vector<int> out;
  while (k) {
    out.push_back(static_cast<int>(k & 0xff) - 1);
    k >>= 8;
  }
  return out;
}

Key insert_into(Key k, int g) {
  std::vector<int> v = unpack(k);
  v.insert(std::upper_bound(v.begin(), v.end(), g), g);
  return pack(v);
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

Saturation tensor_saturate(const Carrier& M, const Carrier& N, int size_bound, std::size_t max_sums) {
  Saturation s;
  if (size_bound < 1 || size_bound > 8) {
    s.diagnostics = "size bound must lie in [1, 8]";
    return s;
  }
  for (Code a : M.universe())
    for (Code b : N.universe()) s.generators.push_back({a, b});
  const int P = static_cast<int>(s.generators.size());
  if (P > 255) {
    s.diagnostics = "too many generators (" + std::to_string(P) + ")";
    return s;
  }
  // Number of multisets of size ≤ B over P generators is C(P+B, B).
  long double count = 1;
  for (int i = 1; i <= size_bound; ++i) count = count * (P + i) / i;
  if (count > static_cast<long double>(max_sums)) {
    s.diagnostics = "too many sums to enumerate (" + std::to_string(static_cast<long long>(count)) + ")";
    return s;
  }
  std::map<Term, int> gen_index;
  for (int i = 0; i < P; ++i) gen_index[s.generators[i]] = i;

  // Enumerate sorted index tuples by size.
  std::vector<Key> sums{0};
  std::vector<int> size_of{0};
  std::unordered_map<Key, int> id{{0, 0}};
  {
    std::size_t begin = 0;
    for (int sz = 1; sz <= size_bound; ++sz) {
      std::size_t end = sums.size();
      for (std::size_t i = begin; i < end; ++i) {
        std::vector<int> v = unpack(sums[i]);
        int from = v.empty() ? 0 : v.back();
        for (int g = from; g < P; ++g) {
          v.push_back(g);
          Key k = pack(v);
          id.emplace(k, static_cast<int>(sums.size()));
          sums.push_back(k);
          size_of.push_back(sz);
          v.pop_back();
        }
      }
      begin = end;
    }
  }

  auto ls = binary_splits(M);
  auto rs = binary_splits(N);
  // Splits of each generator into two generators, as (g1, g2) pairs.
  std::vector<std::vector<std::pair<int, int>>> gsplit(P);
  for (int g = 0; g < P; ++g) {
    auto [a, b] = s.generators[g];
    if (auto it = ls.find(a); it != ls.end())
      for (auto [x, y] : it->second) gsplit[g].push_back({gen_index.at({x, b}), gen_index.at({y, b})});
    if (auto it = rs.find(b); it != rs.end())
      for (auto [x, y] : it->second) gsplit[g].push_back({gen_index.at({a, x}), gen_index.at({a, y})});
  }

  UnionFind uf(sums.size());
  for (std::size_t i = 0; i < sums.size(); ++i) {
    if (size_of[i] >= size_bound) continue;
    std::vector<int> v = unpack(sums[i]);
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (j > 0 && v[j] == v[j - 1]) continue;
      for (auto [g1, g2] : gsplit[v[j]]) {
        std::vector<int> w = v;
        w.erase(w.begin() + static_cast<long>(j));
        w.insert(std::upper_bound(w.begin(), w.end(), g1), g1);
        w.insert(std::upper_bound(w.begin(), w.end(), g2), g2);
        uf.unite(static_cast<int>(i), id.at(pack(w)));
      }
    }
  }
  std::vector<int> cls(sums.size(), -1);
  std::vector<int> rep_id;
  for (std::size_t i = 0; i < sums.size(); ++i) {
    int r = uf.find(static_cast<int>(i));
    if (cls[r] < 0) {
      cls[r] = static_cast<int>(rep_id.size());
      rep_id.push_back(static_cast<int>(i));
    }
    cls[i] = cls[r];
  }
  const int C = static_cast<int>(rep_id.size());
  s.act.assign(C, std::vector<int>(P, -1));
  for (int c = 0; c < C; ++c) {
    if (size_of[rep_id[c]] >= size_bound) {
      s.diagnostics = "a class has no representative below the size bound";
      return s;
    }
    for (int g = 0; g < P; ++g) s.act[c][g] = cls[id.at(insert_into(sums[rep_id[c]], g))];
  }
  // Well-definedness of the action on every enumerated sum.
  for (std::size_t i = 0; i < sums.size(); ++i) {
    if (size_of[i] >= size_bound) continue;
    for (int g = 0; g < P; ++g)
      if (cls[id.at(insert_into(sums[i], g))] != s.act[cls[i]][g]) {
        s.diagnostics = "class action depends on the representative";
        return s;
      }
  }
  for (int c = 0; c < C; ++c)
    for (int g = 0; g < P; ++g)
      for (int h = g + 1; h < P; ++h)
        if (s.act[s.act[c][g]][h] != s.act[s.act[c][h]][g]) {
          s.diagnostics = "class action does not commute";
          return s;
        }
  for (int c = 0; c < C; ++c)
    for (int g = 0; g < P; ++g)
      for (auto [g1, g2] : gsplit[g])
        if (s.act[c][g] != s.act[s.act[c][g1]][g2]) {
          s.diagnostics = "class action violates biadditivity";
          return s;
        }

  for (int c = 0; c < C; ++c) {
    FormalSum rep;
    for (int g : unpack(sums[rep_id[c]])) rep.push_back(s.generators[g]);
    s.reps.push_back(std::move(rep));
  }

  // Pre-order: X ≤ X + g, and X + t ≤ X + t' for generators t ≤ t' coordinatewise.
  std::vector<std::vector<int>> up(C);
  std::vector<std::pair<int, int>> relax;
  for (int g = 0; g < P; ++g)
    for (int h = 0; h < P; ++h)
      if (g != h && M.leq(s.generators[g].first, s.generators[h].first) &&
          N.leq(s.generators[g].second, s.generators[h].second))
        relax.push_back({g, h});
  for (int c = 0; c < C; ++c) {
    for (int g = 0; g < P; ++g) up[c].push_back(s.act[c][g]);
    for (auto [g, h] : relax) up[s.act[c][g]].push_back(s.act[c][h]);
  }
  FinPrePom& pre = s.prepom;
  pre.n = C;
  pre.zero = 0;
  pre.add.resize(static_cast<std::size_t>(C) * C);
  pre.leq.assign(static_cast<std::size_t>(C) * C, 0);
  for (int c = 0; c < C; ++c) {
    std::vector<int> stack{c};
    pre.leq[static_cast<std::size_t>(c) * C + c] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : up[x])
        if (!pre.leq[static_cast<std::size_t>(c) * C + y]) {
          pre.leq[static_cast<std::size_t>(c) * C + y] = 1;
          stack.push_back(y);
        }
    }
    for (int d = 0; d < C; ++d) {
      int x = c;
      for (int g : unpack(sums[rep_id[d]])) x = s.act[x][g];
      pre.add[static_cast<std::size_t>(c) * C + d] = x;
    }
    pre.names.push_back(show_sum(M, N, s.reps[c]));
  }
  s.pom = antisymmetrize(pre, &s.pre_to_pom);
  s.ok = true;
  return s;
}

Saturation tensor_saturate(const FinPom& M, const FinPom& N, int size_bound) {
  FinPomCarrier cm(M), cn(N);
  return tensor_saturate(cm, cn, size_bound);
}

std::vector<int> tensor_map(const Saturation& src, const Saturation& dst, const std::vector<int>& f,
                            const std::vector<int>& g) {
  if (!src.ok || !dst.ok) throw InputError("tensor_map needs certified saturations");
  std::vector<int> out(src.pom.n, -1);
  for (int c = 0; c < src.prepom.n; ++c) {
    FormalSum image;
    for (auto [a, b] : src.reps[c]) {
      Code fa = f.at(a), gb = g.at(b);
      Term t{fa, gb};
      if (std::binary_search(dst.generators.begin(), dst.generators.end(), t)) image.push_back(t);
      // Otherwise a coordinate is zero and the term is absorbed.
    }
    std::sort(image.begin(), image.end());
    int e = dst.element_of(image);
    int i = src.pre_to_pom[c];
    if (out[i] >= 0 && out[i] != e) throw InputError("induced map is not well defined");
    out[i] = e;
  }
  return out;
}

Verdict tensor_algebraic_check(const FinPom& M, const FinPom& N, int size_bound) {
  Saturation s = tensor_saturate(M, N, size_bound);
  if (!s.ok) return make_unknown(size_bound, "saturation overflow: " + s.diagnostics);
  Saturation cu = tensor_saturate(cu_of_pom(M), cu_of_pom(N), size_bound);
  if (!cu.ok) return make_unknown(size_bound, "saturation overflow: " + cu.diagnostics);
  if (!find_isomorphism(cu.pom, cu_of_pom(s.pom))) return make_fails("cu-commutes-with-tensor", {});
  bool alg = check_property(M, {Prop::AlgebraicallyOrdered}).holds() &&
             check_property(N, {Prop::AlgebraicallyOrdered}).holds();
  if (!alg) return make_holds("factors are not both algebraically ordered");
  FinPrePom a = algebraic_order(s.prepom);
  for (int x = 0; x < s.prepom.n; ++x)
    for (int y = 0; y < s.prepom.n; ++y)
      if (a.le(x, y) != s.prepom.le(x, y)) return make_fails("algebraically-ordered", {x, y});
  return make_holds();
}

}  // namespace cusg
