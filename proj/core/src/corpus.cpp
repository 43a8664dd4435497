#include "cusg/corpus.hpp"

#include "cusg/error.hpp"

#include <algorithm>
#include <map>

namespace cusg {

namespace {

// {0 < 1 < ... < k} with a + b = max(a, b).
FinPom make_max_chain(int k) {
  FinPom m;
  m.n = k + 1;
  m.zero = 0;
  m.add.resize(static_cast<std::size_t>(m.n) * m.n);
  m.leq.resize(static_cast<std::size_t>(m.n) * m.n);
  for (int a = 0; a < m.n; ++a)
    for (int b = 0; b < m.n; ++b) {
      m.add[static_cast<std::size_t>(a) * m.n + b] = std::max(a, b);
      m.leq[static_cast<std::size_t>(a) * m.n + b] = a <= b;
    }
  for (int a = 0; a < m.n; ++a) m.names.push_back(a == 0 ? "0" : "c" + std::to_string(a));
  return m;
}

FinPom random_component(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 7);
  int c = pick(rng);
  if (c <= 4) return make_elementary(c);
  return make_max_chain(c - 3);
}

FinPom restrict_to(const FinPom& big, const std::vector<int>& members) {
  std::map<int, int> index;
  for (std::size_t i = 0; i < members.size(); ++i) index[members[i]] = static_cast<int>(i);
  FinPom m;
  m.n = static_cast<int>(members.size());
  m.zero = index.at(big.zero);
  m.add.resize(static_cast<std::size_t>(m.n) * m.n);
  m.leq.resize(static_cast<std::size_t>(m.n) * m.n);
  for (int i = 0; i < m.n; ++i) {
    m.names.push_back(big.name(members[i]));
    for (int j = 0; j < m.n; ++j) {
      m.add[static_cast<std::size_t>(i) * m.n + j] = index.at(big.sum(members[i], members[j]));
      m.leq[static_cast<std::size_t>(i) * m.n + j] = big.le(members[i], members[j]);
    }
  }
  return m;
}

// Smallest translation-invariant pre-order containing the algebraic order and `extra`.
FinPom order_closure(const FinPom& m, const std::vector<std::pair<int, int>>& extra) {
  FinPom out = algebraic_order(m);
  const int n = m.n;
  for (auto [a, b] : extra) out.leq[static_cast<std::size_t>(a) * n + b] = 1;
  for (bool grew = true; grew;) {
    grew = false;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (!out.le(a, b)) continue;
        for (int c = 0; c < n; ++c) {
          auto& t = out.leq[static_cast<std::size_t>(m.sum(a, c)) * n + m.sum(b, c)];
          if (!t) t = grew = 1;
          if (out.le(b, c) && !out.le(a, c)) out.leq[static_cast<std::size_t>(a) * n + c] = grew = 1;
        }
      }
  }
  return out;
}

// Rees quotient M/I for the ideal I generated by `gens`: I collapses to one absorbing element.
FinPom rees_quotient(const FinPom& m, const std::vector<int>& gens) {
  std::vector<char> in_ideal(m.n, 0);
  for (int g : gens)
    for (int x = 0; x < m.n; ++x) in_ideal[m.sum(g, x)] = 1;
  std::vector<int> index(m.n, -1);
  int next = 0, absorbing = -1;
  for (int x = 0; x < m.n; ++x) {
    if (!in_ideal[x]) {
      index[x] = next++;
    } else {
      if (absorbing < 0) absorbing = next++;
      index[x] = absorbing;
    }
  }
  FinPom q;
  q.n = next;
  q.zero = index[m.zero];
  q.add.assign(static_cast<std::size_t>(q.n) * q.n, 0);
  q.leq.assign(static_cast<std::size_t>(q.n) * q.n, 0);
  q.names.assign(q.n, "");
  for (int x = 0; x < m.n; ++x) {
    q.names[index[x]] = index[x] == absorbing ? "top" : m.name(x);
    for (int y = 0; y < m.n; ++y) q.add[static_cast<std::size_t>(index[x]) * q.n + index[y]] = index[m.sum(x, y)];
  }
  return algebraic_order(q);
}

}  // namespace

FinPom random_pom(std::mt19937_64& rng, int max_size) {
  if (max_size < 1) throw InputError("max_size must be positive");
  for (;;) {
    FinPom big = random_component(rng);
    int factors = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int i = 1; i < factors; ++i) big = product(big, random_component(rng));
    std::uniform_int_distribution<int> elem(0, big.n - 1);
    int gens = std::uniform_int_distribution<int>(1, 3)(rng);
    if (big.n > 100) continue;
    std::vector<char> in(big.n, 0);
    in[big.zero] = 1;
    for (int g = 0; g < gens; ++g) in[elem(rng)] = 1;
    // Close under addition.
    for (bool grew = true; grew;) {
      grew = false;
      for (int a = 0; a < big.n; ++a)
        for (int b = 0; b < big.n; ++b)
          if (in[a] && in[b] && !in[big.sum(a, b)]) in[big.sum(a, b)] = grew = 1;
    }
    std::vector<int> members;
    for (int a = 0; a < big.n; ++a)
      if (in[a]) members.push_back(a);
    FinPom m = restrict_to(big, members);
    bool quotient = m.n > max_size || std::uniform_int_distribution<int>(0, 2)(rng) == 0;
    if (quotient) {
      if (m.n < 3) continue;
      std::uniform_int_distribution<int> pick(0, m.n - 1);
      std::vector<int> ideal_gens{pick(rng)};
      if (std::uniform_int_distribution<int>(0, 1)(rng)) ideal_gens.push_back(pick(rng));
      if (std::find(ideal_gens.begin(), ideal_gens.end(), m.zero) != ideal_gens.end()) continue;
      m = rees_quotient(m, ideal_gens);
    }
    if (m.n > max_size) continue;
    // Bias away from the (few) tiny monoids.
    if (m.n <= 2 && std::uniform_int_distribution<int>(0, 3)(rng) > 0) continue;
    switch (std::uniform_int_distribution<int>(quotient ? 1 : 0, 3)(rng)) {
      case 0: break;  // induced product order
      case 1: m = algebraic_order(m); break;
      default: {
        // Algebraic order enlarged by random comparisons that keep it antisymmetric.
        FinPom ordered = algebraic_order(m);
        if (!validate(ordered).holds()) break;
        std::vector<std::pair<int, int>> extra;
        int wanted = std::uniform_int_distribution<int>(1, 3)(rng);
        for (int added = 0; added < wanted; ++added) {
          std::vector<std::pair<int, int>> open;
          for (int a = 0; a < m.n; ++a)
            for (int b = 0; b < m.n; ++b)
              if (a != b && !ordered.le(a, b) && !ordered.le(b, a)) open.push_back({a, b});
          std::shuffle(open.begin(), open.end(), rng);
          bool found = false;
          for (auto pair : open) {
            extra.push_back(pair);
            FinPom candidate = order_closure(m, extra);
            if (validate(candidate).holds()) {
              ordered = std::move(candidate);
              found = true;
              break;
            }
            extra.pop_back();
          }
          if (!found) break;
        }
        m = std::move(ordered);
      }
    }
    if (validate(m).holds()) return m;
  }
}

std::vector<FinPom> pom_corpus(std::uint64_t seed, int count, int max_size) {
  std::mt19937_64 rng(seed);
  std::vector<FinPom> out;
  for (int i = 0; i < count; ++i) out.push_back(random_pom(rng, max_size));
  return out;
}

FinW random_finw(std::mt19937_64& rng, int max_size) {
  for (;;) {
    FinPom m = random_pom(rng, max_size);
    const int n = m.n;
    FinW w;
    w.base = m;
    w.aux.assign(static_cast<std::size_t>(n) * n, 0);
    auto set = [&](int a, int b) { w.aux[static_cast<std::size_t>(a) * n + b] = 1; };
    int mode = std::uniform_int_distribution<int>(0, 2)(rng);
    if (mode == 0) {
      w.aux = m.leq;
    } else if (mode == 1) {
      // a ≺ b iff a ≤ c ≤ b for some c in a random submonoid C.
      std::vector<char> in(n, 0);
      in[m.zero] = 1;
      int gens = std::uniform_int_distribution<int>(0, 2)(rng);
      for (int g = 0; g < gens; ++g) in[std::uniform_int_distribution<int>(0, n - 1)(rng)] = 1;
      for (bool grew = true; grew;) {
        grew = false;
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b)
            if (in[a] && in[b] && !in[m.sum(a, b)]) in[m.sum(a, b)] = grew = 1;
      }
      for (int c = 0; c < n; ++c)
        if (in[c])
          for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
              if (m.le(a, c) && m.le(c, b)) set(a, b);
    } else {
      std::bernoulli_distribution keep(0.5);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (a == m.zero || (m.le(a, b) && keep(rng))) set(a, b);
      // Close under a ≤ b ≺ c ≤ d ⇒ a ≺ d.
      std::vector<std::uint8_t> closed = w.aux;
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (w.prec(b, c))
            for (int a = 0; a < n; ++a)
              for (int d = 0; d < n; ++d)
                if (m.le(a, b) && m.le(c, d)) closed[static_cast<std::size_t>(a) * n + d] = 1;
      w.aux = std::move(closed);
    }
    if (validate_prew(w).holds()) return w;
  }
}

std::vector<FinW> finw_corpus(std::uint64_t seed, int count, int max_size) {
  std::mt19937_64 rng(seed);
  std::vector<FinW> out;
  for (int i = 0; i < count; ++i) out.push_back(random_finw(rng, max_size));
  return out;
}

}  // namespace cusg
