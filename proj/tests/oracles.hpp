#pragma once

// Brute-force reference implementations used only by tests. Nothing here
// calls into the code paths it is used to check.

#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "rootsc/dfa.hpp"
#include "rootsc/monoid.hpp"

namespace oracle {

using Map = std::vector<unsigned>;  // one-based images

inline Map compose(const Map& f, const Map& g) {
  Map h(f.size());
  for (std::size_t q = 0; q < f.size(); ++q) h[q] = g[f[q] - 1];
  return h;
}

/// Every map {1..n} -> {1..n}, in lexicographic order.
inline std::vector<Map> all_maps(unsigned n) {
  std::vector<Map> out;
  Map m(n, 1);
  while (true) {
    out.push_back(m);
    std::size_t i = n;
    while (i > 0 && m[i - 1] == n) m[--i] = 1;
    if (i == 0) break;
    ++m[i - 1];
  }
  return out;
}

/// Partitions of an n-set into exactly k blocks, by restricted growth strings.
inline std::uint64_t count_partitions(unsigned n, unsigned k) {
  if (n == 0) return k == 0 ? 1 : 0;
  std::uint64_t count = 0;
  std::vector<unsigned> rgs(n, 0);
  std::vector<unsigned> maxes(n, 0);
  while (true) {
    unsigned blocks = 0;
    for (auto v : rgs) blocks = std::max(blocks, v + 1);
    if (blocks == k) ++count;
    // next restricted growth string
    std::size_t i = n;
    bool done = true;
    while (i > 1) {
      --i;
      unsigned prefix_max = 0;
      for (std::size_t j = 0; j < i; ++j) prefix_max = std::max(prefix_max, rgs[j]);
      if (rgs[i] <= prefix_max) {
        ++rgs[i];
        for (std::size_t j = i + 1; j < n; ++j) rgs[j] = 0;
        done = false;
        break;
      }
    }
    if (done) break;
  }
  return count;
}

/// Number of maps from an n-set to an m-set with image of size exactly i.
inline std::vector<std::uint64_t> maps_by_image_size(unsigned n, unsigned m) {
  std::vector<std::uint64_t> out(n + 1, 0);
  std::vector<unsigned> f(n, 0);
  if (n == 0) {
    out[0] = 1;
    return out;
  }
  if (m == 0) return out;
  while (true) {
    std::set<unsigned> img(f.begin(), f.end());
    ++out[img.size()];
    std::size_t i = n;
    while (i > 0 && f[i - 1] + 1 == m) f[--i] = 0;
    if (i == 0) break;
    ++f[i - 1];
  }
  return out;
}

/// Language equality by breadth-first search over the product automaton.
inline bool product_equivalent(const rootsc::Dfa& a, const rootsc::Dfa& b) {
  std::set<std::pair<rootsc::State, rootsc::State>> seen{{a.start(), b.start()}};
  std::vector<std::pair<rootsc::State, rootsc::State>> queue{{a.start(), b.start()}};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    auto [p, q] = queue[i];
    if (a.is_final(p) != b.is_final(q)) return false;
    for (std::size_t x = 0; x < a.letter_count(); ++x) {
      const auto y = *b.letter_index(a.alphabet()[x]);
      std::pair next{a.next(p, x), b.next(q, y)};
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return true;
}

/// Myhill-Nerode class count of the reachable part, by tabulating acceptance
/// of every word of length < |d| from each reachable state.
inline std::size_t brute_state_count(const rootsc::Dfa& d) {
  const std::size_t n = d.size();
  const std::size_t k = d.letter_count();
  std::vector<rootsc::Word> words{{}};
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (words[i].size() + 1 >= n) continue;
    for (std::size_t a = 0; a < k; ++a) {
      auto w = words[i];
      w.push_back(a);
      words.push_back(std::move(w));
    }
  }
  std::set<rootsc::State> reach{d.start()};
  std::vector<rootsc::State> stack{d.start()};
  while (!stack.empty()) {
    auto q = stack.back();
    stack.pop_back();
    for (std::size_t a = 0; a < k; ++a) {
      if (reach.insert(d.next(q, a)).second) stack.push_back(d.next(q, a));
    }
  }
  std::set<std::vector<bool>> signatures;
  for (auto q : reach) {
    std::vector<bool> sig;
    for (const auto& w : words) sig.push_back(d.is_final(rootsc::run(d, q, w)));
    signatures.insert(sig);
  }
  return signatures.size();
}

inline rootsc::Dfa random_dfa(std::size_t n, std::size_t letters, std::mt19937_64& rng) {
  std::uniform_int_distribution<rootsc::State> any(0, static_cast<rootsc::State>(n - 1));
  std::vector<std::vector<rootsc::State>> table(letters, std::vector<rootsc::State>(n));
  for (auto& col : table) {
    for (auto& t : col) t = any(rng);
  }
  std::vector<rootsc::State> fin;
  std::bernoulli_distribution coin(0.5);
  for (rootsc::State q = 0; q < n; ++q) {
    if (coin(rng)) fin.push_back(q);
  }
  return rootsc::Dfa(rootsc::default_alphabet(letters), std::move(table), any(rng), std::move(fin));
}

}  // namespace oracle
