#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "rootsc/dfa.hpp"
#include "rootsc/transform.hpp"

namespace rootsc {

inline constexpr std::size_t kDefaultElementCap = 2'000'000;

/// Result of a breadth-first exploration of the monoid generated by `gens`.
///
/// `elements[0]` is the identity; the rest appear in discovery order.
/// `right[g][i]` is the index of compose(elements[i], gens[g]), i.e. the right
/// Cayley graph, which is exactly the transition table of the power automaton.
struct Exploration {
  std::vector<Transformation> elements;
  std::vector<std::vector<std::uint32_t>> right;
};

/// Throws BudgetExceeded once more than `cap` elements are discovered and
/// InvalidArgument on empty input or mixed degrees.
Exploration explore(std::span<const Transformation> gens, std::size_t cap = kDefaultElementCap);

/// A finite transformation monoid: identity plus every product of generators.
/// Elements are kept sorted lexicographically.
class TransMonoid {
 public:
  TransMonoid(std::size_t degree, std::vector<Transformation> generators,
              std::vector<Transformation> sorted_elements);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<Transformation>& elements() const noexcept { return elements_; }
  const std::vector<Transformation>& generators() const noexcept { return generators_; }

  bool contains(const Transformation& t) const;
  /// Position in the sorted element list.
  std::optional<std::size_t> index_of(const Transformation& t) const;

  /// Element count per rank; entry r counts elements of rank r (entry 0 unused).
  std::vector<std::size_t> rank_histogram() const;

 private:
  std::size_t degree_;
  std::vector<Transformation> generators_;
  std::vector<Transformation> elements_;
};

TransMonoid closure(std::span<const Transformation> gens, std::size_t cap = kDefaultElementCap);

/// Closure of the letter maps of `d`.
TransMonoid transformation_monoid(const Dfa& d, std::size_t cap = kDefaultElementCap);

/// One sorted map per line.
void dump(const TransMonoid& m, std::ostream& os);

/// A generating set of T_n of size min(n, 3): for n >= 3 the transposition
/// (1 2), the n-cycle (1 2 ... n) and the map n -> 1 fixing everything else.
std::vector<Transformation> tn_generators(std::size_t n);

struct UklGenerators {
  Transformation alpha;
  Transformation beta;
};

/// alpha = (1..k)(k+1..n); beta(i) = pi2(i) for i < n and beta(n) = pi2(1),
/// where pi2 is the lexicographically least permutation of {1..n-1} that
/// together with (1..k) generates the symmetric group. Requires k, l >= 2
/// and gcd(k, l) = 1. Results are cached.
UklGenerators ukl_generators(std::size_t k, std::size_t l);

/// Membership in U_{k,l}: a power of alpha, or a map that merges some i <= k
/// with some j > k and misses some point m > k.
bool ukl_member(const Transformation& g, std::size_t k, std::size_t l);

/// Letters "a", "b", ... for the first `count` positions (then "x26", ...).
std::vector<std::string> default_alphabet(std::size_t count);

/// The DFA based on `gens`: letter i acts as gens[i]. Start and finals are
/// one-based points.
Dfa based_dfa(std::span<const Transformation> gens, unsigned start_point,
              std::span<const unsigned> final_points);

/// based_dfa with start 1 and finals {1}.
Dfa based_dfa(std::span<const Transformation> gens);

struct LargestTwoGenerated {
  std::size_t size;
  Transformation first;
  Transformation second;
};

/// Exhaustive search over unordered generator pairs of T_n for the largest
/// two-generated submonoid. Refuses (BudgetExceeded) when n > max_n.
LargestTwoGenerated largest_two_generated(std::size_t n, std::size_t max_n = 4);

/// Every submonoid of T_n (n <= 3), each as a sorted element list. Found by
/// repeatedly adjoining one element to known submonoids, starting from {id}.
std::vector<std::vector<Transformation>> all_submonoids(std::size_t n);

}  // namespace rootsc
