#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rootsc/transform.hpp"

namespace rootsc {

/// Zero-based state id. The text format numbers states from 1.
using State = std::uint32_t;

/// A word as a sequence of letter indices into Dfa::alphabet().
using Word = std::vector<std::size_t>;

/// Complete deterministic finite automaton. Immutable once built.
class Dfa {
 public:
  /// `table[a][q]` is the successor of q on letter a. Throws InvalidArgument
  /// on empty/duplicate letters, ragged or out-of-range tables, or bad
  /// start/final states.
  Dfa(std::vector<std::string> alphabet, std::vector<std::vector<State>> table, State start,
      std::vector<State> finals);

  /// The DFA with delta_a = maps[a], start point and final points one-based.
  static Dfa from_transformations(std::vector<std::string> alphabet,
                                  std::span<const Transformation> maps, unsigned start_point,
                                  std::span<const unsigned> final_points);

  std::size_t size() const noexcept { return final_.size(); }
  std::size_t letter_count() const noexcept { return alphabet_.size(); }
  const std::vector<std::string>& alphabet() const noexcept { return alphabet_; }
  std::optional<std::size_t> letter_index(std::string_view letter) const;

  State start() const noexcept { return start_; }
  bool is_final(State q) const { return final_[q] != 0; }
  std::vector<State> finals() const;

  State next(State q, std::size_t letter) const { return table_[letter][q]; }
  std::span<const State> column(std::size_t letter) const { return table_[letter]; }

  /// delta_a as a transformation of {1..n}; requires size() <= kMaxDegree.
  Transformation letter_transformation(std::size_t letter) const;

  /// Splits `text` into letters: on whitespace if present, otherwise one
  /// character per letter. Throws InvalidArgument on an unknown letter.
  Word word(std::string_view text) const;

  friend bool operator==(const Dfa&, const Dfa&) = default;

 private:
  std::vector<std::string> alphabet_;
  std::vector<std::vector<State>> table_;
  State start_;
  std::vector<std::uint8_t> final_;
};

// Text format:
//   states 5
//   alphabet a b
//   start 1
//   finals 1
//   trans a 2 1 4 5 3
//   trans b 2 3 4 1 2
// '#' starts a comment line; blank lines are ignored.
Dfa parse_dfa(std::string_view text);
Dfa read_dfa(std::istream& in);
Dfa load_dfa(const std::filesystem::path& path);
std::string serialize(const Dfa& d);
void save_dfa(const Dfa& d, const std::filesystem::path& path);

State run(const Dfa& d, State from, const Word& w);
bool accepts(const Dfa& d, const Word& w);

/// delta_w, composed left to right; the empty word gives the identity.
Transformation word_transformation(const Dfa& d, const Word& w);

/// Reachable states in order of first reach by shortlex-least words.
std::vector<State> reachable_states(const Dfa& d);

/// Myhill-Nerode classes over all states (reachable or not), computed by
/// Hopcroft partition refinement. Class ids are dense, numbered by first
/// occurrence in state order.
std::vector<std::uint32_t> state_partition(const Dfa& d);

/// Minimal complete DFA for L(d), in canonical numbering: state i is the
/// i-th class reached by shortlex-least words (so the start state is 0).
Dfa minimize(const Dfa& d);

/// Same language? Alphabets must agree as sets; letter order may differ.
bool equivalent(const Dfa& a, const Dfa& b);

/// Tail/loop decomposition of the path from start in a one-letter DFA.
struct UnaryShape {
  std::size_t tail_length;
  std::size_t loop_length;
  State loop_entry;
};

UnaryShape unary_structure(const Dfa& d);

}  // namespace rootsc
