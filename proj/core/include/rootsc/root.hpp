#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rootsc/dfa.hpp"
#include "rootsc/monoid.hpp"
#include "rootsc/transform.hpp"

namespace rootsc {

/// True iff some iterate f^m(q0), m >= 1, is final. Points are one-based.
bool accepting_transformation(const Transformation& f, unsigned start_point,
                              std::span<const unsigned> final_points);

/// Power automaton for root(L(origin)) = { w : w^m in L(origin) for some m >= 1 }.
///
/// States are the elements of the transformation monoid of `origin`, in
/// breadth-first discovery order; state 0 is the identity (the empty word).
/// Reading letter a in state f moves to compose(f, delta_a), and f is final
/// iff its orbit from origin's start eventually hits a final state.
struct RootAutomaton {
  Dfa dfa;
  std::vector<Transformation> element_of;
  Dfa origin;
};

RootAutomaton root_automaton(const Dfa& d, std::size_t cap = kDefaultElementCap);

/// Direct membership test: accepts(d, w^m) for some 1 <= m <= |d|. The
/// orbit of the start state under delta_w repeats within |d| steps, so the
/// cutoff loses nothing.
bool root_member_oracle(const Dfa& d, const Word& w);

/// root(L) for a one-letter DFA without the power construction: the
/// reachable tail/loop path of d with its final states recomputed from
/// divisibility of accepted lengths. State i of the result is reached by a^i.
Dfa unary_root(const Dfa& d);

/// Number of states of the minimal DFA for root(L(d)).
std::size_t root_state_complexity(const Dfa& d, std::size_t cap = kDefaultElementCap);

}  // namespace rootsc
