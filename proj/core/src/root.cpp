#include "rootsc/root.hpp"

#include <numeric>

#include "rootsc/errors.hpp"

namespace rootsc {

namespace {

bool orbit_hits(std::span<const std::uint8_t> f, std::size_t q0, const std::vector<std::uint8_t>& fin) {
  // A walk of degree + 1 steps is guaranteed to revisit a state.
  std::size_t q = q0;
  for (std::size_t step = 0; step < f.size(); ++step) {
    q = f[q];
    if (fin[q]) return true;
  }
  return false;
}

std::vector<std::uint8_t> final_mask(std::size_t n, std::span<const unsigned> final_points) {
  std::vector<std::uint8_t> fin(n, 0);
  for (unsigned p : final_points) {
    if (p < 1 || p > n) throw InvalidArgument("final point out of range");
    fin[p - 1] = 1;
  }
  return fin;
}

}  // namespace

bool accepting_transformation(const Transformation& f, unsigned start_point,
                              std::span<const unsigned> final_points) {
  if (start_point < 1 || start_point > f.degree()) throw InvalidArgument("start point out of range");
  return orbit_hits(f.raw(), start_point - 1, final_mask(f.degree(), final_points));
}

RootAutomaton root_automaton(const Dfa& d, std::size_t cap) {
  std::vector<Transformation> letters;
  for (std::size_t a = 0; a < d.letter_count(); ++a) letters.push_back(d.letter_transformation(a));
  auto ex = explore(letters, cap);

  std::vector<std::uint8_t> fin(d.size(), 0);
  for (State q : d.finals()) fin[q] = 1;
  std::vector<State> finals;
  for (std::size_t i = 0; i < ex.elements.size(); ++i) {
    if (orbit_hits(ex.elements[i].raw(), d.start(), fin)) finals.push_back(static_cast<State>(i));
  }
  Dfa dfa(d.alphabet(), std::move(ex.right), 0, std::move(finals));
  return RootAutomaton{std::move(dfa), std::move(ex.elements), d};
}

bool root_member_oracle(const Dfa& d, const Word& w) {
  State q = d.start();
  for (std::size_t m = 1; m <= d.size(); ++m) {
    q = run(d, q, w);
    if (d.is_final(q)) return true;
  }
  return false;
}

Dfa unary_root(const Dfa& d) {
  const auto shape = unary_structure(d);
  const std::size_t j = shape.tail_length;
  const std::size_t l = shape.loop_length;
  const std::size_t total = j + l;

  std::vector<State> path(total);
  path[0] = d.start();
  for (std::size_t i = 1; i < total; ++i) path[i] = d.next(path[i - 1], 0);

  std::vector<bool> fin(total, false);
  fin[0] = d.is_final(path[0]);  // only the empty word has the empty word as a power

  // Accepted tail lengths t mark their divisors, all of which lie in the tail.
  for (std::size_t t = 1; t < j; ++t) {
    if (!d.is_final(path[t])) continue;
    for (std::size_t s = 1; s <= t; ++s) {
      if (t % s == 0) fin[s] = true;
    }
  }
  // A final loop state at length b accepts every b + m*l; a length s divides
  // one of those iff gcd(l, s mod l) divides b.
  for (std::size_t b = j; b < total; ++b) {
    if (!d.is_final(path[b])) continue;
    for (std::size_t s = 1; s < total; ++s) {
      if (b % std::gcd(l, s % l) == 0) fin[s] = true;
    }
  }

  std::vector<State> col(total);
  std::vector<State> finals;
  for (std::size_t i = 0; i < total; ++i) {
    col[i] = static_cast<State>(i + 1 < total ? i + 1 : j);
    if (fin[i]) finals.push_back(static_cast<State>(i));
  }
  return Dfa(d.alphabet(), {std::move(col)}, 0, std::move(finals));
}

std::size_t root_state_complexity(const Dfa& d, std::size_t cap) {
  return minimize(root_automaton(d, cap).dfa).size();
}

}  // namespace rootsc
