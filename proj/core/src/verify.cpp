#include "rootsc/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <random>
#include <unordered_map>
#include <sstream>

#include <json.hpp>

#include "rootsc/counting.hpp"
#include "rootsc/dfa.hpp"
#include "rootsc/errors.hpp"
#include "rootsc/monoid.hpp"
#include "rootsc/root.hpp"

namespace rootsc {

bool VerifyReport::pass() const {
  return !cases.empty() &&
         std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass; });
}

std::size_t VerifyReport::passed() const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass; }));
}

std::string to_json(const std::vector<VerifyReport>& reports) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["claim"] = r.claim;
    j["params"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) j["params"][k] = v;
    j["cases"] = nlohmann::ordered_json::array();
    for (const auto& c : r.cases) {
      j["cases"].push_back({{"name", c.name},
                            {"pass", c.pass},
                            {"expected", c.expected},
                            {"measured", c.measured},
                            {"seconds", c.seconds}});
    }
    j["pass"] = r.pass();
    out.push_back(std::move(j));
  }
  return out.dump(2);
}

std::string to_table(const VerifyReport& r) {
  std::ostringstream os;
  os << "suite " << r.suite << ": " << r.claim << '\n';
  if (!r.params.empty()) {
    os << "  params:";
    for (const auto& [k, v] : r.params) os << ' ' << k << '=' << v;
    os << '\n';
  }
  std::size_t width = 4;
  for (const auto& c : r.cases) width = std::max(width, c.name.size());
  for (const auto& c : r.cases) {
    os << "  " << (c.pass ? "PASS" : "FAIL") << "  " << c.name
       << std::string(width - c.name.size(), ' ') << "  expected=" << c.expected
       << "  measured=" << c.measured;
    std::ostringstream t;
    t.precision(3);
    t << std::fixed << c.seconds;
    os << "  (" << t.str() << "s)\n";
  }
  os << "  result: " << (r.pass() ? "PASS" : "FAIL") << " (" << r.passed() << '/' << r.cases.size()
     << ")\n";
  return os.str();
}

namespace {

using Clock = std::chrono::steady_clock;

template <class Fn>
CaseResult timed(std::string name, Fn&& fn) {
  const auto t0 = Clock::now();
  CaseResult c = fn();
  c.name = std::move(name);
  c.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return c;
}

template <class T>
std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

CaseResult compare(const auto& expected, const auto& measured) {
  return CaseResult{{}, expected == measured, str(expected), str(measured), 0.0};
}

std::size_t choose2(std::size_t n) { return n * (n - 1) / 2; }

void require_pair(std::size_t k, std::size_t l, std::size_t max_n) {
  if (k < 2 || l < 3 || std::gcd(k, l) != 1) {
    throw InvalidArgument("suite needs coprime k >= 2, l >= 3; got " + std::to_string(k) + "," +
                          std::to_string(l));
  }
  if (k + l > max_n) {
    throw InvalidArgument("k + l = " + std::to_string(k + l) + " exceeds the suite budget of " +
                          std::to_string(max_n));
  }
}

Dfa ukl_dfa(std::size_t k, std::size_t l) {
  const auto g = ukl_generators(k, l);
  const Transformation gens[] = {g.alpha, g.beta};
  return based_dfa(gens);
}

}  // namespace

// ---------------------------------------------------------------------------

VerifyReport suite_equivalence_structure(std::size_t k, std::size_t l) {
  require_pair(k, l, 7);
  const std::size_t n = k + l;
  VerifyReport rep{"equivalence",
                   "root automaton states merge exactly in C(n,2) pairs {eta, complement(eta)} "
                   "with rank 2 and eta(1) unique; all other states are alone",
                   {{"k", std::to_string(k)}, {"l", std::to_string(l)}},
                   {}};

  const auto t0 = Clock::now();
  const auto ra = root_automaton(ukl_dfa(k, l));
  const auto cls = state_partition(ra.dfa);
  std::uint32_t classes = 0;
  for (auto c : cls) classes = std::max(classes, c + 1);
  std::vector<std::vector<std::size_t>> members(classes);
  for (std::size_t s = 0; s < cls.size(); ++s) members[cls[s]].push_back(s);
  const double build = std::chrono::duration<double>(Clock::now() - t0).count();

  std::size_t pairs = 0, largest = 0;
  std::size_t bad_pairs = 0;
  std::size_t low_rank_merged = 0, high_rank_merged = 0;
  for (const auto& m : members) {
    largest = std::max(largest, m.size());
    if (m.size() == 2) {
      ++pairs;
      const auto& eta = ra.element_of[m[0]];
      const auto& theta = ra.element_of[m[1]];
      const bool ok = rank(eta) == 2 && rank(theta) == 2 && complement(eta) == theta &&
                      is_unique(eta, eta(1)) && is_unique(theta, theta(1));
      if (!ok) ++bad_pairs;
    }
    if (m.size() > 1) {
      for (auto s : m) {
        const auto r = rank(ra.element_of[s]);
        if (r == 1) ++low_rank_merged;
        if (r >= 3) ++high_rank_merged;
      }
    }
  }

  // Forward direction: every rank-2 element with eta(1) unique shares its
  // class with its complement.
  std::unordered_map<Transformation, std::size_t> index;
  for (std::size_t s = 0; s < ra.element_of.size(); ++s) index.emplace(ra.element_of[s], s);
  std::size_t candidates = 0, joined = 0;
  for (std::size_t s = 0; s < ra.element_of.size(); ++s) {
    const auto& eta = ra.element_of[s];
    if (rank(eta) != 2 || !is_unique(eta, eta(1))) continue;
    ++candidates;
    auto it = index.find(complement(eta));
    if (it != index.end() && cls[it->second] == cls[s]) ++joined;
  }

  const std::string ns = std::to_string(n);
  auto add = [&](std::string name, CaseResult c) {
    c.name = std::move(name);
    c.seconds = build;
    rep.cases.push_back(std::move(c));
  };
  add("two-element classes", compare(choose2(n), pairs));
  add("largest class size", compare(std::size_t{2}, largest));
  add("pairs not of complement form", compare(std::size_t{0}, bad_pairs));
  add("rank-1 states in a larger class", compare(std::size_t{0}, low_rank_merged));
  add("rank>=3 states in a larger class", compare(std::size_t{0}, high_rank_merged));
  add("rank-2, eta(1)-unique states merged with complement",
      compare(str(2 * choose2(n)) + "/" + str(2 * choose2(n)), str(joined) + "/" + str(candidates)));
  return rep;
}

VerifyReport suite_min_dfa(std::size_t k, std::size_t l) {
  require_pair(k, l, 7);
  const std::size_t n = k + l;
  VerifyReport rep{"min-dfa",
                   "minimal DFA for root(L(A_{k,l})) has |U_{k,l}| - C(n,2) states",
                   {{"k", std::to_string(k)}, {"l", std::to_string(l)}},
                   {}};
  const auto formula = ukl_size_formula(static_cast<std::int64_t>(k), static_cast<std::int64_t>(l));
  const auto dfa = ukl_dfa(k, l);
  std::size_t monoid_size = 0;
  rep.cases.push_back(timed("closure size = formula", [&] {
    monoid_size = transformation_monoid(dfa).size();
    return compare(formula, BigCount(monoid_size));
  }));
  rep.cases.push_back(timed("root state complexity", [&] {
    return compare(formula - BigCount(choose2(n)), BigCount(root_state_complexity(dfa)));
  }));
  return rep;
}

VerifyReport suite_full_tn(std::size_t max_n, std::size_t min_n) {
  if (min_n < 1 || max_n > 6 || min_n > max_n) {
    throw InvalidArgument("full-tn supports 1 <= n <= 6");
  }
  VerifyReport rep{"full-tn",
                   "root of the DFA based on a generating set of T_n has n^n - C(n,2) states",
                   {{"min-n", std::to_string(min_n)}, {"max-n", std::to_string(max_n)}},
                   {}};
  for (std::size_t n = min_n; n <= max_n; ++n) {
    rep.cases.push_back(timed("n=" + std::to_string(n), [&] {
      const auto gens = tn_generators(n);
      const auto ra = root_automaton(based_dfa(gens));
      const std::size_t full = static_cast<std::size_t>(ipow(n, n));
      const std::size_t sc = minimize(ra.dfa).size();
      CaseResult c = compare(str(full - choose2(n)) + " (|M|=" + str(full) + ")",
                             str(sc) + " (|M|=" + str(ra.element_of.size()) + ")");
      return c;
    }));
  }
  return rep;
}

VerifyReport suite_start_final_variation(std::size_t k, std::size_t l) {
  require_pair(k, l, 5);
  const std::size_t n = k + l;
  VerifyReport rep{"start-final",
                   "no start/final assignment over X_{k,l} beats start 1, finals {1}",
                   {{"k", std::to_string(k)}, {"l", std::to_string(l)}},
                   {}};
  const auto g = ukl_generators(k, l);
  const Transformation gens[] = {g.alpha, g.beta};
  const std::size_t base = root_state_complexity(based_dfa(gens));

  rep.cases.push_back(timed("z0=1 G={1} (reference)", [&] {
    const unsigned one[] = {1};
    return compare(base, root_state_complexity(based_dfa(gens, 1, one)));
  }));
  rep.cases.push_back(timed("G={} gives 1 state", [&] {
    return compare(std::size_t{1}, root_state_complexity(based_dfa(gens, 1, {})));
  }));
  for (unsigned z0 = 1; z0 <= n; ++z0) {
    rep.cases.push_back(timed("z0=" + std::to_string(z0) + " all final sets", [&] {
      std::size_t worst = 0;
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<unsigned> fin;
        for (unsigned p = 1; p <= n; ++p) {
          if (mask >> (p - 1) & 1u) fin.push_back(p);
        }
        worst = std::max(worst, root_state_complexity(based_dfa(gens, z0, fin)));
      }
      return CaseResult{{}, worst <= base, "<= " + str(base), "max " + str(worst), 0.0};
    }));
  }
  return rep;
}

namespace {

// {a^(n-2)} as an n-state DFA: a chain 0..n-2 and a sink n-1.
Dfa single_word_dfa(std::size_t n) {
  std::vector<State> col(n);
  for (std::size_t i = 0; i < n; ++i) col[i] = static_cast<State>(i + 1 < n ? i + 1 : n - 1);
  return Dfa({"a"}, {std::move(col)}, 0, {static_cast<State>(n - 2)});
}

Dfa random_unary_dfa(std::size_t n, std::mt19937_64& rng) {
  const std::size_t j = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  const std::size_t l = std::uniform_int_distribution<std::size_t>(1, n - j)(rng);
  std::vector<State> names(n);
  std::iota(names.begin(), names.end(), State{0});
  std::shuffle(names.begin(), names.end(), rng);

  std::vector<State> col(n);
  for (std::size_t i = 0; i < j + l; ++i) col[names[i]] = names[i + 1 < j + l ? i + 1 : j];
  std::uniform_int_distribution<State> any(0, static_cast<State>(n - 1));
  for (std::size_t i = j + l; i < n; ++i) col[names[i]] = any(rng);
  std::vector<State> fin;
  std::bernoulli_distribution coin(0.5);
  for (State q = 0; q < n; ++q) {
    if (coin(rng)) fin.push_back(q);
  }
  return Dfa({"a"}, {std::move(col)}, names[0], std::move(fin));
}

Dfa random_dfa(std::size_t n, std::size_t letters, std::mt19937_64& rng) {
  std::uniform_int_distribution<State> any(0, static_cast<State>(n - 1));
  std::vector<std::vector<State>> table(letters, std::vector<State>(n));
  for (auto& col : table) {
    for (auto& t : col) t = any(rng);
  }
  std::vector<State> fin;
  std::bernoulli_distribution coin(0.5);
  for (State q = 0; q < n; ++q) {
    if (coin(rng)) fin.push_back(q);
  }
  return Dfa(default_alphabet(letters), std::move(table), any(rng), std::move(fin));
}

}  // namespace

VerifyReport suite_unary(std::size_t max_n, std::uint64_t seed, std::size_t samples_per_n) {
  if (max_n < 2 || max_n > 14) throw InvalidArgument("unary supports 2 <= max-n <= 14");
  VerifyReport rep{"unary",
                   "unary root never needs more states than L; {a^(n-2)} is tight",
                   {{"max-n", std::to_string(max_n)},
                    {"seed", std::to_string(seed)},
                    {"samples", std::to_string(samples_per_n)}},
                   {}};
  for (std::size_t n = 2; n <= max_n; ++n) {
    rep.cases.push_back(timed("tight n=" + std::to_string(n), [&] {
      const auto d = single_word_dfa(n);
      const auto sc = minimize(d).size();
      const auto sc_root = minimize(unary_root(d)).size();
      const auto sc_generic = root_state_complexity(d);
      return compare("sc(L)=" + str(n) + " sc(root)=" + str(n) + " generic=" + str(n),
                     "sc(L)=" + str(sc) + " sc(root)=" + str(sc_root) + " generic=" + str(sc_generic));
    }));
  }
  std::mt19937_64 rng(seed);
  for (std::size_t n = 1; n <= max_n; ++n) {
    rep.cases.push_back(timed("random n=" + std::to_string(n), [&] {
      std::size_t disagree = 0, larger = 0;
      for (std::size_t s = 0; s < samples_per_n; ++s) {
        const auto d = random_unary_dfa(n, rng);
        const auto fast = unary_root(d);
        if (!equivalent(fast, root_automaton(d).dfa)) ++disagree;
        if (minimize(fast).size() > minimize(d).size()) ++larger;
      }
      return compare(std::string("disagree=0 larger=0"),
                     "disagree=" + str(disagree) + " larger=" + str(larger));
    }));
  }
  return rep;
}

VerifyReport suite_counting(std::size_t max_n_identity, std::size_t max_function_count) {
  if (max_n_identity > 100) throw InvalidArgument("counting supports n <= 100");
  VerifyReport rep{"counting",
                   "Stirling identities and closed-form sizes are consistent",
                   {{"identity-max-n", std::to_string(max_n_identity)},
                    {"function-count-max", std::to_string(max_function_count)}},
                   {}};
  // The (i-1) coefficient is the form used to bound the U_{k,l} gap; the
  // two-step recurrence actually gives i^2 there, so the (i-1) form only
  // holds as a lower bound (and as an equality when S(n-2,i) = 0).
  struct Variant {
    const char* name;
    std::int64_t (*coef)(std::int64_t);
    bool equality;
  };
  const Variant variants[] = {
      {"S(n,i) = S(n-2,i-2) + (2i-1)S(n-2,i-1) + (i-1)S(n-2,i)",
       [](std::int64_t i) { return i - 1; }, true},
      {"S(n,i) = S(n-2,i-2) + (2i-1)S(n-2,i-1) + i^2 S(n-2,i)",
       [](std::int64_t i) { return i * i; }, true},
      {"S(n,i) >= S(n-2,i-2) + (2i-1)S(n-2,i-1) + (i-1)S(n-2,i)",
       [](std::int64_t i) { return i - 1; }, false},
  };
  for (const auto& v : variants) {
    rep.cases.push_back(timed(v.name, [&] {
      std::size_t failures = 0, checked = 0;
      std::string first;
      for (std::int64_t n = 2; n <= static_cast<std::int64_t>(max_n_identity); ++n) {
        for (std::int64_t i = 2; i <= n; ++i) {
          const BigCount lhs = stirling2(n, i);
          const BigCount rhs = stirling2(n - 2, i - 2) + BigCount(2 * i - 1) * stirling2(n - 2, i - 1) +
                               BigCount(v.coef(i)) * stirling2(n - 2, i);
          ++checked;
          if (v.equality ? lhs != rhs : lhs < rhs) {
            if (failures++ == 0) {
              first = " (first at n=" + str(n) + " i=" + str(i) + ": " + str(lhs) + " vs " + str(rhs) + ")";
            }
          }
        }
      }
      return CaseResult{{}, failures == 0, "0 failures", str(failures) + " failures of " + str(checked) + first, 0.0};
    }));
  }
  rep.cases.push_back(timed("sum_i C(m,i) i! S(n,i) = m^n", [&] {
    std::size_t failures = 0;
    const auto top = static_cast<std::int64_t>(max_function_count);
    for (std::int64_t n = 0; n <= top; ++n) {
      for (std::int64_t m = 0; m <= top; ++m) {
        BigCount sum = 0;
        for (std::int64_t i = 0; i <= n; ++i) sum += binomial(m, i) * factorial(i) * stirling2(n, i);
        if (sum != ipow(m, n)) ++failures;
      }
    }
    return compare(std::string("0 failures"), str(failures) + " failures");
  }));
  rep.cases.push_back(timed("|U_{k,l}| <= n^n for n <= 40", [&] {
    std::size_t failures = 0;
    for (std::int64_t n = 5; n <= 40; ++n) {
      for (std::int64_t k = 2; n - k >= 2; ++k) {
        if (std::gcd(k, n - k) != 1) continue;
        const auto s = ukl_size_formula(k, n - k);
        if (s > ipow(n, n) || s < 0) ++failures;
      }
    }
    return compare(std::string("0 failures"), str(failures) + " failures");
  }));
  return rep;
}

VerifyReport suite_gap(std::size_t max_n, bool with_enumeration) {
  if (max_n < 7 || max_n > 100) throw InvalidArgument("gap supports 7 <= max-n <= 100");
  VerifyReport rep{"gap",
                   "|U_{2,n-2}| - |U_{n-2,2}| >= C(n,2) for n >= 7",
                   {{"max-n", std::to_string(max_n)}},
                   {}};
  for (std::size_t n = 7; n <= max_n; ++n) {
    rep.cases.push_back(timed("n=" + std::to_string(n), [&] {
      const auto gap = ukl_gap(static_cast<std::int64_t>(n));
      const auto need = binomial(static_cast<std::int64_t>(n), 2);
      return CaseResult{{}, gap >= need, ">= " + str(need), str(gap), 0.0};
    }));
  }
  if (with_enumeration) {
    for (std::size_t n : {5u, 7u}) {
      rep.cases.push_back(timed("enumerated n=" + std::to_string(n), [&] {
        auto size_of = [](std::size_t k, std::size_t l) {
          const auto g = ukl_generators(k, l);
          const Transformation gens[] = {g.alpha, g.beta};
          return BigCount(closure(gens).size());
        };
        return compare(ukl_gap(static_cast<std::int64_t>(n)), size_of(2, n - 2) - size_of(n - 2, 2));
      }));
    }
  }
  return rep;
}

VerifyReport suite_lower_bound(std::size_t max_n) {
  if (max_n < 7 || max_n > 30) throw InvalidArgument("lower-bound supports 7 <= max-n <= 30");
  VerifyReport rep{"lower-bound",
                   "some coprime split has |U_{k,l}| >= n^n (1 - sqrt2 (2/e)^(n/2) e^(1/12) - sqrt(8/n) e^(1/12))",
                   {{"max-n", std::to_string(max_n)}},
                   {}};
  for (std::size_t n = 7; n <= max_n; ++n) {
    rep.cases.push_back(timed("n=" + std::to_string(n), [&] {
      const auto best = max_ukl_size(static_cast<std::int64_t>(n));
      const double bound = hk_lower_bound(static_cast<std::int64_t>(n));
      const bool ok = bound <= 0.0 || best.convert_to<double>() >= bound;
      std::ostringstream b;
      b.precision(6);
      b << ">= " << bound;
      return CaseResult{{}, ok, b.str(), str(best), 0.0};
    }));
  }
  rep.cases.push_back(timed("bracket increasing in n (7..200)", [&] {
    std::size_t drops = 0;
    for (std::int64_t n = 8; n <= 200; ++n) {
      if (hk_bracket(n) <= hk_bracket(n - 1) || hk_bracket(n) >= 1.0) ++drops;
    }
    return compare(std::string("0 violations"), str(drops) + " violations");
  }));
  return rep;
}

VerifyReport suite_soundness(std::size_t samples, std::uint64_t seed, std::size_t max_states,
                             std::size_t max_letters, std::size_t max_word_length) {
  if (max_states < 1 || max_states > 6 || max_letters < 1 || max_letters > 3 || max_word_length > 10) {
    throw InvalidArgument("soundness supports states <= 6, letters <= 3, word length <= 10");
  }
  VerifyReport rep{"soundness",
                   "power automaton accepts exactly { w : w^m in L for some m >= 1 }",
                   {{"samples", std::to_string(samples)},
                    {"seed", std::to_string(seed)},
                    {"max-states", std::to_string(max_states)},
                    {"max-letters", std::to_string(max_letters)},
                    {"max-word-length", std::to_string(max_word_length)}},
                   {}};

  std::mt19937_64 rng(seed);
  std::size_t words = 0, mismatches = 0, containment = 0, idem_checked = 0, idem_fail = 0;
  const auto t0 = Clock::now();
  for (std::size_t s = 0; s < samples; ++s) {
    const auto n = std::uniform_int_distribution<std::size_t>(1, max_states)(rng);
    const auto k = std::uniform_int_distribution<std::size_t>(1, max_letters)(rng);
    const auto d = random_dfa(n, k, rng);
    const auto ra = root_automaton(d);

    // Every word up to max_word_length, in shortlex order.
    Word w;
    while (w.size() <= max_word_length) {
      ++words;
      const bool got = accepts(ra.dfa, w);
      if (got != root_member_oracle(d, w)) ++mismatches;
      if (accepts(d, w) && !got) ++containment;
      // Next word.
      std::size_t i = w.size();
      while (i > 0 && w[i - 1] + 1 == k) w[--i] = 0;
      if (i == 0) {
        w.assign(w.size() + 1, 0);
      } else {
        ++w[i - 1];
      }
    }

    const auto min_root = minimize(ra.dfa);
    if (min_root.size() <= kMaxDegree) {
      ++idem_checked;
      if (!equivalent(minimize(root_automaton(min_root).dfa), min_root)) ++idem_fail;
    }
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  rep.cases.push_back({"acceptance = w^m oracle", mismatches == 0, "0 mismatches",
                       str(mismatches) + " mismatches over " + str(words) + " words", secs});
  rep.cases.push_back({"L subset of root(L)", containment == 0, "0 violations",
                       str(containment) + " violations", 0.0});
  rep.cases.push_back({"root(root(L)) = root(L)", idem_fail == 0 && idem_checked > 0,
                       "0 failures", str(idem_fail) + " failures over " + str(idem_checked) + " DFAs",
                       0.0});
  return rep;
}

VerifyReport suite_monoid_gap(std::uint64_t seed, std::size_t samples_n4) {
  VerifyReport rep{"monoid-gap",
                   "a submonoid of T_n with more than n^n - C(n,2) elements is T_n",
                   {{"seed", std::to_string(seed)}, {"samples-n4", std::to_string(samples_n4)}},
                   {}};
  for (std::size_t n = 1; n <= 3; ++n) {
    rep.cases.push_back(timed("n=" + std::to_string(n) + " all submonoids", [&] {
      const auto subs = all_submonoids(n);
      const std::size_t full = static_cast<std::size_t>(ipow(n, n));
      std::size_t above = 0, bad = 0;
      for (const auto& m : subs) {
        if (m.size() > full - choose2(n)) {
          ++above;
          if (m.size() != full) ++bad;
        }
      }
      return CaseResult{{}, bad == 0, "0 proper above threshold",
                        str(bad) + " proper of " + str(above) + " above, " + str(subs.size()) +
                            " submonoids",
                        0.0};
    }));
  }
  rep.cases.push_back(timed("n=4 sampled generator sets", [&] {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<unsigned> point(1, 4);
    std::uniform_int_distribution<std::size_t> count(1, 5);
    std::size_t above = 0, bad = 0;
    for (std::size_t s = 0; s < samples_n4; ++s) {
      std::vector<Transformation> gens;
      const auto c = count(rng);
      for (std::size_t i = 0; i < c; ++i) {
        gens.push_back(Transformation{point(rng), point(rng), point(rng), point(rng)});
      }
      const auto size = closure(gens).size();
      if (size > 256 - 6) {
        ++above;
        if (size != 256) ++bad;
      }
    }
    return CaseResult{{}, bad == 0 && above >= 1, "0 proper above threshold",
                      str(bad) + " proper of " + str(above) + " above", 0.0};
  }));
  return rep;
}

VerifyReport suite_largest_two_generated(std::size_t max_n) {
  if (max_n < 1 || max_n > 4) throw InvalidArgument("largest2 supports 1 <= max-n <= 4");
  VerifyReport rep{"largest2",
                   "largest two-generated submonoid of T_n; proper for n >= 3",
                   {{"max-n", std::to_string(max_n)}},
                   {}};
  for (std::size_t n = 1; n <= max_n; ++n) {
    rep.cases.push_back(timed("n=" + std::to_string(n), [&] {
      const auto best = largest_two_generated(n, max_n);
      const Transformation gens[] = {best.first, best.second};
      const std::size_t witness = closure(gens).size();
      const std::size_t full = static_cast<std::size_t>(ipow(n, n));
      const bool ok = witness == best.size && (n < 3 ? best.size == full : best.size < full);
      return CaseResult{{}, ok, n < 3 ? "= " + str(full) : "< " + str(full),
                        str(best.size) + " via " + str(best.first) + "," + str(best.second), 0.0};
    }));
  }
  return rep;
}

// ---------------------------------------------------------------------------

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "equivalence", "min-dfa", "full-tn",    "start-final", "unary",    "counting",
      "gap",         "lower-bound", "soundness", "monoid-gap", "largest2", "all"};
  return names;
}

namespace {

std::vector<std::pair<std::size_t, std::size_t>> pairs_up_to(const SuiteOptions& o, std::size_t max_n) {
  if (o.k || o.l) {
    if (!o.k || !o.l) throw InvalidArgument("--k and --l must be given together");
    return {{*o.k, *o.l}};
  }
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t n = 5; n <= max_n; ++n) {
    for (std::size_t k = 2; n - k >= 3; ++k) {
      if (std::gcd(k, n - k) == 1) out.emplace_back(k, n - k);
    }
  }
  return out;
}

}  // namespace

std::vector<VerifyReport> run_suite(std::string_view name, const SuiteOptions& o) {
  std::vector<VerifyReport> out;
  if (name == "equivalence" || name == "min-dfa") {
    for (auto [k, l] : pairs_up_to(o, o.max_n.value_or(7))) {
      out.push_back(name == "equivalence" ? suite_equivalence_structure(k, l) : suite_min_dfa(k, l));
    }
  } else if (name == "full-tn") {
    out.push_back(suite_full_tn(o.max_n.value_or(6)));
  } else if (name == "start-final") {
    out.push_back(suite_start_final_variation(o.k.value_or(2), o.l.value_or(3)));
  } else if (name == "unary") {
    out.push_back(suite_unary(o.max_n.value_or(12), o.seed));
  } else if (name == "counting") {
    out.push_back(suite_counting(o.max_n.value_or(60)));
  } else if (name == "gap") {
    out.push_back(suite_gap(o.max_n.value_or(40)));
  } else if (name == "lower-bound") {
    out.push_back(suite_lower_bound(o.max_n.value_or(30)));
  } else if (name == "soundness") {
    out.push_back(suite_soundness(500, o.seed, o.max_n.value_or(6)));
  } else if (name == "monoid-gap") {
    out.push_back(suite_monoid_gap(o.seed));
  } else if (name == "largest2") {
    out.push_back(suite_largest_two_generated(o.max_n.value_or(4)));
  } else if (name == "all") {
    for (const auto& s : suite_names()) {
      if (s == "all") continue;
      SuiteOptions d;
      d.seed = o.seed;
      auto part = run_suite(s, d);
      out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
  } else {
    throw InvalidArgument("unknown suite '" + std::string(name) + "'");
  }
  return out;
}

}  // namespace rootsc
