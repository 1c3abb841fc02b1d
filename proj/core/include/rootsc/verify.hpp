#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rootsc {

struct CaseResult {
  std::string name;
  bool pass = false;
  std::string expected;
  std::string measured;
  double seconds = 0.0;
};

/// Outcome of one verification suite. A suite passes iff it has at least one
/// case and every case passes.
struct VerifyReport {
  std::string suite;
  std::string claim;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<CaseResult> cases;

  bool pass() const;
  std::size_t passed() const;
};

/// Schema: {"suite", "claim", "params": {...}, "cases": [{"name", "pass",
/// "expected", "measured", "seconds"}], "pass"}.
std::string to_json(const std::vector<VerifyReport>& reports);
std::string to_table(const VerifyReport& report);

// Individual suites. k, l arguments require gcd(k, l) = 1, k >= 2, l >= 3.

/// Partition of the root automaton of A_{X_{k,l}} (start 1, finals {1}) into
/// Myhill-Nerode classes: exactly C(n,2) pairs {eta, complement(eta)} with
/// rank(eta) = 2 and eta(1) unique, everything else alone. n <= 7.
VerifyReport suite_equivalence_structure(std::size_t k, std::size_t l);

/// Minimal root DFA of A_{X_{k,l}} has |U_{k,l}| - C(n,2) states, and the
/// closed form for |U_{k,l}| matches enumeration.
VerifyReport suite_min_dfa(std::size_t k, std::size_t l);

/// Root of the DFA based on a 3-element generating set of T_n has exactly
/// n^n - C(n,2) states, for each n in [min_n, max_n] (max_n <= 6).
VerifyReport suite_full_tn(std::size_t max_n, std::size_t min_n = 1);

/// Every choice of start state and final set over X_{k,l} gives a root no
/// larger than the start-1/finals-{1} choice. n <= 5.
VerifyReport suite_start_final_variation(std::size_t k, std::size_t l);

/// Unary root: tightness on {a^(n-2)} and agreement of the tail/loop
/// construction with the power construction on random unary DFAs.
VerifyReport suite_unary(std::size_t max_n, std::uint64_t seed = 0, std::size_t samples_per_n = 200);

/// Stirling recurrence identity, the function-count identity, and the
/// formula bound |U_{k,l}| <= n^n.
VerifyReport suite_counting(std::size_t max_n_identity = 60, std::size_t max_function_count = 12);

/// |U_{2,n-2}| - |U_{n-2,2}| >= C(n,2) for 7 <= n <= max_n, plus formula vs
/// enumeration of the difference at n = 5 and n = 7.
VerifyReport suite_gap(std::size_t max_n = 40, bool with_enumeration = true);

/// max over coprime splits of |U_{k,l}| >= the analytic lower bound, 7..max_n.
VerifyReport suite_lower_bound(std::size_t max_n = 30);

/// Random DFAs: power-automaton acceptance equals the w^m oracle on all words
/// up to max_word_length; L is contained in root(L); root is idempotent.
VerifyReport suite_soundness(std::size_t samples = 500, std::uint64_t seed = 0,
                             std::size_t max_states = 6, std::size_t max_letters = 3,
                             std::size_t max_word_length = 8);

/// A monoid in T_n with more than n^n - C(n,2) elements is T_n: exhaustive
/// over all submonoids for n <= 3, sampled generator sets for n = 4.
VerifyReport suite_monoid_gap(std::uint64_t seed = 0, std::size_t samples_n4 = 3000);

/// Exhaustive largest two-generated submonoid for 1 <= n <= max_n (<= 4).
VerifyReport suite_largest_two_generated(std::size_t max_n = 4);

struct SuiteOptions {
  std::optional<std::size_t> max_n;
  std::optional<std::size_t> k;
  std::optional<std::size_t> l;
  std::uint64_t seed = 0;
};

/// Names accepted by run_suite, "all" last.
const std::vector<std::string>& suite_names();

/// Runs a named suite with defaults filled in. Throws InvalidArgument for an
/// unknown name or out-of-budget parameters.
std::vector<VerifyReport> run_suite(std::string_view name, const SuiteOptions& options);

}  // namespace rootsc
