// Acceptance runner: one PASS/FAIL line per criterion.
//
//   rootsc_acceptance          run every criterion
//   rootsc_acceptance 3 5      run only criteria 3 and 5
//
// Exit status is 0 only if every selected criterion passes.

#include <chrono>
#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "rootsc/root.hpp"
#include "rootsc/verify.hpp"

using namespace rootsc;

namespace {

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<std::vector<VerifyReport>()> run;
  // Case names that decide the verdict; empty means every case.
  std::vector<std::string> deciding;
};

// Independent check of root membership: w^m is run letter by letter, without
// the library's word or root machinery.
VerifyReport oracle_soundness(std::size_t samples, std::uint64_t seed) {
  VerifyReport rep{"soundness-oracle", "power automaton agrees with a test-only w^m oracle",
                   {{"samples", std::to_string(samples)}, {"seed", std::to_string(seed)}}, {}};
  std::mt19937_64 rng(seed);
  std::size_t mismatches = 0, words = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    const auto d = oracle::random_dfa(1 + s % 6, 1 + s % 3, rng);
    const auto r = root_automaton(d).dfa;
    std::uniform_int_distribution<std::size_t> len(0, 8), letter(0, d.letter_count() - 1);
    for (int i = 0; i < 40; ++i) {
      Word w(len(rng));
      for (auto& x : w) x = letter(rng);
      bool expected = false;
      State q = d.start();
      for (std::size_t m = 1; m <= d.size() && !expected; ++m) {
        for (auto a : w) q = d.next(q, a);
        expected = d.is_final(q);
      }
      State p = r.start();
      for (auto a : w) p = r.next(p, a);
      ++words;
      if (r.is_final(p) != expected) ++mismatches;
    }
  }
  rep.cases.push_back({"random words vs oracle", mismatches == 0, "0 mismatches",
                       std::to_string(mismatches) + " over " + std::to_string(words) + " words", 0.0});
  return rep;
}

std::vector<Criterion> criteria() {
  return {
      {1, "full T_n: minimal root has n^n - C(n,2) states for n = 4, 5, 6", 300.0,
       [] { return std::vector{suite_full_tn(6, 4)}; }, {}},
      {2, "U_{k,l} DFA: formula = enumeration and minimal root = formula - C(n,2) at (2,3), (3,4)", 600.0,
       [] { return std::vector{suite_min_dfa(2, 3), suite_min_dfa(3, 4)}; }, {}},
      {3, "equivalence classes: C(n,2) pairs {eta, complement(eta)}, nothing larger, at (2,3), (3,4)", 600.0,
       [] { return std::vector{suite_equivalence_structure(2, 3), suite_equivalence_structure(3, 4)}; }, {}},
      {4, "|U_{2,n-2}| - |U_{n-2,2}| >= C(n,2) for 7 <= n <= 40, enumeration agrees at n = 7", 60.0,
       [] { return std::vector{suite_gap(40, true)}; }, {}},
      {5, "max coprime |U_{k,l}| >= analytic lower bound for 7 <= n <= 30", 60.0,
       [] { return std::vector{suite_lower_bound(30)}; }, {}},
      {6, "unary: tight family {a^(n-2)} and unary_root = generic root on random DFAs", 120.0,
       [] { return std::vector{suite_unary(14, 1, 200)}; }, {}},
      {7, "soundness: root automaton = w^m oracle, L in root(L), root idempotent", 300.0,
       [] { return std::vector{suite_soundness(500, 7, 6, 3, 8), oracle_soundness(500, 11)}; }, {}},
      {8, "Stirling: (i-1) two-step identity for n <= 60 and function count for n, m <= 12", 10.0,
       [] { return std::vector{suite_counting(60, 12)}; },
       {"S(n,i) = S(n-2,i-2) + (2i-1)S(n-2,i-1) + (i-1)S(n-2,i)", "sum_i C(m,i) i! S(n,i) = m^n"}},
  };
}

bool decides(const Criterion& c, const CaseResult& r) {
  if (c.deciding.empty()) return true;
  for (const auto& name : c.deciding) {
    if (name == r.name) return true;
  }
  return false;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.push_back(std::atoi(argv[i]));

  bool all_pass = true;
  for (const auto& c : criteria()) {
    if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), c.id) == wanted.end()) continue;

    const auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    std::vector<VerifyReport> reports;
    std::string error;
    try {
      reports = c.run();
    } catch (const std::exception& e) {
      error = e.what();
      pass = false;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    for (const auto& rep : reports) {
      for (const auto& r : rep.cases) {
        const bool counted = decides(c, r);
        if (counted && !r.pass) pass = false;
        std::cout << "    " << (r.pass ? "ok  " : "bad ") << (counted ? "" : "(info) ") << rep.suite << ": "
                  << r.name << " expected " << r.expected << ", got " << r.measured << '\n';
      }
    }
    const bool in_time = secs <= c.budget_seconds;
    pass = pass && in_time;
    all_pass = all_pass && pass;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " ("
              << std::fixed;
    std::cout.precision(2);
    std::cout << secs << " s, budget " << c.budget_seconds << " s)";
    if (!error.empty()) std::cout << " error: " << error;
    if (!in_time) std::cout << " over budget";
    std::cout << '\n' << std::flush;
  }
  return all_pass ? 0 : 1;
}
