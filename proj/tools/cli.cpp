#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rootsc/counting.hpp"
#include "rootsc/dfa.hpp"
#include "rootsc/errors.hpp"
#include "rootsc/monoid.hpp"
#include "rootsc/root.hpp"
#include "rootsc/verify.hpp"

namespace rootsc::cli {

namespace {

int write_result(const Dfa& d, const CliConfig& c, std::ostream& out, std::ostream& err) {
  const std::string states = "states=" + std::to_string(d.size());
  if (c.output == "-") {
    out << serialize(d);
    err << states << '\n';
  } else {
    if (!c.output.empty()) save_dfa(d, c.output);
    out << states << '\n';
  }
  return kOk;
}

// Wraps a subcommand body: library errors become exit code 2.
template <class Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

std::int64_t need(const std::optional<std::int64_t>& v, const char* flag) {
  if (!v) throw InvalidArgument(std::string("missing required option ") + flag);
  return *v;
}

}  // namespace

int cmd_root(const CliConfig& c, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto d = load_dfa(c.input);
    auto ra = root_automaton(d, c.cap);
    return write_result(c.minimize ? minimize(ra.dfa) : ra.dfa, c, out, err);
  });
}

int cmd_unary_root(const CliConfig& c, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto r = unary_root(load_dfa(c.input));
    return write_result(c.minimize ? minimize(r) : r, c, out, err);
  });
}

int cmd_minimize(const CliConfig& c, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] { return write_result(minimize(load_dfa(c.input)), c, out, err); });
}

int cmd_monoid(const CliConfig& c, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto m = transformation_monoid(load_dfa(c.input), c.cap);
    out << "size=" << m.size() << '\n';
    const auto hist = m.rank_histogram();
    for (std::size_t r = 1; r < hist.size(); ++r) {
      if (hist[r] > 0) out << "rank " << r << ": " << hist[r] << '\n';
    }
    if (c.dump) dump(m, out);
    return kOk;
  });
}

int cmd_ukl(const CliConfig& c, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    nlohmann::ordered_json j;
    int code = kOk;
    if (c.k || c.l) {
      const auto k = need(c.k, "--k");
      const auto l = need(c.l, "--l");
      const auto formula = ukl_size_formula(k, l);
      j["k"] = k;
      j["l"] = l;
      j["formula"] = formula.str();
      if (c.enumerate) {
        const auto g = ukl_generators(static_cast<std::size_t>(k), static_cast<std::size_t>(l));
        const Transformation gens[] = {g.alpha, g.beta};
        const auto size = closure(gens, c.cap).size();
        const bool agree = BigCount(size) == formula;
        j["alpha"] = to_string(g.alpha);
        j["beta"] = to_string(g.beta);
        j["closure"] = size;
        j["verdict"] = agree ? "AGREE" : "DISAGREE";
        if (!agree) code = kFailed;
      }
    } else {
      const auto n = need(c.n, "--n or --k/--l");
      const auto [k, l] = best_coprime_pair(n);
      const auto formula = ukl_size_formula(k, l);
      j["n"] = n;
      j["k"] = k;
      j["l"] = l;
      j["formula"] = formula.str();
      j["predicted_min_root"] = (formula - binomial(n, 2)).str();
    }
    if (c.json) {
      out << j.dump(2) << '\n';
    } else {
      for (auto it = j.begin(); it != j.end(); ++it) {
        out << it.key() << '=' << (it->is_string() ? it->get<std::string>() : it->dump()) << '\n';
      }
    }
    return code;
  });
}

int cmd_stirling(const CliConfig& c, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    out << stirling2(need(c.n, "--n"), need(c.k, "--k")) << '\n';
    return kOk;
  });
}

int cmd_bound(const CliConfig& c, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::ostringstream os;
    os << std::setprecision(17) << hk_lower_bound(need(c.n, "--n"));
    out << os.str() << '\n';
    return kOk;
  });
}

int cmd_verify(const CliConfig& c, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    SuiteOptions o;
    if (c.max_n) o.max_n = static_cast<std::size_t>(*c.max_n);
    if (c.k) o.k = static_cast<std::size_t>(*c.k);
    if (c.l) o.l = static_cast<std::size_t>(*c.l);
    o.seed = c.seed;
    const auto reports = run_suite(c.suite, o);
    bool pass = true;
    for (const auto& r : reports) pass = pass && r.pass();
    if (c.json) {
      out << to_json(reports) << '\n';
    } else {
      for (const auto& r : reports) out << to_table(r) << '\n';
      out << (pass ? "ALL PASS" : "FAILURES") << '\n';
    }
    return pass ? kOk : kFailed;
  });
}

int cmd_largest2(const CliConfig& c, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto n = need(c.n, "--n");
    if (n < 1) throw InvalidArgument("--n must be positive");
    const auto best = largest_two_generated(static_cast<std::size_t>(n),
                                            static_cast<std::size_t>(c.max_n.value_or(4)));
    out << "size=" << best.size << '\n'
        << "generators=" << best.first << ' ' << best.second << '\n';
    return kOk;
  });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"rootsc: state complexity of root(L) via transformation monoids"};
  app.require_subcommand(1);
  CliConfig c;

  auto dfa_io = [&](CLI::App* sub, bool with_minimize) {
    sub->add_option("input", c.input, "DFA text file")->required()->check(CLI::ExistingFile);
    sub->add_option("-o,--output", c.output, "write the resulting DFA here ('-' for stdout)");
    if (with_minimize) sub->add_flag("--minimize", c.minimize, "minimize before writing");
  };
  auto cap = [&](CLI::App* sub) {
    sub->add_option("--cap", c.cap, "monoid element cap")->capture_default_str();
  };

  auto* root = app.add_subcommand("root", "build the power automaton for root(L)");
  dfa_io(root, true);
  cap(root);
  auto* unary = app.add_subcommand("unary-root", "root(L) of a one-letter DFA by tail/loop analysis");
  dfa_io(unary, true);
  auto* mini = app.add_subcommand("minimize", "minimize a DFA");
  dfa_io(mini, false);

  auto* mon = app.add_subcommand("monoid", "size and rank histogram of the transformation monoid");
  mon->add_option("input", c.input, "DFA text file")->required()->check(CLI::ExistingFile);
  mon->add_flag("--dump", c.dump, "print every element, sorted");
  cap(mon);

  auto* ukl = app.add_subcommand("ukl", "size of U_{k,l}, or the best split of n");
  ukl->add_option("--n", c.n, "degree; reports the best coprime split");
  ukl->add_option("--k", c.k, "first cycle length");
  ukl->add_option("--l", c.l, "second cycle length");
  ukl->add_flag("--formula", "print the closed-form size (always on)");
  ukl->add_flag("--enumerate", c.enumerate, "also enumerate the closure and compare");
  ukl->add_flag("--json", c.json, "JSON output");
  cap(ukl);

  auto* st = app.add_subcommand("stirling", "Stirling number of the second kind");
  st->add_option("--n", c.n)->required();
  st->add_option("--k", c.k)->required();

  auto* bound = app.add_subcommand("bound", "analytic lower bound on max |U_{k,l}|");
  bound->add_option("--n", c.n)->required();

  auto* ver = app.add_subcommand("verify", "run verification suites");
  ver->add_option("--suite", c.suite, "suite name")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  ver->add_option("--max-n", c.max_n, "largest degree for the suite");
  ver->add_option("--k", c.k, "pin k (equivalence, min-dfa, start-final)");
  ver->add_option("--l", c.l, "pin l (equivalence, min-dfa, start-final)");
  ver->add_option("--seed", c.seed, "random seed")->capture_default_str();
  ver->add_flag("--json", c.json, "JSON output");

  auto* l2 = app.add_subcommand("largest2", "largest two-generated submonoid of T_n");
  l2->add_option("--n", c.n)->required();
  l2->add_option("--max-n", c.max_n, "search budget (largest n allowed, at most 4)");

  std::vector<std::string> argv_store{"rootsc"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const std::map<CLI::App*, int (*)(const CliConfig&, std::ostream&, std::ostream&)> dispatch = {
      {root, cmd_root},         {unary, cmd_unary_root}, {mini, cmd_minimize},
      {mon, cmd_monoid},        {ukl, cmd_ukl},          {st, cmd_stirling},
      {bound, cmd_bound},       {ver, cmd_verify},       {l2, cmd_largest2}};
  for (const auto& [sub, fn] : dispatch) {
    if (sub->parsed()) {
      c.subcommand = sub->get_name();
      return fn(c, out, err);
    }
  }
  return kUsage;
}

}  // namespace rootsc::cli
