#include "rootsc/dfa.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <queue>
#include <sstream>
#include <unordered_set>

#include "rootsc/errors.hpp"

namespace rootsc {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v'; }

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    std::size_t j = i;
    while (j < s.size() && !is_space(s[j])) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Dfa::Dfa(std::vector<std::string> alphabet, std::vector<std::vector<State>> table, State start,
         std::vector<State> finals)
    : alphabet_(std::move(alphabet)), table_(std::move(table)), start_(start) {
  if (alphabet_.empty()) throw InvalidArgument("alphabet must be non-empty");
  {
    std::unordered_set<std::string> seen;
    for (const auto& a : alphabet_) {
      if (a.empty()) throw InvalidArgument("empty letter");
      if (!seen.insert(a).second) throw InvalidArgument("duplicate letter '" + a + "'");
    }
  }
  if (table_.size() != alphabet_.size()) {
    throw InvalidArgument("expected one transition column per letter");
  }
  const std::size_t n = table_.front().size();
  if (n == 0) throw InvalidArgument("a DFA needs at least one state");
  for (const auto& col : table_) {
    if (col.size() != n) throw InvalidArgument("transition columns differ in length");
    for (State t : col) {
      if (t >= n) throw InvalidArgument("transition target " + std::to_string(t) + " out of range");
    }
  }
  if (start_ >= n) throw InvalidArgument("start state out of range");
  final_.assign(n, 0);
  for (State f : finals) {
    if (f >= n) throw InvalidArgument("final state " + std::to_string(f) + " out of range");
    final_[f] = 1;
  }
}

Dfa Dfa::from_transformations(std::vector<std::string> alphabet,
                              std::span<const Transformation> maps, unsigned start_point,
                              std::span<const unsigned> final_points) {
  if (maps.empty()) throw InvalidArgument("need at least one letter map");
  const std::size_t n = maps.front().degree();
  std::vector<std::vector<State>> table;
  for (const auto& m : maps) {
    if (m.degree() != n) throw InvalidArgument("letter maps differ in degree");
    table.emplace_back(m.raw().begin(), m.raw().end());
  }
  if (start_point < 1 || start_point > n) throw InvalidArgument("start point out of range");
  std::vector<State> finals;
  for (unsigned p : final_points) {
    if (p < 1 || p > n) throw InvalidArgument("final point out of range");
    finals.push_back(p - 1);
  }
  return Dfa(std::move(alphabet), std::move(table), start_point - 1, std::move(finals));
}

std::optional<std::size_t> Dfa::letter_index(std::string_view letter) const {
  for (std::size_t i = 0; i < alphabet_.size(); ++i) {
    if (alphabet_[i] == letter) return i;
  }
  return std::nullopt;
}

std::vector<State> Dfa::finals() const {
  std::vector<State> out;
  for (State q = 0; q < final_.size(); ++q) {
    if (final_[q]) out.push_back(q);
  }
  return out;
}

Transformation Dfa::letter_transformation(std::size_t letter) const {
  if (size() > kMaxDegree) {
    throw InvalidArgument("DFA with " + std::to_string(size()) +
                          " states is too large for transformation arithmetic");
  }
  const auto& col = table_.at(letter);
  std::vector<std::uint8_t> raw(col.begin(), col.end());
  return Transformation::from_raw(std::move(raw));
}

Word Dfa::word(std::string_view text) const {
  Word w;
  auto lookup = [&](std::string_view tok) {
    auto idx = letter_index(tok);
    if (!idx) throw InvalidArgument("unknown letter '" + std::string(tok) + "'");
    w.push_back(*idx);
  };
  if (std::any_of(text.begin(), text.end(), is_space)) {
    for (auto tok : split_ws(text)) lookup(tok);
  } else {
    for (std::size_t i = 0; i < text.size(); ++i) lookup(text.substr(i, 1));
  }
  return w;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

std::uint64_t parse_uint(std::string_view tok, std::size_t line) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size()) {
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
  }
  return v;
}

State parse_state(std::string_view tok, std::size_t n, std::size_t line) {
  auto v = parse_uint(tok, line);
  if (v < 1 || v > n) {
    throw ParseError(line, "state " + std::string(tok) + " out of range");
  }
  return static_cast<State>(v - 1);
}

struct Directive {
  std::size_t line = 0;
  std::vector<std::string_view> args;
};

}  // namespace

Dfa parse_dfa(std::string_view text) {
  std::optional<Directive> states, alphabet, start, finals;
  std::vector<Directive> trans;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    auto toks = split_ws(line);
    if (toks.empty() || toks.front().front() == '#') continue;
    Directive d{line_no, {toks.begin() + 1, toks.end()}};
    auto set_once = [&](std::optional<Directive>& slot, std::string_view name) {
      if (slot) throw ParseError(line_no, "duplicate '" + std::string(name) + "' line");
      slot = std::move(d);
    };
    const std::string_view key = toks.front();
    if (key == "states") {
      set_once(states, key);
    } else if (key == "alphabet") {
      set_once(alphabet, key);
    } else if (key == "start") {
      set_once(start, key);
    } else if (key == "finals") {
      set_once(finals, key);
    } else if (key == "trans") {
      trans.push_back(std::move(d));
    } else {
      throw ParseError(line_no, "unknown directive '" + std::string(key) + "'");
    }
  }

  if (!states) throw ParseError(0, "missing 'states' line");
  if (!alphabet) throw ParseError(0, "missing 'alphabet' line");
  if (!start) throw ParseError(0, "missing 'start' line");
  if (!finals) throw ParseError(0, "missing 'finals' line");

  if (states->args.size() != 1) throw ParseError(states->line, "'states' takes one integer");
  const auto n64 = parse_uint(states->args[0], states->line);
  if (n64 < 1 || n64 > 0xFFFFFFFFull) throw ParseError(states->line, "state count must be positive");
  const auto n = static_cast<std::size_t>(n64);

  if (alphabet->args.empty()) throw ParseError(alphabet->line, "alphabet must be non-empty");
  std::vector<std::string> letters;
  for (auto a : alphabet->args) {
    if (std::find(letters.begin(), letters.end(), a) != letters.end()) {
      throw ParseError(alphabet->line, "duplicate letter '" + std::string(a) + "'");
    }
    letters.emplace_back(a);
  }

  if (start->args.size() != 1) throw ParseError(start->line, "'start' takes one state");
  const State s0 = parse_state(start->args[0], n, start->line);

  std::vector<State> fin;
  for (auto tok : finals->args) fin.push_back(parse_state(tok, n, finals->line));

  std::vector<std::vector<State>> table(letters.size());
  std::vector<bool> seen(letters.size(), false);
  for (const auto& t : trans) {
    if (t.args.empty()) throw ParseError(t.line, "'trans' needs a letter");
    auto it = std::find(letters.begin(), letters.end(), t.args[0]);
    if (it == letters.end()) {
      throw ParseError(t.line, "unknown letter '" + std::string(t.args[0]) + "'");
    }
    const auto a = static_cast<std::size_t>(it - letters.begin());
    if (seen[a]) throw ParseError(t.line, "duplicate 'trans' line for letter '" + *it + "'");
    seen[a] = true;
    if (t.args.size() - 1 != n) {
      throw ParseError(t.line, "expected " + std::to_string(n) + " targets, got " +
                                   std::to_string(t.args.size() - 1));
    }
    table[a].reserve(n);
    for (std::size_t i = 1; i < t.args.size(); ++i) table[a].push_back(parse_state(t.args[i], n, t.line));
  }
  for (std::size_t a = 0; a < letters.size(); ++a) {
    if (!seen[a]) throw ParseError(0, "missing 'trans' line for letter '" + letters[a] + "'");
  }
  return Dfa(std::move(letters), std::move(table), s0, std::move(fin));
}

Dfa read_dfa(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_dfa(buf.str());
}

Dfa load_dfa(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  return read_dfa(in);
}

std::string serialize(const Dfa& d) {
  std::ostringstream os;
  os << "states " << d.size() << '\n';
  os << "alphabet";
  for (const auto& a : d.alphabet()) os << ' ' << a;
  os << "\nstart " << d.start() + 1 << "\nfinals";
  for (State f : d.finals()) os << ' ' << f + 1;
  os << '\n';
  for (std::size_t a = 0; a < d.letter_count(); ++a) {
    os << "trans " << d.alphabet()[a];
    for (State t : d.column(a)) os << ' ' << t + 1;
    os << '\n';
  }
  return os.str();
}

void save_dfa(const Dfa& d, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << serialize(d);
}

// ---------------------------------------------------------------------------
// Execution

State run(const Dfa& d, State from, const Word& w) {
  State q = from;
  for (auto a : w) {
    if (a >= d.letter_count()) throw InvalidArgument("letter index out of range");
    q = d.next(q, a);
  }
  return q;
}

bool accepts(const Dfa& d, const Word& w) { return d.is_final(run(d, d.start(), w)); }

Transformation word_transformation(const Dfa& d, const Word& w) {
  Transformation t = identity(d.size());
  for (auto a : w) {
    if (a >= d.letter_count()) throw InvalidArgument("letter index out of range");
    t = compose(t, d.letter_transformation(a));
  }
  return t;
}

std::vector<State> reachable_states(const Dfa& d) {
  std::vector<bool> seen(d.size(), false);
  std::vector<State> order{d.start()};
  seen[d.start()] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t a = 0; a < d.letter_count(); ++a) {
      State t = d.next(order[i], a);
      if (!seen[t]) {
        seen[t] = true;
        order.push_back(t);
      }
    }
  }
  return order;
}

// ---------------------------------------------------------------------------
// Hopcroft refinement

namespace {

class Refiner {
 public:
  explicit Refiner(const Dfa& d) : d_(d), n_(d.size()), k_(d.letter_count()) {
    build_inverse();
    elems_.resize(n_);
    loc_.resize(n_);
    block_of_.resize(n_);

    // Initial split: finals first, then non-finals.
    std::size_t pos = 0;
    for (State q = 0; q < n_; ++q) {
      if (d.is_final(q)) place(q, pos++);
    }
    const std::size_t nf = pos;
    for (State q = 0; q < n_; ++q) {
      if (!d.is_final(q)) place(q, pos++);
    }
    if (nf > 0) add_block(0, nf);
    if (nf < n_) add_block(nf, n_);
    for (std::size_t b = 0; b < first_.size(); ++b) {
      for (State i = first_[b]; i < end_[b]; ++i) block_of_[elems_[i]] = static_cast<std::uint32_t>(b);
    }
    if (first_.size() == 2) {
      const std::uint32_t smaller = (end_[0] - first_[0] <= end_[1] - first_[1]) ? 0 : 1;
      for (std::size_t a = 0; a < k_; ++a) push(smaller, a);
    }
  }

  std::vector<std::uint32_t> run() {
    std::vector<State> splitter;
    std::vector<std::uint32_t> touched;
    while (!work_.empty()) {
      auto [b, a] = work_.back();
      work_.pop_back();
      in_work_[b * k_ + a] = 0;

      splitter.assign(elems_.begin() + first_[b], elems_.begin() + end_[b]);
      touched.clear();
      for (State t : splitter) {
        for (std::uint32_t i = inv_start_[a * (n_ + 1) + t]; i < inv_start_[a * (n_ + 1) + t + 1]; ++i) {
          State s = inv_[a * n_ + i];
          std::uint32_t c = block_of_[s];
          if (mid_[c] == first_[c]) touched.push_back(c);
          mark(s);
        }
      }
      for (std::uint32_t c : touched) split(c);
    }

    // Dense ids by first occurrence in state order.
    std::vector<std::uint32_t> remap(first_.size(), UINT32_MAX);
    std::vector<std::uint32_t> out(n_);
    std::uint32_t next = 0;
    for (State q = 0; q < n_; ++q) {
      auto& r = remap[block_of_[q]];
      if (r == UINT32_MAX) r = next++;
      out[q] = r;
    }
    return out;
  }

 private:
  void build_inverse() {
    inv_start_.assign(k_ * (n_ + 1), 0);
    inv_.resize(k_ * n_);
    for (std::size_t a = 0; a < k_; ++a) {
      auto col = d_.column(a);
      std::uint32_t* start = &inv_start_[a * (n_ + 1)];
      for (State t : col) ++start[t + 1];
      for (std::size_t i = 0; i < n_; ++i) start[i + 1] += start[i];
      std::vector<std::uint32_t> fill(start, start + n_);
      for (State q = 0; q < n_; ++q) inv_[a * n_ + fill[col[q]]++] = q;
    }
  }

  void place(State q, std::size_t pos) {
    elems_[pos] = q;
    loc_[q] = static_cast<std::uint32_t>(pos);
  }

  void add_block(std::size_t first, std::size_t end) {
    first_.push_back(static_cast<std::uint32_t>(first));
    end_.push_back(static_cast<std::uint32_t>(end));
    mid_.push_back(static_cast<std::uint32_t>(first));
    in_work_.resize(first_.size() * k_, 0);
  }

  void push(std::uint32_t b, std::size_t a) {
    if (in_work_[b * k_ + a]) return;
    in_work_[b * k_ + a] = 1;
    work_.emplace_back(b, a);
  }

  void mark(State s) {
    const std::uint32_t c = block_of_[s];
    const std::uint32_t i = loc_[s];
    if (i < mid_[c]) return;
    const std::uint32_t j = mid_[c]++;
    const State other = elems_[j];
    place(s, j);
    place(other, i);
  }

  void split(std::uint32_t c) {
    const std::uint32_t f = first_[c], m = mid_[c], e = end_[c];
    mid_[c] = f;
    if (m == e) return;  // every element marked
    // New block takes the smaller half; its id is appended.
    const auto nb = static_cast<std::uint32_t>(first_.size());
    if (m - f <= e - m) {
      add_block(f, m);
      first_[c] = m;
      mid_[c] = m;
    } else {
      add_block(m, e);
      end_[c] = m;
    }
    for (std::uint32_t i = first_[nb]; i < end_[nb]; ++i) block_of_[elems_[i]] = nb;
    for (std::size_t a = 0; a < k_; ++a) push(nb, a);
  }

  const Dfa& d_;
  std::size_t n_;
  std::size_t k_;
  std::vector<std::uint32_t> inv_start_;
  std::vector<State> inv_;
  std::vector<State> elems_;
  std::vector<std::uint32_t> loc_;
  std::vector<std::uint32_t> block_of_;
  std::vector<std::uint32_t> first_, end_, mid_;
  std::vector<std::uint8_t> in_work_;
  std::vector<std::pair<std::uint32_t, std::size_t>> work_;
};

}  // namespace

std::vector<std::uint32_t> state_partition(const Dfa& d) { return Refiner(d).run(); }

Dfa minimize(const Dfa& d) {
  const auto reach = reachable_states(d);

  // Restrict to the reachable part before refining.
  std::vector<State> local(d.size(), UINT32_MAX);
  for (std::size_t i = 0; i < reach.size(); ++i) local[reach[i]] = static_cast<State>(i);
  std::vector<std::vector<State>> table(d.letter_count(), std::vector<State>(reach.size()));
  std::vector<State> fin;
  for (std::size_t i = 0; i < reach.size(); ++i) {
    for (std::size_t a = 0; a < d.letter_count(); ++a) table[a][i] = local[d.next(reach[i], a)];
    if (d.is_final(reach[i])) fin.push_back(static_cast<State>(i));
  }
  // reach[0] is the start state, so the trimmed start is 0.
  const Dfa trimmed(d.alphabet(), std::move(table), 0, std::move(fin));
  const auto cls = state_partition(trimmed);

  std::uint32_t classes = 0;
  for (auto c : cls) classes = std::max(classes, c + 1);
  std::vector<State> rep(classes, UINT32_MAX);
  for (State q = 0; q < trimmed.size(); ++q) {
    if (rep[cls[q]] == UINT32_MAX) rep[cls[q]] = q;
  }

  // Canonical numbering by breadth-first search from the start class.
  std::vector<State> canon(classes, UINT32_MAX);
  std::vector<std::uint32_t> order{cls[0]};
  canon[cls[0]] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t a = 0; a < trimmed.letter_count(); ++a) {
      auto c = cls[trimmed.next(rep[order[i]], a)];
      if (canon[c] == UINT32_MAX) {
        canon[c] = static_cast<State>(order.size());
        order.push_back(c);
      }
    }
  }

  std::vector<std::vector<State>> out(trimmed.letter_count(), std::vector<State>(classes));
  std::vector<State> out_fin;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const State r = rep[order[i]];
    for (std::size_t a = 0; a < trimmed.letter_count(); ++a) out[a][i] = canon[cls[trimmed.next(r, a)]];
    if (trimmed.is_final(r)) out_fin.push_back(static_cast<State>(i));
  }
  return Dfa(d.alphabet(), std::move(out), 0, std::move(out_fin));
}

bool equivalent(const Dfa& a, const Dfa& b) {
  if (a.letter_count() != b.letter_count()) {
    throw InvalidArgument("equivalent: alphabets differ");
  }
  // Reorder b's columns into a's letter order.
  std::vector<std::vector<State>> table;
  for (const auto& letter : a.alphabet()) {
    auto idx = b.letter_index(letter);
    if (!idx) throw InvalidArgument("equivalent: alphabets differ");
    auto col = b.column(*idx);
    table.emplace_back(col.begin(), col.end());
  }
  const Dfa b2(a.alphabet(), std::move(table), b.start(), b.finals());
  return minimize(a) == minimize(b2);
}

UnaryShape unary_structure(const Dfa& d) {
  if (d.letter_count() != 1) throw InvalidArgument("unary_structure needs a one-letter alphabet");
  std::vector<std::size_t> first_visit(d.size(), SIZE_MAX);
  State q = d.start();
  std::size_t step = 0;
  while (first_visit[q] == SIZE_MAX) {
    first_visit[q] = step++;
    q = d.next(q, 0);
  }
  return UnaryShape{first_visit[q], step - first_visit[q], q};
}

}  // namespace rootsc
