#include "rootsc/monoid.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <unordered_set>

#include "rootsc/errors.hpp"

namespace rootsc {

namespace {

// Deduplicating store of equal-length byte strings kept back to back in one
// buffer. Lookups append the candidate as a provisional last entry.
class FlatStore {
 public:
  explicit FlatStore(std::size_t width)
      : width_(width), index_(1024, Hash{this}, Eq{this}) {}

  std::size_t size() const noexcept { return count_; }
  const std::uint8_t* at(std::size_t i) const { return buf_.data() + i * width_; }

  // Returns (index, inserted).
  std::pair<std::uint32_t, bool> insert(const std::uint8_t* data) {
    buf_.insert(buf_.end(), data, data + width_);
    const auto candidate = static_cast<std::uint32_t>(count_);
    auto it = index_.find(candidate);
    if (it != index_.end()) {
      buf_.resize(buf_.size() - width_);
      return {*it, false};
    }
    ++count_;
    index_.insert(candidate);
    return {candidate, true};
  }

 private:
  struct Hash {
    const FlatStore* s;
    std::size_t operator()(std::uint32_t i) const noexcept {
      const std::uint8_t* p = s->buf_.data() + std::size_t{i} * s->width_;
      std::size_t h = 1469598103934665603ull;
      for (std::size_t k = 0; k < s->width_; ++k) {
        h ^= p[k];
        h *= 1099511628211ull;
      }
      return h;
    }
  };
  struct Eq {
    const FlatStore* s;
    bool operator()(std::uint32_t a, std::uint32_t b) const noexcept {
      return std::equal(s->at(a), s->at(a) + s->width_, s->at(b));
    }
  };

  std::size_t width_;
  std::size_t count_ = 0;
  std::vector<std::uint8_t> buf_;
  std::unordered_set<std::uint32_t, Hash, Eq> index_;
};

std::size_t check_degrees(std::span<const Transformation> gens) {
  if (gens.empty()) throw InvalidArgument("closure needs at least one generator");
  const std::size_t n = gens.front().degree();
  for (const auto& g : gens) {
    if (g.degree() != n) throw InvalidArgument("generators differ in degree");
  }
  return n;
}

std::uint64_t factorial_u64(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

}  // namespace

Exploration explore(std::span<const Transformation> gens, std::size_t cap) {
  const std::size_t n = check_degrees(gens);
  FlatStore store(n);
  Exploration out;
  out.right.assign(gens.size(), {});

  std::vector<std::uint8_t> tmp(n);
  const auto id = identity(n);
  store.insert(id.raw().data());

  for (std::size_t i = 0; i < store.size(); ++i) {
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const std::uint8_t* e = store.at(i);
      auto gr = gens[g].raw();
      for (std::size_t q = 0; q < n; ++q) tmp[q] = gr[e[q]];
      auto [idx, inserted] = store.insert(tmp.data());
      if (inserted && store.size() > cap) {
        throw BudgetExceeded("monoid exceeds the element cap of " + std::to_string(cap));
      }
      out.right[g].push_back(idx);
    }
  }

  out.elements.reserve(store.size());
  for (std::size_t i = 0; i < store.size(); ++i) {
    out.elements.push_back(
        Transformation::from_raw(std::vector<std::uint8_t>(store.at(i), store.at(i) + n)));
  }
  return out;
}

TransMonoid::TransMonoid(std::size_t degree, std::vector<Transformation> generators,
                         std::vector<Transformation> sorted_elements)
    : degree_(degree), generators_(std::move(generators)), elements_(std::move(sorted_elements)) {}

bool TransMonoid::contains(const Transformation& t) const { return index_of(t).has_value(); }

std::optional<std::size_t> TransMonoid::index_of(const Transformation& t) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), t);
  if (it == elements_.end() || *it != t) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

std::vector<std::size_t> TransMonoid::rank_histogram() const {
  std::vector<std::size_t> hist(degree_ + 1, 0);
  for (const auto& e : elements_) ++hist[rank(e)];
  return hist;
}

TransMonoid closure(std::span<const Transformation> gens, std::size_t cap) {
  const std::size_t n = check_degrees(gens);
  auto ex = explore(gens, cap);
  std::sort(ex.elements.begin(), ex.elements.end());
  return TransMonoid(n, std::vector<Transformation>(gens.begin(), gens.end()),
                     std::move(ex.elements));
}

TransMonoid transformation_monoid(const Dfa& d, std::size_t cap) {
  std::vector<Transformation> gens;
  for (std::size_t a = 0; a < d.letter_count(); ++a) gens.push_back(d.letter_transformation(a));
  return closure(gens, cap);
}

void dump(const TransMonoid& m, std::ostream& os) {
  for (const auto& e : m.elements()) os << e << '\n';
}

std::vector<Transformation> tn_generators(std::size_t n) {
  if (n == 0 || n > kMaxDegree) throw InvalidArgument("tn_generators: invalid degree");
  if (n == 1) return {identity(1)};
  if (n == 2) return {Transformation{2, 1}, Transformation{1, 1}};

  std::vector<unsigned> swap(n), cycle(n), collapse(n);
  for (unsigned i = 1; i <= n; ++i) {
    swap[i - 1] = i;
    cycle[i - 1] = i % n + 1;
    collapse[i - 1] = i;
  }
  std::swap(swap[0], swap[1]);
  collapse[n - 1] = 1;
  return {Transformation(swap), Transformation(cycle), Transformation(collapse)};
}

namespace {

std::vector<std::uint8_t> find_pi2(std::size_t k, std::size_t l) {
  const std::size_t m = k + l - 1;
  if (m > 9) {
    throw BudgetExceeded("pi_2 search over S_" + std::to_string(m) + " is beyond the search budget");
  }
  std::vector<std::uint8_t> pi1(m);
  std::iota(pi1.begin(), pi1.end(), std::uint8_t{0});
  for (std::size_t i = 0; i < k; ++i) pi1[i] = static_cast<std::uint8_t>((i + 1) % k);
  const auto t1 = Transformation::from_raw(pi1);

  const std::uint64_t full = factorial_u64(m);
  std::vector<std::uint8_t> p(m);
  std::iota(p.begin(), p.end(), std::uint8_t{0});
  do {
    const Transformation gens[] = {t1, Transformation::from_raw(p)};
    if (explore(gens, full).elements.size() == full) return p;
  } while (std::next_permutation(p.begin(), p.end()));
  throw Error("no pi_2 generates S_" + std::to_string(m));  // unreachable for m >= 2
}

void check_kl(std::size_t k, std::size_t l) {
  if (k < 2 || l < 2) throw InvalidArgument("U_{k,l} needs k, l >= 2");
  if (gcd_u64(k, l) != 1) {
    throw InvalidArgument("U_{k,l} needs coprime k and l, got " + std::to_string(k) + "," +
                          std::to_string(l));
  }
  if (k + l > kMaxDegree) throw InvalidArgument("k + l exceeds the maximum degree");
}

}  // namespace

UklGenerators ukl_generators(std::size_t k, std::size_t l) {
  check_kl(k, l);
  static std::mutex mu;
  static std::map<std::pair<std::size_t, std::size_t>, UklGenerators> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find({k, l}); it != cache.end()) return it->second;
  }
  const auto pi2 = find_pi2(k, l);
  std::vector<std::uint8_t> beta(pi2);
  beta.push_back(pi2[0]);
  UklGenerators g{cycle_pair(k, l), Transformation::from_raw(std::move(beta))};
  std::lock_guard lock(mu);
  return cache.emplace(std::pair{k, l}, g).first->second;
}

bool ukl_member(const Transformation& g, std::size_t k, std::size_t l) {
  const std::size_t n = k + l;
  if (g.degree() != n) throw InvalidArgument("ukl_member: degree must be k + l");
  auto r = g.raw();

  // Powers of alpha rotate each cycle independently (k, l coprime).
  const std::size_t r1 = r[0];
  const std::size_t r2 = r[k] - k;
  bool power = r1 < k && r[k] >= k;
  for (std::size_t i = 0; power && i < k; ++i) power = r[i] == (i + r1) % k;
  for (std::size_t i = 0; power && i < l; ++i) power = r[k + i] == k + (i + r2) % l;
  if (power) return true;

  bool merges = false;
  for (std::size_t i = 0; i < k && !merges; ++i) {
    for (std::size_t j = k; j < n && !merges; ++j) merges = r[i] == r[j];
  }
  if (!merges) return false;
  std::vector<bool> hit(n, false);
  for (auto v : r) hit[v] = true;
  for (std::size_t m = k; m < n; ++m) {
    if (!hit[m]) return true;
  }
  return false;
}

std::vector<std::string> default_alphabet(std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "x" + std::to_string(i));
  }
  return out;
}

Dfa based_dfa(std::span<const Transformation> gens, unsigned start_point,
              std::span<const unsigned> final_points) {
  return Dfa::from_transformations(default_alphabet(gens.size()), gens, start_point, final_points);
}

Dfa based_dfa(std::span<const Transformation> gens) {
  const unsigned one[] = {1};
  return based_dfa(gens, 1, one);
}

// ---------------------------------------------------------------------------
// Exhaustive searches over tiny T_n, with transformations encoded as
// base-n integers and a precomputed composition table.

namespace {

class TinyTn {
 public:
  explicit TinyTn(std::size_t n) : n_(n) {
    size_ = 1;
    for (std::size_t i = 0; i < n; ++i) size_ *= n;
    table_.resize(size_ * size_);
    for (std::size_t a = 0; a < size_; ++a) {
      auto fa = decode(a);
      for (std::size_t b = 0; b < size_; ++b) {
        auto fb = decode(b);
        std::vector<std::uint8_t> c(n);
        for (std::size_t q = 0; q < n; ++q) c[q] = fb[fa[q]];
        table_[a * size_ + b] = static_cast<std::uint16_t>(encode(c));
      }
    }
    std::vector<std::uint8_t> id(n);
    std::iota(id.begin(), id.end(), std::uint8_t{0});
    identity_ = encode(id);
  }

  std::size_t size() const noexcept { return size_; }
  std::size_t identity() const noexcept { return identity_; }
  std::size_t compose(std::size_t a, std::size_t b) const { return table_[a * size_ + b]; }

  std::vector<std::uint8_t> decode(std::size_t code) const {
    std::vector<std::uint8_t> out(n_);
    for (std::size_t q = 0; q < n_; ++q) {
      out[q] = static_cast<std::uint8_t>(code % n_);
      code /= n_;
    }
    return out;
  }
  std::size_t encode(const std::vector<std::uint8_t>& raw) const {
    std::size_t code = 0;
    for (std::size_t q = n_; q-- > 0;) code = code * n_ + raw[q];
    return code;
  }

  // Closure of gens as a membership vector.
  std::vector<bool> closure(std::span<const std::size_t> gens, std::size_t* count) const {
    std::vector<bool> in(size_, false);
    std::vector<std::size_t> queue{identity_};
    in[identity_] = true;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (auto g : gens) {
        auto c = compose(queue[i], g);
        if (!in[c]) {
          in[c] = true;
          queue.push_back(c);
        }
      }
    }
    *count = queue.size();
    return in;
  }

 private:
  std::size_t n_;
  std::size_t size_;
  std::size_t identity_;
  std::vector<std::uint16_t> table_;
};

}  // namespace

LargestTwoGenerated largest_two_generated(std::size_t n, std::size_t max_n) {
  if (n == 0) throw InvalidArgument("largest_two_generated: n must be positive");
  if (n > max_n || n > 4) {
    throw BudgetExceeded("largest_two_generated: n = " + std::to_string(n) +
                         " is above the search budget (max " + std::to_string(std::min<std::size_t>(max_n, 4)) +
                         "); the pair space T_n x T_n grows as n^(2n)");
  }
  const TinyTn tn(n);
  std::size_t best = 0, bf = 0, bg = 0;
  for (std::size_t f = 0; f < tn.size(); ++f) {
    for (std::size_t g = f; g < tn.size(); ++g) {
      const std::size_t gens[] = {f, g};
      std::size_t count = 0;
      tn.closure(gens, &count);
      if (count > best) {
        best = count;
        bf = f;
        bg = g;
      }
    }
  }
  return {best, Transformation::from_raw(tn.decode(bf)), Transformation::from_raw(tn.decode(bg))};
}

std::vector<std::vector<Transformation>> all_submonoids(std::size_t n) {
  if (n == 0 || n > 3) throw InvalidArgument("all_submonoids supports 1 <= n <= 3");
  const TinyTn tn(n);
  using Mask = std::uint32_t;  // 27 elements at most
  auto to_mask = [](const std::vector<bool>& in) {
    Mask m = 0;
    for (std::size_t i = 0; i < in.size(); ++i) {
      if (in[i]) m |= Mask{1} << i;
    }
    return m;
  };

  std::size_t count = 0;
  const std::size_t id[] = {tn.identity()};
  std::vector<Mask> found{to_mask(tn.closure(id, &count))};
  std::unordered_set<Mask> seen(found.begin(), found.end());
  for (std::size_t i = 0; i < found.size(); ++i) {
    std::vector<std::size_t> gens;
    for (std::size_t e = 0; e < tn.size(); ++e) {
      if (found[i] >> e & 1u) gens.push_back(e);
    }
    for (std::size_t e = 0; e < tn.size(); ++e) {
      if (found[i] >> e & 1u) continue;
      gens.push_back(e);
      const Mask m = to_mask(tn.closure(gens, &count));
      gens.pop_back();
      if (seen.insert(m).second) found.push_back(m);
    }
  }

  std::vector<std::vector<Transformation>> out;
  out.reserve(found.size());
  for (Mask m : found) {
    std::vector<Transformation> elems;
    for (std::size_t e = 0; e < tn.size(); ++e) {
      if (m >> e & 1u) elems.push_back(Transformation::from_raw(tn.decode(e)));
    }
    std::sort(elems.begin(), elems.end());
    out.push_back(std::move(elems));
  }
  return out;
}

}  // namespace rootsc
