#include "rootsc/transform.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "rootsc/errors.hpp"

namespace rootsc {

Transformation::Transformation(std::span<const unsigned> images) {
  const std::size_t n = images.size();
  if (n == 0 || n > kMaxDegree) {
    throw InvalidArgument("transformation degree must be in 1.." +
                          std::to_string(kMaxDegree) + ", got " + std::to_string(n));
  }
  map_.reserve(n);
  for (unsigned v : images) {
    if (v < 1 || v > n) {
      throw InvalidArgument("image " + std::to_string(v) + " outside 1.." + std::to_string(n));
    }
    map_.push_back(static_cast<std::uint8_t>(v - 1));
  }
}

Transformation::Transformation(std::initializer_list<unsigned> images)
    : Transformation(std::span<const unsigned>(images.begin(), images.size())) {}

std::vector<unsigned> Transformation::images() const {
  std::vector<unsigned> out(map_.size());
  std::transform(map_.begin(), map_.end(), out.begin(), [](std::uint8_t v) { return v + 1u; });
  return out;
}

Transformation identity(std::size_t n) {
  if (n == 0 || n > kMaxDegree) {
    throw InvalidArgument("invalid degree " + std::to_string(n));
  }
  std::vector<std::uint8_t> raw(n);
  std::iota(raw.begin(), raw.end(), std::uint8_t{0});
  return Transformation::from_raw(std::move(raw));
}

Transformation compose(const Transformation& f, const Transformation& g) {
  if (f.degree() != g.degree()) {
    throw InvalidArgument("compose: degree mismatch (" + std::to_string(f.degree()) + " vs " +
                          std::to_string(g.degree()) + ")");
  }
  auto fr = f.raw();
  auto gr = g.raw();
  std::vector<std::uint8_t> out(fr.size());
  for (std::size_t q = 0; q < fr.size(); ++q) out[q] = gr[fr[q]];
  return Transformation::from_raw(std::move(out));
}

Transformation power(const Transformation& f, std::uint64_t m) {
  Transformation result = identity(f.degree());
  Transformation base = f;
  while (m > 0) {
    if (m & 1u) result = compose(result, base);
    m >>= 1;
    if (m > 0) base = compose(base, base);
  }
  return result;
}

std::vector<unsigned> image(const Transformation& f) {
  std::vector<bool> hit(f.degree(), false);
  for (auto v : f.raw()) hit[v] = true;
  std::vector<unsigned> out;
  for (std::size_t i = 0; i < hit.size(); ++i) {
    if (hit[i]) out.push_back(static_cast<unsigned>(i + 1));
  }
  return out;
}

std::size_t rank(const Transformation& f) { return image(f).size(); }

bool is_unique(const Transformation& f, unsigned k) {
  if (k < 1 || k > f.degree()) return false;
  auto r = f.raw();
  return std::count(r.begin(), r.end(), static_cast<std::uint8_t>(k - 1)) == 1;
}

Transformation complement(const Transformation& f) {
  auto img = image(f);
  if (img.size() != 2) {
    throw InvalidArgument("complement needs a rank-2 transformation, got rank " +
                          std::to_string(img.size()));
  }
  const auto i = static_cast<std::uint8_t>(img[0] - 1);
  const auto j = static_cast<std::uint8_t>(img[1] - 1);
  std::vector<std::uint8_t> out(f.raw().begin(), f.raw().end());
  for (auto& v : out) v = (v == i) ? j : i;
  return Transformation::from_raw(std::move(out));
}

Transformation cycle_pair(std::size_t k, std::size_t l) {
  if (k == 0 || l == 0 || k + l > kMaxDegree) {
    throw InvalidArgument("cycle_pair needs k, l >= 1 and k + l <= 255");
  }
  std::vector<std::uint8_t> raw(k + l);
  for (std::size_t i = 0; i < k; ++i) raw[i] = static_cast<std::uint8_t>((i + 1) % k);
  for (std::size_t i = 0; i < l; ++i) raw[k + i] = static_cast<std::uint8_t>(k + (i + 1) % l);
  return Transformation::from_raw(std::move(raw));
}

std::string to_string(const Transformation& f) {
  std::ostringstream os;
  os << f;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Transformation& f) {
  os << '[';
  bool first = true;
  for (auto v : f.raw()) {
    if (!first) os << ' ';
    os << (v + 1u);
    first = false;
  }
  return os << ']';
}

}  // namespace rootsc

std::size_t std::hash<rootsc::Transformation>::operator()(
    const rootsc::Transformation& t) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto v : t.raw()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}
