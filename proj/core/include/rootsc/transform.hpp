#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace rootsc {

/// Largest supported degree; images are stored in one byte each.
inline constexpr std::size_t kMaxDegree = 255;

/// A total self-map of {1..n}.
///
/// Points are one-based in every public accessor and in text form. Storage is
/// a flat zero-based byte sequence, exposed through `raw()` for hot loops.
/// Ordering is lexicographic on the image sequence.
class Transformation {
 public:
  /// Builds from one-based images; throws InvalidArgument on an empty list,
  /// a degree above kMaxDegree or an image outside {1..n}.
  explicit Transformation(std::span<const unsigned> images);
  Transformation(std::initializer_list<unsigned> images);

  /// Adopts zero-based images without validation.
  static Transformation from_raw(std::vector<std::uint8_t> raw) noexcept {
    Transformation t;
    t.map_ = std::move(raw);
    return t;
  }

  std::size_t degree() const noexcept { return map_.size(); }

  /// Image of the one-based point `q`.
  unsigned operator()(unsigned q) const { return map_[q - 1] + 1u; }

  std::span<const std::uint8_t> raw() const noexcept { return map_; }

  /// One-based image sequence.
  std::vector<unsigned> images() const;

  friend bool operator==(const Transformation&, const Transformation&) = default;
  friend auto operator<=>(const Transformation&, const Transformation&) = default;

 private:
  Transformation() = default;
  std::vector<std::uint8_t> map_;
};

Transformation identity(std::size_t n);

/// Left-to-right composition: the result sends q to g(f(q)).
Transformation compose(const Transformation& f, const Transformation& g);

/// f applied m times; power(f, 0) is the identity.
Transformation power(const Transformation& f, std::uint64_t m);

/// Sorted one-based image set.
std::vector<unsigned> image(const Transformation& f);

std::size_t rank(const Transformation& f);

/// True iff `k` is in the image of f and has exactly one preimage.
bool is_unique(const Transformation& f, unsigned k);

/// Swaps the two image values of a rank-2 transformation.
Transformation complement(const Transformation& f);

/// The permutation (1 2 ... k)(k+1 ... k+l) of degree k+l.
Transformation cycle_pair(std::size_t k, std::size_t l);

/// One-row form, e.g. "[2 1 4 5 3]".
std::string to_string(const Transformation& f);
std::ostream& operator<<(std::ostream& os, const Transformation& f);

}  // namespace rootsc

template <>
struct std::hash<rootsc::Transformation> {
  std::size_t operator()(const rootsc::Transformation& t) const noexcept;
};
