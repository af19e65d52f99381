#ifndef POLYSUM_CORE_HPP
#define POLYSUM_CORE_HPP

#include <Eigen/Core>
#include <boost/rational.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace polysum {

/// Largest supported rank. Fixed-capacity Eigen storage keeps weights on the stack.
inline constexpr int kMaxRank = 8;

using Int = std::int64_t;
using Rational = boost::rational<Int>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1, Eigen::ColMajor, kMaxRank, 1>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor,
                             kMaxRank, kMaxRank>;

using IntVector = Vector<Int>;
using IntMatrix = Matrix<Int>;
using RationalVector = Vector<Rational>;
using RationalMatrix = Matrix<Rational>;

/// Thrown for malformed input: bad algebra names, wrong weight length, non-dominant
/// weights where dominance is required.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an internal identity that must hold exactly fails.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

// Eigen's recommended way of deriving a distinct type from a plain matrix.
template <typename Tag>
class TaggedIntVector : public IntVector {
 public:
  TaggedIntVector() = default;
  explicit TaggedIntVector(Eigen::Index size) : IntVector(IntVector::Zero(size)) {}
  TaggedIntVector(std::initializer_list<Int> values) : IntVector(Eigen::Index(values.size())) {
    Eigen::Index i = 0;
    for (Int v : values) (*this)(i++) = v;
  }
  template <typename OtherDerived>
  TaggedIntVector(const Eigen::MatrixBase<OtherDerived>& other) : IntVector(other) {}
  template <typename OtherDerived>
  TaggedIntVector& operator=(const Eigen::MatrixBase<OtherDerived>& other) {
    this->IntVector::operator=(other);
    return *this;
  }

  [[nodiscard]] int rank() const { return int(size()); }

  friend bool operator==(const TaggedIntVector& a, const TaggedIntVector& b) {
    return a.size() == b.size() && a.IntVector::operator==(b);
  }
  /// Lexicographic; shorter vectors order first.
  friend std::strong_ordering operator<=>(const TaggedIntVector& a, const TaggedIntVector& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      if (a(i) != b(i)) return a(i) <=> b(i);
    }
    return std::strong_ordering::equal;
  }
};

struct WeightTag {};
struct RootTag {};

}  // namespace detail

/// Dynkin labels: coordinates in the fundamental-weight basis.
using Weight = detail::TaggedIntVector<detail::WeightTag>;

/// Coordinates in the simple-root basis.
using RootCoords = detail::TaggedIntVector<detail::RootTag>;

/// True when every label is non-negative.
inline bool is_dominant(const Weight& w) { return (w.array() >= 0).all(); }

/// Parses "1,0,-2" into a weight. Whitespace around entries is ignored.
Weight parse_weight(std::string_view text);

/// Formats as "1,0,-2".
std::string format_weight(const IntVector& w);

/// Formats as "(1,0,-2)".
std::string format_tuple(const IntVector& w);

std::string format_rational(const Rational& q);

struct WeightHash {
  std::size_t operator()(const IntVector& w) const noexcept {
    std::size_t h = std::size_t(w.size());
    for (Eigen::Index i = 0; i < w.size(); ++i) {
      h ^= std::hash<Int>{}(w(i)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace polysum

namespace Eigen {

template <>
struct NumTraits<polysum::Rational> : GenericNumTraits<polysum::Rational> {
  typedef polysum::Rational Real;
  typedef polysum::Rational NonInteger;
  typedef polysum::Rational Nested;
  typedef polysum::Rational Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 4
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // POLYSUM_CORE_HPP
