#pragma once

#include <Eigen/Core>

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace e6 {

/// Coefficients over the fundamental basis, tuple order (a,b,c,d,e,f).
using Coeffs6 = Eigen::Matrix<int, 6, 1>;

/// Realization in R^8 scaled by 2, so every entry is an integer.
using HalfCoords8 = Eigen::Matrix<int, 8, 1>;

enum class Fund : int { a = 0, b = 1, c = 2, d = 3, e = 4, f = 5 };

inline char fund_letter(Fund x) { return "abcdef"[static_cast<int>(x)]; }
std::optional<Fund> fund_from_letter(char ch);

struct OrderError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Strict total order on the coefficient space: x < y iff the first
/// nonzero coefficient of y - x in the basis order (f, e, b, d, c, a)
/// is positive. Throws OrderError when x == y.
bool precedes(const Coeffs6& x, const Coeffs6& y);

/// A root of E6, addressed by a signed position in the Table 1 order:
/// +1..+36 for positives, -1..-36 for their negatives.
class Root {
public:
  const Coeffs6& coeffs() const { return coeffs_; }
  int index() const { return index_; }
  int height() const { return coeffs_.sum(); }
  bool positive() const { return index_ > 0; }

  friend bool operator==(const Root& a, const Root& b) {
    return a.index_ == b.index_;
  }

  std::string tuple() const;  // "011210"
  std::string name() const;   // "b+c+2d+e", "-a-c"

private:
  friend class RootSystem;
  Root(const Coeffs6& c, int index) : coeffs_(c), index_(index) {}

  Coeffs6 coeffs_;
  int index_;
};

struct RootString {
  int p;  // max i >= 0 with s - i*r a root
  int q;  // max i >= 0 with s + i*r a root
};

/// Outcome of adding two roots: a root, zero (opposite pair), or neither.
struct SumResult {
  enum class Kind { Root, Opposite, NotARoot };
  Kind kind;
  const Root* root;  // set iff kind == Root
};

class RootSystem {
public:
  /// Enumerates the 72 roots from the R^8 model, expresses them over the
  /// fundamental basis and orders the positives by `precedes`.
  static RootSystem build_e6();

  /// Shared immutable instance.
  static const RootSystem& standard();

  int rank() const { return 6; }
  int positive_count() const { return 36; }

  const std::vector<Root>& positives() const { return positives_; }

  const Root& root(int signed_index) const;
  const Root& fundamental(Fund x) const;
  const Root& negated(const Root& r) const { return root(-r.index()); }

  /// Signed index of a coefficient vector, or nullopt if not a root.
  std::optional<int> index_of(const Coeffs6& coeffs) const;

  SumResult sum(const Root& r, const Root& s) const;
  std::optional<Root> sum_root(const Root& r, const Root& s) const;

  /// Throws OrderError when s == +-r.
  RootString root_string(const Root& r, const Root& s) const;

  /// Scalar product in the R^8 realization; always in {-2,...,2}.
  int scalar_product(const Root& r, const Root& s) const;

  /// Doubled R^8 coordinates (every root coordinate is a half-integer).
  const HalfCoords8& half_coords(const Root& r) const;

  bool is_root(const Coeffs6& coeffs) const {
    return index_of(coeffs).has_value();
  }

private:
  RootSystem() = default;

  int slot(int signed_index) const;  // 0..71

  std::vector<Root> positives_;           // index order 1..36
  std::vector<Root> all_;                 // slots 0..35 pos, 36..71 neg
  std::vector<HalfCoords8> half_coords_;  // by slot
  std::vector<std::array<int, 6>> sorted_keys_;  // coeffs -> signed index
  std::vector<int> sorted_index_;
};

}  // namespace e6
