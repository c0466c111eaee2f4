#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

namespace e6 {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One of the 30 formal sign parameters:
/// a1..a9,a0, b1..b9, g1..g6, d1..d3, e1,e2.
/// a0 is a distinct tenth variable of the first family and sorts after a9.
class SignVar {
public:
  static constexpr int kCount = 30;

  enum class Family : int { A = 0, B = 1, G = 2, D = 3, E = 4 };

  SignVar(Family family, int subscript);

  static SignVar from_bit(int bit);
  static SignVar from_name(std::string_view name);  // throws ParseError

  int bit() const { return bit_; }
  Family family() const;
  int subscript() const;  // printed index; 0 means the tenth A-variable
  std::string name() const;

  friend bool operator==(SignVar a, SignVar b) { return a.bit_ == b.bit_; }
  friend bool operator<(SignVar a, SignVar b) { return a.bit_ < b.bit_; }

private:
  explicit SignVar(int bit) : bit_(bit) {}
  int bit_;
};

/// Total map SignVar -> {+1, -1}.
class Assignment {
public:
  Assignment() { values_.fill(+1); }

  static Assignment all_positive() { return Assignment{}; }
  static Assignment random(std::mt19937_64& rng);

  int value(SignVar v) const { return values_[static_cast<size_t>(v.bit())]; }
  void set(SignVar v, int sign);

private:
  std::array<int8_t, SignVar::kCount> values_;
};

/// +-1 times a square-free product of sign parameters. Every parameter
/// squares to one, so a monomial is a sign bit plus a 30-bit parity mask.
class SignMonomial {
public:
  constexpr SignMonomial() = default;  // +1

  static constexpr SignMonomial one() { return SignMonomial{}; }
  static constexpr SignMonomial minus_one() { return SignMonomial{true, 0}; }
  static SignMonomial var(SignVar v) {
    return SignMonomial{false, uint32_t{1} << v.bit()};
  }

  bool negative() const { return negative_; }
  uint32_t parity() const { return parity_; }
  bool is_unit() const { return parity_ == 0; }  // +-1 with no variables

  friend SignMonomial operator*(SignMonomial a, SignMonomial b) {
    return SignMonomial{a.negative_ != b.negative_, a.parity_ ^ b.parity_};
  }
  SignMonomial& operator*=(SignMonomial o) { return *this = *this * o; }
  SignMonomial operator-() const { return SignMonomial{!negative_, parity_}; }

  friend bool operator==(SignMonomial a, SignMonomial b) = default;

  int evaluate(const Assignment& a) const;

  /// Canonical text: optional leading '-', factors in bit order joined by
  /// '*'; the empty monomial renders as "1" or "-1".
  std::string str() const;

  /// Accepts any factor order and repeated factors (which cancel).
  static SignMonomial parse(std::string_view text);  // throws ParseError

private:
  constexpr SignMonomial(bool neg, uint32_t parity)
      : negative_(neg), parity_(parity) {}

  bool negative_ = false;
  uint32_t parity_ = 0;
};

}  // namespace e6
