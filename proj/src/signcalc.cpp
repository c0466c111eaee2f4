#include "e6/signcalc.hpp"

#include <bit>

namespace e6 {
namespace {

// bit ranges per family: A 0..9 (subscripts 1..9 then 0), B 10..18,
// G 19..24, D 25..27, E 28..29
constexpr int kFamilyBase[5] = {0, 10, 19, 25, 28};
constexpr int kFamilySize[5] = {10, 9, 6, 3, 2};
constexpr char kFamilyLetter[5] = {'a', 'b', 'g', 'd', 'e'};

int family_of_bit(int bit) {
  for (int f = 4; f >= 0; --f)
    if (bit >= kFamilyBase[f]) return f;
  return 0;
}

}  // namespace

SignVar::SignVar(Family family, int subscript) : bit_(0) {
  const int f = static_cast<int>(family);
  int offset = -1;
  if (family == Family::A) {
    if (subscript >= 1 && subscript <= 9) offset = subscript - 1;
    if (subscript == 0) offset = 9;  // a0 sorts after a9
  } else if (subscript >= 1 && subscript <= kFamilySize[f]) {
    offset = subscript - 1;
  }
  if (offset < 0)
    throw ParseError("no such sign parameter: " +
                     std::string(1, kFamilyLetter[f]) +
                     std::to_string(subscript));
  bit_ = kFamilyBase[f] + offset;
}

SignVar SignVar::from_bit(int bit) {
  if (bit < 0 || bit >= kCount)
    throw std::out_of_range("SignVar bit out of range");
  return SignVar(bit);
}

SignVar::Family SignVar::family() const {
  return static_cast<Family>(family_of_bit(bit_));
}

int SignVar::subscript() const {
  const int f = family_of_bit(bit_);
  const int offset = bit_ - kFamilyBase[f];
  if (f == 0 && offset == 9) return 0;
  return offset + 1;
}

std::string SignVar::name() const {
  const int f = family_of_bit(bit_);
  return std::string(1, kFamilyLetter[f]) + std::to_string(subscript());
}

SignVar SignVar::from_name(std::string_view name) {
  if (name.size() != 2)
    throw ParseError("bad sign parameter token '" + std::string(name) + "'");
  Family fam;
  switch (name[0]) {
    case 'a': fam = Family::A; break;
    case 'b': fam = Family::B; break;
    case 'g': fam = Family::G; break;
    case 'd': fam = Family::D; break;
    case 'e': fam = Family::E; break;
    default:
      throw ParseError("bad sign family in token '" + std::string(name) + "'");
  }
  if (name[1] < '0' || name[1] > '9')
    throw ParseError("bad subscript in token '" + std::string(name) + "'");
  return SignVar(fam, name[1] - '0');
}

Assignment Assignment::random(std::mt19937_64& rng) {
  Assignment a;
  for (auto& v : a.values_) v = (rng() & 1) ? int8_t{1} : int8_t{-1};
  return a;
}

void Assignment::set(SignVar v, int sign) {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("assignment values must be +-1");
  values_[static_cast<size_t>(v.bit())] = static_cast<int8_t>(sign);
}

int SignMonomial::evaluate(const Assignment& a) const {
  int value = negative_ ? -1 : 1;
  uint32_t bits = parity_;
  while (bits) {
    const int bit = std::countr_zero(bits);
    bits &= bits - 1;
    value *= a.value(SignVar::from_bit(bit));
  }
  return value;
}

std::string SignMonomial::str() const {
  std::string out;
  if (negative_) out += '-';
  if (parity_ == 0) {
    out += '1';
    return out;
  }
  bool first = true;
  for (int bit = 0; bit < SignVar::kCount; ++bit) {
    if (!(parity_ & (uint32_t{1} << bit))) continue;
    if (!first) out += '*';
    out += SignVar::from_bit(bit).name();
    first = false;
  }
  return out;
}

SignMonomial SignMonomial::parse(std::string_view text) {
  SignMonomial m;
  size_t pos = 0;
  if (pos < text.size() && text[pos] == '-') {
    m = minus_one();
    ++pos;
  }
  if (pos >= text.size()) throw ParseError("empty monomial text");
  bool expect_factor = true;
  while (pos < text.size()) {
    if (!expect_factor) {
      if (text[pos] != '*')
        throw ParseError("expected '*' at '" + std::string(text.substr(pos)) +
                         "'");
      ++pos;
      expect_factor = true;
      continue;
    }
    if (text[pos] == '1') {
      // unit factor: only legal as the whole monomial body
      if (pos > 1 || pos + 1 != text.size())
        throw ParseError("unexpected unit factor '1'");
      ++pos;
      expect_factor = false;
      continue;
    }
    if (pos + 2 > text.size())
      throw ParseError("truncated token '" + std::string(text.substr(pos)) +
                       "'");
    m *= var(SignVar::from_name(text.substr(pos, 2)));
    pos += 2;
    expect_factor = false;
  }
  if (expect_factor) throw ParseError("trailing '*' in monomial text");
  return m;
}

}  // namespace e6
