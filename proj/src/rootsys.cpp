#include "e6/rootsys.hpp"

#include <algorithm>
#include <cstdint>

namespace e6 {
namespace {

// Comparison order of the difference expansion: f, e, b, d, c, a.
constexpr int kOrderPositions[6] = {5, 4, 1, 3, 2, 0};

// Doubled coordinates of the fundamental roots in R^8 (basis e1..e8):
//   a = (e1 + e8 - e2 - e3 - e4 - e5 - e6 - e7)/2
//   b = e1 + e2,  c = e2 - e1,  d = e3 - e2,  e = e4 - e3,  f = e5 - e4
const int kFundDoubled[6][8] = {
    {1, -1, -1, -1, -1, -1, -1, 1},  // a
    {2, 2, 0, 0, 0, 0, 0, 0},        // b
    {-2, 2, 0, 0, 0, 0, 0, 0},       // c
    {0, -2, 2, 0, 0, 0, 0, 0},       // d
    {0, 0, -2, 2, 0, 0, 0, 0},       // e
    {0, 0, 0, -2, 2, 0, 0, 0},       // f
};

std::array<int, 6> key_of(const Coeffs6& c) {
  std::array<int, 6> k;
  for (int i = 0; i < 6; ++i) k[static_cast<size_t>(i)] = c[i];
  return k;
}

// Exact solve of the 6x6 integer system G x = y by fraction-free
// elimination; returns false if the solution is not integral.
bool solve_integer(Eigen::Matrix<int64_t, 6, 6> g,
                   Eigen::Matrix<int64_t, 6, 1> y,
                   Eigen::Matrix<int64_t, 6, 1>& x) {
  Eigen::Matrix<int64_t, 6, 7> m;
  m.leftCols<6>() = g;
  m.col(6) = y;
  int64_t prev = 1;
  for (int k = 0; k < 6; ++k) {
    int pivot = -1;
    for (int i = k; i < 6; ++i)
      if (m(i, k) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) return false;
    if (pivot != k) m.row(k).swap(m.row(pivot));
    for (int i = k + 1; i < 6; ++i) {
      for (int j = k + 1; j < 7; ++j)
        m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  for (int i = 5; i >= 0; --i) {
    int64_t acc = m(i, 6);
    for (int j = i + 1; j < 6; ++j) acc -= m(i, j) * x[j];
    if (m(i, i) == 0 || acc % m(i, i) != 0) return false;
    x[i] = acc / m(i, i);
  }
  return true;
}

}  // namespace

std::optional<Fund> fund_from_letter(char ch) {
  if (ch >= 'a' && ch <= 'f') return static_cast<Fund>(ch - 'a');
  return std::nullopt;
}

bool precedes(const Coeffs6& x, const Coeffs6& y) {
  const Coeffs6 d = y - x;
  for (int pos : kOrderPositions) {
    if (d[pos] != 0) return d[pos] > 0;
  }
  throw OrderError("precedes is irreflexive: vectors are equal");
}

std::string Root::tuple() const {
  std::string s;
  for (int i = 0; i < 6; ++i) s += static_cast<char>('0' + std::abs(coeffs_[i]));
  return s;
}

std::string Root::name() const {
  std::string s;
  for (int i = 0; i < 6; ++i) {
    const int v = coeffs_[i];
    if (v == 0) continue;
    if (v > 0 && !s.empty()) s += '+';
    if (v < 0) s += '-';
    if (std::abs(v) > 1) s += std::to_string(std::abs(v));
    s += "abcdef"[i];
  }
  return s.empty() ? "0" : s;
}

RootSystem RootSystem::build_e6() {
  // All 72 doubled root vectors of the coordinate model.
  std::vector<HalfCoords8> doubled;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          HalfCoords8 v = HalfCoords8::Zero();
          v[i] = 2 * si;
          v[j] = 2 * sj;
          doubled.push_back(v);
        }
  for (int mask = 0; mask < 32; ++mask) {
    int minus = 0;
    for (int i = 0; i < 5; ++i)
      if (mask & (1 << i)) ++minus;
    if (minus % 2 != 0) continue;
    for (int sigma : {1, -1}) {
      HalfCoords8 v;
      for (int i = 0; i < 5; ++i) v[i] = (mask & (1 << i)) ? -1 : 1;
      v[5] = -1;
      v[6] = -1;
      v[7] = 1;
      doubled.push_back(HalfCoords8(sigma * v));
    }
  }
  if (doubled.size() != 72)
    throw std::logic_error("E6 coordinate model must yield 72 roots");

  Eigen::Matrix<int64_t, 8, 6> fund;
  for (int c = 0; c < 6; ++c)
    for (int r = 0; r < 8; ++r) fund(r, c) = kFundDoubled[c][r];
  const Eigen::Matrix<int64_t, 6, 6> gram = fund.transpose() * fund;

  struct Entry {
    Coeffs6 coeffs;
    HalfCoords8 doubled;
  };
  std::vector<Entry> pos;
  for (const auto& w : doubled) {
    if (w.cast<int64_t>().squaredNorm() != 8)
      throw std::logic_error("root of squared length != 2 in model");
    Eigen::Matrix<int64_t, 6, 1> x;
    if (!solve_integer(gram, fund.transpose() * w.cast<int64_t>(), x))
      throw std::logic_error("root outside the fundamental lattice");
    Coeffs6 c;
    for (int i = 0; i < 6; ++i) c[i] = static_cast<int>(x[i]);
    if ((fund * x) != w.cast<int64_t>())
      throw std::logic_error("inconsistent coordinate solve");
    const bool any_pos = (c.array() > 0).any();
    const bool any_neg = (c.array() < 0).any();
    if (any_pos && any_neg)
      throw std::logic_error("mixed-sign coefficient vector in model");
    if (any_pos) pos.push_back({c, w});
  }
  if (pos.size() != 36)
    throw std::logic_error("expected 36 positive roots");

  std::sort(pos.begin(), pos.end(), [](const Entry& l, const Entry& r) {
    return precedes(l.coeffs, r.coeffs);
  });

  RootSystem sys;
  sys.all_.reserve(72);
  sys.half_coords_.resize(72);
  for (int i = 0; i < 36; ++i) {
    sys.positives_.push_back(Root(pos[static_cast<size_t>(i)].coeffs, i + 1));
    sys.all_.push_back(sys.positives_.back());
    sys.half_coords_[static_cast<size_t>(i)] =
        pos[static_cast<size_t>(i)].doubled;
  }
  for (int i = 0; i < 36; ++i) {
    const auto& p = pos[static_cast<size_t>(i)];
    sys.all_.push_back(Root(Coeffs6(-p.coeffs), -(i + 1)));
    sys.half_coords_[static_cast<size_t>(36 + i)] = -p.doubled;
  }

  for (const Root& r : sys.all_) {
    sys.sorted_keys_.push_back(key_of(r.coeffs()));
    sys.sorted_index_.push_back(r.index());
  }
  std::vector<size_t> order(72);
  for (size_t i = 0; i < 72; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t l, size_t r) {
    return sys.sorted_keys_[l] < sys.sorted_keys_[r];
  });
  std::vector<std::array<int, 6>> keys;
  std::vector<int> idx;
  for (size_t i : order) {
    keys.push_back(sys.sorted_keys_[i]);
    idx.push_back(sys.sorted_index_[i]);
  }
  sys.sorted_keys_ = std::move(keys);
  sys.sorted_index_ = std::move(idx);
  return sys;
}

const RootSystem& RootSystem::standard() {
  static const RootSystem sys = build_e6();
  return sys;
}

int RootSystem::slot(int signed_index) const {
  if (signed_index >= 1 && signed_index <= 36) return signed_index - 1;
  if (signed_index <= -1 && signed_index >= -36) return 36 - signed_index - 1;
  throw std::out_of_range("root index out of range: " +
                          std::to_string(signed_index));
}

const Root& RootSystem::root(int signed_index) const {
  return all_[static_cast<size_t>(slot(signed_index))];
}

const Root& RootSystem::fundamental(Fund x) const {
  Coeffs6 c = Coeffs6::Zero();
  c[static_cast<int>(x)] = 1;
  return root(*index_of(c));
}

std::optional<int> RootSystem::index_of(const Coeffs6& coeffs) const {
  const auto key = key_of(coeffs);
  const auto it =
      std::lower_bound(sorted_keys_.begin(), sorted_keys_.end(), key);
  if (it == sorted_keys_.end() || *it != key) return std::nullopt;
  return sorted_index_[static_cast<size_t>(it - sorted_keys_.begin())];
}

SumResult RootSystem::sum(const Root& r, const Root& s) const {
  const Coeffs6 t = r.coeffs() + s.coeffs();
  if (t.isZero()) return {SumResult::Kind::Opposite, nullptr};
  if (const auto idx = index_of(t))
    return {SumResult::Kind::Root, &root(*idx)};
  return {SumResult::Kind::NotARoot, nullptr};
}

std::optional<Root> RootSystem::sum_root(const Root& r, const Root& s) const {
  const SumResult res = sum(r, s);
  if (res.kind == SumResult::Kind::Root) return *res.root;
  return std::nullopt;
}

RootString RootSystem::root_string(const Root& r, const Root& s) const {
  if (r.coeffs() == s.coeffs() || r.coeffs() == Coeffs6(-s.coeffs()))
    throw std::invalid_argument("root string undefined for s = +-r");
  RootString out{0, 0};
  while (is_root(Coeffs6(s.coeffs() - (out.p + 1) * r.coeffs()))) ++out.p;
  while (is_root(Coeffs6(s.coeffs() + (out.q + 1) * r.coeffs()))) ++out.q;
  return out;
}

int RootSystem::scalar_product(const Root& r, const Root& s) const {
  const int64_t dot = half_coords(r).cast<int64_t>().dot(
      half_coords(s).cast<int64_t>());
  return static_cast<int>(dot / 4);
}

const HalfCoords8& RootSystem::half_coords(const Root& r) const {
  return half_coords_[static_cast<size_t>(slot(r.index()))];
}

}  // namespace e6
