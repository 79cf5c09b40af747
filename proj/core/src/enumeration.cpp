#include "drshadow/enumeration.hpp"

#include <algorithm>
#include <cmath>

namespace drshadow {

namespace {

// Binomial coefficient, saturating at UINT64_MAX.
std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(acc);
}

// Largest w with w(w+1)/2 <= z.
std::uint64_t triangular_root(std::uint64_t z) {
  using u128 = unsigned __int128;
  const auto tri = [](u128 w) { return w * (w + 1) / 2; };
  auto w = static_cast<std::uint64_t>((std::sqrt(8.0L * static_cast<long double>(z) + 1.0L) - 1.0L) / 2.0L);
  while (w > 0 && tri(w) > z) --w;
  while (tri(static_cast<u128>(w) + 1) <= z) ++w;
  return w;
}

// The q-th k-tuple (zero-based entries) with entry sum s.
void decode_with_sum(std::uint64_t k, std::uint64_t s, std::uint64_t q, std::vector<std::uint64_t>& out) {
  if (k == 1) {
    out.push_back(s);
    return;
  }
  for (std::uint64_t last = 0; last <= s; ++last) {
    const auto count = binom(s - last + k - 2, k - 2);
    if (q < count) {
      decode_with_sum(k - 1, s - last, q, out);
      out.push_back(last);
      return;
    }
    q -= count;
  }
  throw std::logic_error("tuple rank out of range");
}

}  // namespace

std::uint64_t cantor_pair(std::uint64_t a, std::uint64_t b) {
  const auto w = a + b;
  return w * (w + 1) / 2 + a;
}

std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t z) {
  const auto w = triangular_root(z);
  const auto t = w * (w + 1) / 2;
  const auto a = z - t;
  return {a, w - a};
}

BasisTuple enumerate_tuples(std::uint64_t j) {
  if (j == 0) throw DynamicsError(ErrorCode::kInvalidArgument, "tuple indices start at 1");
  const auto [a, r] = cantor_unpair(j - 1);
  const auto k = a + 1;
  // Tuples with entry sum below s number C(s+k-1, k).
  std::uint64_t s = 0;
  while (binom(s + k, k) <= r) ++s;
  std::vector<std::uint64_t> entries;
  entries.reserve(k);
  decode_with_sum(k, s, r - binom(s + k - 1, k), entries);
  for (auto& e : entries) ++e;
  return BasisTuple{std::move(entries), j};
}

std::uint64_t tuple_depth(std::uint64_t l) {
  std::uint64_t depth = 0;
  for (std::uint64_t j = 1; j <= l; ++j) depth = std::max(depth, cantor_unpair(j - 1).first + 1);
  return depth;
}

std::string W0Distance::to_string() const {
  if (level) return level->to_string();
  return "indistinguishable@" + std::to_string(bound);
}

W0Metric::W0Metric(BaseSpace space, std::uint64_t table_size) : space_(std::move(space)) {
  tuples_.reserve(table_size);
  std::uint64_t max_entry = 0;
  std::uint64_t depth = 0;
  for (std::uint64_t j = 1; j <= table_size; ++j) {
    tuples_.push_back(enumerate_tuples(j));
    const auto& e = tuples_.back().entries;
    max_entry = std::max(max_entry, *std::max_element(e.begin(), e.end()));
    depth = std::max<std::uint64_t>(depth, e.size());
    depth_.push_back(depth);
  }
  basis_.reserve(max_entry);
  for (std::uint64_t i = 1; i <= max_entry; ++i) basis_.push_back(enumerate_basis(space_, i));
}

BasisTuple W0Metric::tuple(std::uint64_t j) const {
  if (j >= 1 && j <= tuples_.size()) return tuples_[j - 1];
  return enumerate_tuples(j);
}

ClopenSet W0Metric::basis(std::uint64_t i) const {
  if (i >= 1 && i <= basis_.size()) return basis_[i - 1];
  return enumerate_basis(space_, i);
}

bool W0Metric::member(const std::vector<Point>& head, bool long_enough_for_all, const BasisTuple& t) const {
  const auto k = t.entries.size();
  if (!long_enough_for_all && head.size() < k) return false;
  for (std::size_t i = 0; i < k; ++i) {
    const auto e = t.entries[i];
    const bool in = e <= basis_.size() ? basis_[e - 1].contains(head[i]) : basis(e).contains(head[i]);
    if (!in) return false;
  }
  return true;
}

bool W0Metric::alpha_bit(const W0Word& x, std::uint64_t j) const {
  const auto t = tuple(j);
  if (!x.length_at_least(t.entries.size())) return false;
  return member(x.head(t.entries.size()), true, t);
}

std::string W0Metric::alpha_bits(const W0Word& x, std::uint64_t m) const {
  const auto depth = m <= depth_.size() ? depth_[m - 1] : tuple_depth(m);
  const auto head = x.head(depth);
  std::string out;
  out.reserve(m);
  for (std::uint64_t j = 1; j <= m; ++j) {
    const BasisTuple local = j <= tuples_.size() ? BasisTuple{} : enumerate_tuples(j);
    const BasisTuple& t = j <= tuples_.size() ? tuples_[j - 1] : local;
    out.push_back(member(head, false, t) ? '1' : '0');
  }
  return out;
}

W0Distance W0Metric::distance(const W0Word& x, const W0Word& y, std::uint64_t search_bound) const {
  if (x == y) return W0Distance{Level::infinite(), search_bound};
  if (search_bound == 0) return W0Distance{std::nullopt, 0};
  const auto depth = search_bound <= depth_.size() ? depth_[search_bound - 1] : tuple_depth(search_bound);
  const auto hx = x.head(depth);
  const auto hy = y.head(depth);
  for (std::uint64_t j = 1; j <= search_bound; ++j) {
    const BasisTuple local = j <= tuples_.size() ? BasisTuple{} : enumerate_tuples(j);
    const BasisTuple& t = j <= tuples_.size() ? tuples_[j - 1] : local;
    if (member(hx, false, t) != member(hy, false, t)) return W0Distance{Level::finite(j), search_bound};
  }
  return W0Distance{std::nullopt, search_bound};
}

}  // namespace drshadow
