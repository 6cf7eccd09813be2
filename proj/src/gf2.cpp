#include "f2lab/gf2.hpp"

#include <algorithm>
#include <bit>

#include "f2lab/config.hpp"

namespace f2lab {

std::string bitstring(int dim, uint32_t v) {
  std::string s(static_cast<size_t>(dim), '0');
  for (int i = 0; i < dim; ++i)
    if (v & (1u << (dim - 1 - i))) s[static_cast<size_t>(i)] = '1';
  return s;
}

uint32_t parse_bitstring(int dim, const std::string& s) {
  if (static_cast<int>(s.size()) != dim)
    fail(Err::Parse, "expected " + std::to_string(dim) + " characters, got '" + s + "'");
  uint32_t v = 0;
  for (int i = 0; i < dim; ++i) {
    char c = s[static_cast<size_t>(i)];
    if (c == '1')
      v |= 1u << (dim - 1 - i);
    else if (c != '0')
      fail(Err::Parse, "bad character in vector line '" + s + "'");
  }
  return v;
}

GF2Set::GF2Set(int dim) : dim_(dim) {
  if (dim < 0 || dim > limits().max_dim)
    fail(Err::OutOfRange, "set dimension " + std::to_string(dim) + " outside [0," +
                              std::to_string(limits().max_dim) + "]");
  words_.assign(dim_ >= 6 ? (1ull << (dim_ - 6)) : 1, 0);
}

GF2Set GF2Set::full(int dim) {
  GF2Set s(dim);
  for (auto& w : s.words_) w = ~0ull;
  if (dim < 6) s.words_[0] = (1ull << (1u << dim)) - 1;
  return s;
}

GF2Set GF2Set::of(int dim, std::initializer_list<uint32_t> pts) {
  GF2Set s(dim);
  for (uint32_t p : pts) s.insert(p);
  return s;
}

GF2Set GF2Set::from_points(int dim, const std::vector<uint32_t>& pts) {
  GF2Set s(dim);
  for (uint32_t p : pts) s.insert(p);
  return s;
}

void GF2Set::check_point(uint32_t p) const {
  if (p >= universe()) fail(Err::OutOfRange, "point outside F_2^" + std::to_string(dim_));
}

void GF2Set::insert(uint32_t p) {
  check_point(p);
  words_[p >> 6] |= 1ull << (p & 63);
}

void GF2Set::erase(uint32_t p) {
  check_point(p);
  words_[p >> 6] &= ~(1ull << (p & 63));
}

size_t GF2Set::cardinality() const {
  size_t n = 0;
  for (uint64_t w : words_) n += static_cast<size_t>(std::popcount(w));
  return n;
}

bool GF2Set::empty() const {
  for (uint64_t w : words_)
    if (w) return false;
  return true;
}

uint32_t GF2Set::min_element() const {
  for (size_t w = 0; w < words_.size(); ++w)
    if (words_[w]) return static_cast<uint32_t>((w << 6) + __builtin_ctzll(words_[w]));
  fail(Err::EmptySet, "min_element of empty set");
}

std::vector<uint32_t> GF2Set::elements() const {
  std::vector<uint32_t> out;
  out.reserve(cardinality());
  for_each([&](uint32_t p) { out.push_back(p); });
  return out;
}

GF2Set GF2Set::translated(uint32_t t) const {
  check_point(t);
  GF2Set out(dim_);
  const uint32_t hi = t >> 6, lo = t & 63;
  for (size_t w = 0; w < words_.size(); ++w)
    out.words_[w ^ hi] = detail::xor_permute_word(words_[w], lo);
  return out;
}

bool GF2Set::is_period(uint32_t t) const {
  check_point(t);
  const uint32_t hi = t >> 6, lo = t & 63;
  for (size_t w = 0; w < words_.size(); ++w)
    if (detail::xor_permute_word(words_[w ^ hi], lo) != words_[w]) return false;
  return true;
}

GF2Set GF2Set::operator|(const GF2Set& o) const {
  if (dim_ != o.dim_) fail(Err::DimMismatch, "union of sets with different dims");
  GF2Set out(dim_);
  for (size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] | o.words_[i];
  return out;
}

GF2Set GF2Set::operator&(const GF2Set& o) const {
  if (dim_ != o.dim_) fail(Err::DimMismatch, "intersection of sets with different dims");
  GF2Set out(dim_);
  for (size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] & o.words_[i];
  return out;
}

GF2Set GF2Set::minus(const GF2Set& o) const {
  if (dim_ != o.dim_) fail(Err::DimMismatch, "difference of sets with different dims");
  GF2Set out(dim_);
  for (size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] & ~o.words_[i];
  return out;
}

GF2Set GF2Set::complement() const { return full(dim_).minus(*this); }

bool GF2Set::intersects(const GF2Set& o) const {
  if (dim_ != o.dim_) fail(Err::DimMismatch, "intersects with different dims");
  for (size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & o.words_[i]) return true;
  return false;
}

void or_translated(GF2Set& acc, const GF2Set& b, uint32_t t) {
  if (acc.dim() != b.dim()) fail(Err::DimMismatch, "or_translated dims");
  const uint32_t hi = t >> 6, lo = t & 63;
  auto& aw = acc.words();
  const auto& bw = b.words();
  for (size_t w = 0; w < bw.size(); ++w)
    aw[w ^ hi] |= detail::xor_permute_word(bw[w], lo);
}

GF2Set sumset(const GF2Set& a) {
  if (a.empty()) fail(Err::EmptySet, "sumset of empty set");
  GF2Set out(a.dim());
  a.for_each([&](uint32_t p) { or_translated(out, a, p); });
  return out;
}

Rational doubling_constant(const GF2Set& a) {
  if (a.empty()) fail(Err::EmptySet, "doubling constant of empty set");
  return Rational(static_cast<long long>(sumset(a).cardinality()),
                  static_cast<long long>(a.cardinality()));
}

std::vector<uint32_t> period_points(const GF2Set& s) {
  if (s.empty()) fail(Err::EmptySet, "stabilizer of empty set");
  // A period must map the least element into the set, so h ranges over s0 + S.
  const uint32_t s0 = s.min_element();
  std::vector<uint32_t> periods;
  s.for_each([&](uint32_t p) {
    const uint32_t h = p ^ s0;
    if (s.is_period(h)) periods.push_back(h);
  });
  std::sort(periods.begin(), periods.end());
  return periods;
}

GF2Set simplex(int dim) {
  GF2Set s(dim);
  s.insert(0);
  for (int i = 0; i < dim; ++i) s.insert(1u << i);
  return s;
}

GF2Set punctured_cube(int dim) {
  GF2Set s = GF2Set::full(dim);
  s.erase(static_cast<uint32_t>((1ull << dim) - 1));
  return s;
}

GF2Set weight_le_set(int dim, int max_weight) {
  GF2Set s(dim);
  for (uint32_t p = 0; p < (1u << dim); ++p)
    if (std::popcount(p) <= max_weight) s.insert(p);
  return s;
}

GF2Set product_set(const GF2Set& a, const GF2Set& b) {
  GF2Set out(a.dim() + b.dim());
  a.for_each([&](uint32_t pa) {
    b.for_each([&](uint32_t pb) { out.insert((pa << b.dim()) | pb); });
  });
  return out;
}

GF2Set LinearMap::apply(const GF2Set& a) const {
  if (a.dim() != dim_in) fail(Err::DimMismatch, "linear map domain mismatch");
  GF2Set out(dim_out);
  a.for_each([&](uint32_t p) { out.insert(apply(p)); });
  return out;
}

bool LinearMap::invertible() const {
  if (dim_in != dim_out) return false;
  std::vector<uint32_t> rows;
  for (uint32_t v : basis_image) {
    for (uint32_t r : rows) v = std::min(v, v ^ r);
    if (!v) return false;
    rows.push_back(v);
    std::sort(rows.rbegin(), rows.rend());
  }
  return true;
}

}  // namespace f2lab
