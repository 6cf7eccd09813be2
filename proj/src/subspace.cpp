#include "f2lab/subspace.hpp"

#include <algorithm>
#include <bit>

namespace f2lab {

namespace {
inline int lead_bit(uint32_t v) { return 31 - std::countl_zero(v); }
}  // namespace

Subspace Subspace::full_space(int ambient_dim) {
  Subspace s(ambient_dim);
  for (int i = ambient_dim - 1; i >= 0; --i) s.rows_.push_back(1u << i);
  return s;
}

bool Subspace::extend(uint32_t v) {
  v = reduce(v);
  if (!v) return false;
  const int p = lead_bit(v);
  // Clear the new pivot from existing rows, then insert in pivot order.
  for (uint32_t& r : rows_)
    if ((r >> p) & 1u) r ^= v;
  auto it = std::upper_bound(rows_.begin(), rows_.end(), v, std::greater<uint32_t>());
  rows_.insert(it, v);
  return true;
}

Subspace Subspace::from_generators(int ambient_dim, const std::vector<uint32_t>& gens) {
  Subspace s(ambient_dim);
  for (uint32_t g : gens) {
    if (g >= (1ull << ambient_dim)) fail(Err::OutOfRange, "generator outside ambient space");
    s.extend(g);
  }
  return s;
}

Subspace Subspace::span_of(const GF2Set& a) {
  Subspace s(a.dim());
  a.for_each([&](uint32_t p) { s.extend(p); });
  return s;
}

bool Subspace::contains(const Subspace& other) const {
  for (uint32_t r : other.rows_)
    if (!contains(r)) return false;
  return true;
}

std::vector<uint32_t> Subspace::elements() const {
  std::vector<uint32_t> out(1, 0);
  out.reserve(cardinality());
  for (uint32_t r : rows_) {
    const size_t n = out.size();
    for (size_t i = 0; i < n; ++i) out.push_back(out[i] ^ r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

GF2Set Subspace::element_set() const {
  return GF2Set::from_points(ambient_, elements());
}

AffineSubspace affine_hull(const GF2Set& a) {
  if (a.empty()) fail(Err::EmptySet, "affine hull of empty set");
  const uint32_t a0 = a.min_element();
  Subspace dir(a.dim());
  a.for_each([&](uint32_t p) { dir.extend(p ^ a0); });
  return AffineSubspace{dir.reduce(a0), std::move(dir)};
}

Subspace linear_span(const GF2Set& a) { return Subspace::span_of(a); }

int cosets_meeting(const GF2Set& a, const Subspace& v) {
  if (a.dim() != v.ambient_dim()) fail(Err::DimMismatch, "cosets_meeting dims");
  if (a.empty()) fail(Err::EmptySet, "cosets_meeting of empty set");
  std::vector<uint32_t> reps;
  reps.reserve(a.cardinality());
  a.for_each([&](uint32_t p) { reps.push_back(v.reduce(p)); });
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  return static_cast<int>(reps.size());
}

Quotient::Quotient(int ambient_dim, Subspace h) : ambient_(ambient_dim), modulus_(std::move(h)) {
  if (modulus_.ambient_dim() != ambient_)
    fail(Err::DimMismatch, "quotient modulus lives in a different ambient space");
  uint32_t pivot_mask = 0;
  for (uint32_t r : modulus_.basis()) pivot_mask |= 1u << lead_bit(r);
  for (int coord = 1; coord <= ambient_; ++coord) {
    const int bit = ambient_ - coord;
    if (!((pivot_mask >> bit) & 1u)) {
      rep_coords_.push_back(coord);
      rep_bits_.push_back(bit);
    }
  }
}

uint32_t Quotient::project_point(uint32_t v) const {
  const uint32_t r = modulus_.reduce(v);
  uint32_t q = 0;
  const int qd = dim();
  for (int j = 0; j < qd; ++j)
    if ((r >> rep_bits_[static_cast<size_t>(j)]) & 1u) q |= 1u << (qd - 1 - j);
  return q;
}

uint32_t Quotient::lift(uint32_t q) const {
  uint32_t v = 0;
  const int qd = dim();
  for (int j = 0; j < qd; ++j)
    if ((q >> (qd - 1 - j)) & 1u) v |= 1u << rep_bits_[static_cast<size_t>(j)];
  return v;
}

GF2Set Quotient::project(const GF2Set& a) const {
  if (a.dim() != ambient_) fail(Err::DimMismatch, "projecting a set from a different space");
  GF2Set out(dim());
  a.for_each([&](uint32_t p) { out.insert(project_point(p)); });
  return out;
}

Subspace stabilizer(const GF2Set& s) {
  return Subspace::from_generators(s.dim(), period_points(s));
}

uint32_t subspace_coords(const Subspace& h, uint32_t member) {
  const auto& rows = h.basis();
  const int k = h.dim();
  uint32_t c = 0;
  uint32_t rest = member;
  for (int i = 0; i < k; ++i) {
    if ((member >> lead_bit(rows[static_cast<size_t>(i)])) & 1u) {
      c |= 1u << (k - 1 - i);
      rest ^= rows[static_cast<size_t>(i)];
    }
  }
  if (rest) fail(Err::OutOfRange, "subspace_coords argument not a member");
  return c;
}

uint32_t subspace_uncoords(const Subspace& h, uint32_t coords) {
  const auto& rows = h.basis();
  const int k = h.dim();
  uint32_t v = 0;
  for (int i = 0; i < k; ++i)
    if ((coords >> (k - 1 - i)) & 1u) v ^= rows[static_cast<size_t>(i)];
  return v;
}

}  // namespace f2lab
