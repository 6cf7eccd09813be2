#pragma once

// Sets over F_2^m as indicator bit arrays.
//
// Point / coordinate convention (shared with the text file format):
//   - a point of F_2^m is the integer value of its coordinate string,
//     coordinate 1 being the most significant character: e_1 = "10...0" maps
//     to 1 << (m-1), e_m = "0...01" maps to 1.
//   - a GF2Set over F_2^m stores one bit per point, point p at bit p of a
//     packed uint64_t array (bit p%64 of word p/64).
//   - lexicographic order on coordinate strings is numeric order on points.
//
// Addition is coordinatewise XOR, so translating a set by t permutes the bit
// array by p -> p^t. That permutation factors into word-level swaps (high
// bits of t) and in-word delta swaps (low 6 bits), which is what makes the
// sumset loop run at word speed.

#include <cstdint>
#include <string>
#include <vector>

#include "f2lab/errors.hpp"
#include "f2lab/rational.hpp"

namespace f2lab {

namespace detail {

inline constexpr uint64_t kDeltaMask[6] = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
    0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull,
};

// Applies the in-word part of the index permutation p -> p ^ lo, lo < 64.
inline uint64_t xor_permute_word(uint64_t w, uint32_t lo) {
  for (int j = 0; j < 6; ++j) {
    if (lo & (1u << j)) {
      const int s = 1 << j;
      const uint64_t m = kDeltaMask[j];
      w = ((w & m) << s) | ((w >> s) & m);
    }
  }
  return w;
}

}  // namespace detail

std::string bitstring(int dim, uint32_t v);
uint32_t parse_bitstring(int dim, const std::string& s);  // throws Err::Parse

class GF2Set {
 public:
  GF2Set() : dim_(0), words_(1, 0) {}
  explicit GF2Set(int dim);

  static GF2Set full(int dim);
  static GF2Set of(int dim, std::initializer_list<uint32_t> pts);
  static GF2Set from_points(int dim, const std::vector<uint32_t>& pts);

  int dim() const { return dim_; }
  uint64_t universe() const { return 1ull << dim_; }

  bool contains(uint32_t p) const {
    return (words_[p >> 6] >> (p & 63)) & 1ull;
  }
  void insert(uint32_t p);
  void erase(uint32_t p);

  size_t cardinality() const;
  bool empty() const;
  uint32_t min_element() const;  // throws Err::EmptySet
  std::vector<uint32_t> elements() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (size_t w = 0; w < words_.size(); ++w) {
      uint64_t x = words_[w];
      while (x) {
        fn(static_cast<uint32_t>((w << 6) + __builtin_ctzll(x)));
        x &= x - 1;
      }
    }
  }

  // The image of this set under p -> p ^ t.
  GF2Set translated(uint32_t t) const;
  // True iff translating by t maps the set onto itself (t is a period).
  bool is_period(uint32_t t) const;

  GF2Set operator|(const GF2Set& o) const;
  GF2Set operator&(const GF2Set& o) const;
  GF2Set minus(const GF2Set& o) const;
  GF2Set complement() const;
  bool intersects(const GF2Set& o) const;

  bool operator==(const GF2Set& o) const { return dim_ == o.dim_ && words_ == o.words_; }
  bool operator!=(const GF2Set& o) const { return !(*this == o); }
  bool operator<(const GF2Set& o) const {  // total order for deterministic sorts
    if (dim_ != o.dim_) return dim_ < o.dim_;
    for (size_t i = words_.size(); i-- > 0;)
      if (words_[i] != o.words_[i]) return words_[i] < o.words_[i];
    return false;
  }

  const std::vector<uint64_t>& words() const { return words_; }
  std::vector<uint64_t>& words() { return words_; }

 private:
  void check_point(uint32_t p) const;

  int dim_;
  std::vector<uint64_t> words_;  // (1 << dim) bits; unused tail bits are zero
};

// In-place union with the translate B ^ t; A and B must share a dimension.
void or_translated(GF2Set& acc, const GF2Set& b, uint32_t t);

// {a + a' : a, a' in A}. Errors on the empty set.
GF2Set sumset(const GF2Set& a);

// |A+A| / |A| as an exact reduced fraction.
Rational doubling_constant(const GF2Set& a);

// The period group {h : S + h = S}, returned as sorted points including 0.
// (subspace.hpp wraps this into a canonical Subspace.)
std::vector<uint32_t> period_points(const GF2Set& s);

// Construction helpers used by witnesses and tests.
GF2Set simplex(int dim);                       // {0, e_1, ..., e_dim}
GF2Set punctured_cube(int dim);                // F_2^dim minus the all-ones point
GF2Set weight_le_set(int dim, int max_weight); // all points of weight <= max_weight
// Cartesian product; the left factor occupies the high coordinates.
GF2Set product_set(const GF2Set& a, const GF2Set& b);

// A linear map F_2^{dim_in} -> F_2^{dim_out}, stored as images of e_1..e_in.
struct LinearMap {
  int dim_in = 0;
  int dim_out = 0;
  std::vector<uint32_t> basis_image;  // basis_image[i-1] = image of e_i

  uint32_t apply(uint32_t v) const {
    uint32_t r = 0;
    for (int i = 0; i < dim_in; ++i)
      if (v & (1u << (dim_in - 1 - i))) r ^= basis_image[i];
    return r;
  }
  GF2Set apply(const GF2Set& a) const;
  bool invertible() const;
};

}  // namespace f2lab
