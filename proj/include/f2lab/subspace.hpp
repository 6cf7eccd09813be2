#pragma once

// Linear and affine subspaces of F_2^m in canonical form.
//
// A Subspace keeps its basis in reduced row-echelon form: rows are ordered by
// strictly decreasing leading bit, and each leading bit is zero in every other
// row. That basis is unique per subspace, so equality is vector equality and
// reduce() maps every point to the lexicographically least member of its
// coset (which also anchors AffineSubspace representatives).

#include <cstdint>
#include <vector>

#include "f2lab/gf2.hpp"

namespace f2lab {

class Subspace {
 public:
  Subspace() : ambient_(0) {}
  explicit Subspace(int ambient_dim) : ambient_(ambient_dim) {}

  static Subspace zero(int ambient_dim) { return Subspace(ambient_dim); }
  static Subspace full_space(int ambient_dim);
  static Subspace from_generators(int ambient_dim, const std::vector<uint32_t>& gens);
  static Subspace span_of(const GF2Set& a);  // smallest subspace containing a

  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  uint64_t cardinality() const { return 1ull << dim(); }
  const std::vector<uint32_t>& basis() const { return rows_; }

  // Canonical representative of v + V (the least element of the coset).
  uint32_t reduce(uint32_t v) const {
    for (uint32_t r : rows_) {
      uint32_t x = v ^ r;
      if (x < v) v = x;
    }
    return v;
  }
  bool contains(uint32_t v) const { return reduce(v) == 0; }
  bool contains(const Subspace& other) const;

  // Inserts one generator, keeping the reduced echelon invariant.
  // Returns false if the vector was already in the span.
  bool extend(uint32_t v);

  std::vector<uint32_t> elements() const;  // sorted ascending
  GF2Set element_set() const;

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && rows_ == o.rows_;
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

 private:
  int ambient_;
  std::vector<uint32_t> rows_;  // reduced echelon, leading bits descending
};

struct AffineSubspace {
  uint32_t base = 0;  // lexicographically least member
  Subspace direction;

  uint64_t cardinality() const { return direction.cardinality(); }
  bool contains(uint32_t v) const { return direction.contains(v ^ base); }
  bool operator==(const AffineSubspace& o) const {
    return base == o.base && direction == o.direction;
  }
};

// Smallest affine subspace containing A (errors on the empty set) and the
// smallest linear subspace containing A (empty set gives the zero space).
AffineSubspace affine_hull(const GF2Set& a);
Subspace linear_span(const GF2Set& a);

// Number of distinct cosets of V meeting A.
int cosets_meeting(const GF2Set& a, const Subspace& v);

// The quotient F_2^m / H together with a fixed linear section. Coordinates of
// the quotient are the non-pivot coordinate positions of H's echelon basis,
// kept in increasing position order.
class Quotient {
 public:
  Quotient(int ambient_dim, Subspace h);

  int ambient_dim() const { return ambient_; }
  int dim() const { return ambient_ - modulus_.dim(); }
  const Subspace& modulus() const { return modulus_; }
  // 1-based coordinate positions forming the transversal, increasing.
  const std::vector<int>& rep_coords() const { return rep_coords_; }

  uint32_t project_point(uint32_t v) const;
  uint32_t lift(uint32_t q) const;  // linear section; project(lift(q)) == q
  GF2Set project(const GF2Set& a) const;

 private:
  int ambient_;
  Subspace modulus_;
  std::vector<int> rep_coords_;
  std::vector<int> rep_bits_;  // bit positions matching rep_coords_
};

// The period group of S as a canonical subspace (Kneser stabilizer).
Subspace stabilizer(const GF2Set& s);

// Coordinate chart H -> F_2^{dim H} reading off echelon-basis coefficients.
uint32_t subspace_coords(const Subspace& h, uint32_t member);
uint32_t subspace_uncoords(const Subspace& h, uint32_t coords);

}  // namespace f2lab
