#pragma once

// Structure pipeline for sigma(A) < 2: split off the stabilizer H of A+A,
// elementarize the quotient image, and rebuild A inside T x F_2^k as a
// Freiman 2-isomorphic product. Certificates carry everything needed to
// re-verify the decomposition from scratch.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "f2lab/freiman.hpp"
#include "f2lab/gf2.hpp"
#include "f2lab/rational.hpp"
#include "f2lab/subspace.hpp"

namespace f2lab {

struct StructureCertificate {
  int ambient_dim = 0;
  Rational sigma;
  Subspace stabilizer_h;
  GF2Set quotient_b;
  int level = 0;  // |B|; 1 or a normal number
  std::optional<GF2Set> elementary_model;  // absent iff level == 1
  std::optional<FreimanMap> iso;           // B -> elementary model
  GF2Set embedded_image;                   // in F_2^{rank(B)} x F_2^{dim H}
  Rational density;                        // |A| / (level * |H|)
  int m_bound = 0;                         // floor(log2(2 / (2 - sigma)))
};

// H = stabilizer(A+A) and B = A's image in F_2^m / H. Asserts the structure
// facts sigma < 2 forces: |B+B| = 2|B|-1 and stabilizer(B+B) trivial.
std::pair<Subspace, GF2Set> decompose(const GF2Set& a);

StructureCertificate classify(const GF2Set& a);

struct VerifyOutcome {
  bool ok = true;
  std::vector<std::string> reasons;
};

// Recomputes every certificate invariant from A and the certificate alone.
VerifyOutcome verify_certificate(const GF2Set& a, const StructureCertificate& cert);

// Fixed field order, lexicographically sorted arrays: byte-stable output.
nlohmann::ordered_json certificate_to_json(const StructureCertificate& cert);
StructureCertificate certificate_from_json(const nlohmann::json& j);

// The embedding A -> T x F_2^k determined by a certificate: quotient part
// through the iso, stabilizer part through the echelon section coordinates.
FreimanMap certificate_embedding(const GF2Set& a, const StructureCertificate& cert);

}  // namespace f2lab
