#include "f2lab/classify.hpp"

#include <algorithm>
#include <bit>

#include "f2lab/normal.hpp"

namespace f2lab {

namespace {

const Rational kTwo(2);

// Largest m with 2^m * (2 - sigma) <= 2, i.e. floor(log2(2 / (2 - sigma))).
int density_dim_bound(const Rational& sigma) {
  int m = 0;
  while (Rational(1ll << (m + 1)) * (kTwo - sigma) <= kTwo) ++m;
  return m;
}

}  // namespace

std::pair<Subspace, GF2Set> decompose(const GF2Set& a) {
  if (a.empty()) fail(Err::EmptySet, "decompose of empty set");
  if (doubling_constant(a) >= kTwo)
    fail(Err::SigmaTooLarge, "decompose needs sigma < 2");
  Subspace h = stabilizer(sumset(a));
  const Quotient q(a.dim(), h);
  GF2Set b = q.project(a);
  const uint64_t level = b.cardinality();
  const GF2Set bb = sumset(b);
  if (bb.cardinality() != 2 * level - 1)
    fail(Err::StructureViolation, "quotient image has |B+B| != 2|B|-1");
  if (stabilizer(bb).dim() != 0)
    fail(Err::StructureViolation, "quotient sumset still has a nontrivial period");
  return {std::move(h), std::move(b)};
}

StructureCertificate classify(const GF2Set& a) {
  StructureCertificate cert;
  cert.ambient_dim = a.dim();
  cert.sigma = doubling_constant(a);
  if (cert.sigma >= kTwo) fail(Err::SigmaTooLarge, "classification needs sigma < 2");
  auto [h, b] = decompose(a);
  cert.stabilizer_h = std::move(h);
  cert.quotient_b = std::move(b);
  cert.level = static_cast<int>(cert.quotient_b.cardinality());

  if (cert.level > 1) {
    auto [model, iso] = elementarize(cert.quotient_b);
    cert.elementary_model = std::move(model);
    cert.iso = std::move(iso);
  }

  const FreimanMap embedding = certificate_embedding(a, cert);
  cert.embedded_image = embedding.image_set();
  if (!is_2_isomorphism(embedding))
    fail(Err::StructureViolation, "product embedding is not a 2-isomorphism");

  const long long h_size = static_cast<long long>(cert.stabilizer_h.cardinality());
  cert.density = Rational(static_cast<long long>(a.cardinality()), cert.level * h_size);
  if (cert.density != Rational(2 * cert.level - 1) / (Rational(cert.level) * cert.sigma))
    fail(Err::StructureViolation, "density identity failed");
  if (cert.density > Rational(1)) fail(Err::StructureViolation, "density above 1");
  cert.m_bound = density_dim_bound(cert.sigma);
  if (cert.level > 1) {
    const int model_dim = cert.elementary_model->dim();
    if (cert.level != (1 << (model_dim - 1)))
      fail(Err::StructureViolation, "elementary model level mismatch");
    if (model_dim > cert.m_bound)
      fail(Err::StructureViolation, "model dimension exceeds the density bound");
  }
  return cert;
}

FreimanMap certificate_embedding(const GF2Set& a, const StructureCertificate& cert) {
  const Quotient q(cert.ambient_dim, cert.stabilizer_h);
  const int k = cert.stabilizer_h.dim();
  const int t_dim = cert.level > 1 ? cert.elementary_model->dim() : 0;
  FreimanMap phi{a, t_dim + k, {}};
  a.for_each([&](uint32_t p) {
    const uint32_t bq = q.project_point(p);
    const uint32_t h_part = p ^ q.lift(bq);  // lies in H by construction
    const uint32_t h_coords = subspace_coords(cert.stabilizer_h, h_part);
    const uint32_t t_part = cert.level > 1 ? cert.iso->image_of(bq) : 0;
    phi.images.emplace_back(p, (t_part << k) | h_coords);
  });
  return phi;
}

VerifyOutcome verify_certificate(const GF2Set& a, const StructureCertificate& cert) {
  VerifyOutcome out;
  auto flag = [&](const std::string& reason) {
    out.ok = false;
    out.reasons.push_back(reason);
  };

  if (a.empty()) {
    flag("empty set");
    return out;
  }
  if (a.dim() != cert.ambient_dim) {
    flag("ambient dimension mismatch");
    return out;
  }
  if (doubling_constant(a) != cert.sigma) flag("sigma mismatch");
  if (cert.sigma >= kTwo) flag("sigma not below 2");

  const GF2Set aa = sumset(a);
  if (stabilizer(aa) != cert.stabilizer_h) flag("stabilizer mismatch");
  const Quotient q(cert.ambient_dim, cert.stabilizer_h);
  if (q.project(a) != cert.quotient_b) flag("quotient image mismatch");
  const uint64_t level = cert.quotient_b.cardinality();
  if (static_cast<uint64_t>(cert.level) != level) flag("level mismatch");
  if (sumset(cert.quotient_b).cardinality() != 2 * level - 1)
    flag("quotient image is not normal");

  if ((cert.level == 1) != !cert.elementary_model.has_value())
    flag("elementary model presence inconsistent with level");
  if ((cert.level == 1) != !cert.iso.has_value())
    flag("isomorphism presence inconsistent with level");

  if (cert.level > 1 && cert.elementary_model && cert.iso) {
    const GF2Set& model = *cert.elementary_model;
    const int md = model.dim();
    if (model.cardinality() != (1ull << (md - 1)))
      flag("elementary model is not half its space");
    if (!model.contains(0)) flag("elementary model misses 0");
    for (int i = 0; i < md; ++i)
      if (!model.contains(1u << i)) flag("elementary model misses a basis vector");
    if (sumset(model).cardinality() != 2 * model.cardinality() - 1)
      flag("elementary model is not normal");
    if (cert.iso->domain != cert.quotient_b) flag("iso domain is not B");
    if (cert.iso->image_set() != model) flag("iso image is not the model");
    if (!is_2_isomorphism(*cert.iso)) flag("iso is not a 2-isomorphism");
  }

  if (out.ok) {
    const FreimanMap embedding = certificate_embedding(a, cert);
    if (embedding.image_set() != cert.embedded_image) flag("embedded image mismatch");
    else if (!is_2_isomorphism(embedding)) flag("embedding is not a 2-isomorphism");
  }

  const long long h_size = static_cast<long long>(cert.stabilizer_h.cardinality());
  if (cert.density != Rational(static_cast<long long>(a.cardinality()), cert.level * h_size))
    flag("density mismatch");
  if (cert.density > Rational(1)) flag("density above 1");
  if (cert.m_bound != density_dim_bound(cert.sigma)) flag("m_bound mismatch");
  if (cert.level > 1 && cert.elementary_model &&
      cert.elementary_model->dim() > cert.m_bound)
    flag("model dimension exceeds the density bound");
  return out;
}

namespace {

std::vector<std::string> sorted_bitstrings(int dim, const std::vector<uint32_t>& pts) {
  std::vector<uint32_t> sorted = pts;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::string> out;
  out.reserve(sorted.size());
  for (uint32_t p : sorted) out.push_back(bitstring(dim, p));
  return out;
}

}  // namespace

nlohmann::ordered_json certificate_to_json(const StructureCertificate& cert) {
  nlohmann::ordered_json j;
  j["ambient_dim"] = cert.ambient_dim;
  j["sigma"] = {cert.sigma.num(), cert.sigma.den()};
  j["H_basis"] = sorted_bitstrings(cert.ambient_dim, cert.stabilizer_h.basis());
  j["B"] = sorted_bitstrings(cert.quotient_b.dim(), cert.quotient_b.elements());
  j["level"] = cert.level;
  if (cert.elementary_model)
    j["elementary_model"] =
        sorted_bitstrings(cert.elementary_model->dim(), cert.elementary_model->elements());
  if (cert.iso) {
    nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
    for (const auto& [pre, img] : cert.iso->images)
      pairs.push_back({bitstring(cert.iso->domain.dim(), pre),
                       bitstring(cert.iso->codomain_dim, img)});
    j["iso"] = std::move(pairs);
  }
  j["embedded_image"] =
      sorted_bitstrings(cert.embedded_image.dim(), cert.embedded_image.elements());
  j["density"] = {cert.density.num(), cert.density.den()};
  j["m_bound"] = cert.m_bound;
  return j;
}

StructureCertificate certificate_from_json(const nlohmann::json& j) {
  StructureCertificate cert;
  cert.ambient_dim = j.at("ambient_dim").get<int>();
  cert.sigma = Rational(j.at("sigma").at(0).get<long long>(),
                        j.at("sigma").at(1).get<long long>());
  std::vector<uint32_t> h_rows;
  for (const auto& s : j.at("H_basis"))
    h_rows.push_back(parse_bitstring(cert.ambient_dim, s.get<std::string>()));
  cert.stabilizer_h = Subspace::from_generators(cert.ambient_dim, h_rows);

  const int q_dim = cert.ambient_dim - cert.stabilizer_h.dim();
  cert.quotient_b = GF2Set(q_dim);
  for (const auto& s : j.at("B"))
    cert.quotient_b.insert(parse_bitstring(q_dim, s.get<std::string>()));
  cert.level = j.at("level").get<int>();

  if (j.contains("elementary_model")) {
    const auto& arr = j.at("elementary_model");
    const int md = static_cast<int>(arr.at(0).get<std::string>().size());
    GF2Set model(md);
    for (const auto& s : arr) model.insert(parse_bitstring(md, s.get<std::string>()));
    cert.elementary_model = std::move(model);
  }
  if (j.contains("iso")) {
    FreimanMap iso{cert.quotient_b, cert.elementary_model->dim(), {}};
    for (const auto& pair : j.at("iso"))
      iso.images.emplace_back(parse_bitstring(q_dim, pair.at(0).get<std::string>()),
                              parse_bitstring(iso.codomain_dim, pair.at(1).get<std::string>()));
    std::sort(iso.images.begin(), iso.images.end());
    cert.iso = std::move(iso);
  }

  const int e_dim = (cert.level > 1 ? cert.elementary_model->dim() : 0) +
                    cert.stabilizer_h.dim();
  cert.embedded_image = GF2Set(e_dim);
  for (const auto& s : j.at("embedded_image"))
    cert.embedded_image.insert(parse_bitstring(e_dim, s.get<std::string>()));
  cert.density = Rational(j.at("density").at(0).get<long long>(),
                          j.at("density").at(1).get<long long>());
  cert.m_bound = j.at("m_bound").get<int>();
  return cert;
}

}  // namespace f2lab
