#include "f2lab/freiman.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "f2lab/config.hpp"
#include "f2lab/subspace.hpp"

namespace f2lab {

namespace {

int ceil_log2(uint64_t x) { return x <= 1 ? 0 : std::bit_width(x - 1); }

// Partial bijection between sum values with support counts, so pair
// constraints can be retracted during backtracking.
class SumCorrespondence {
 public:
  bool add(uint32_t s, uint32_t sp) {
    auto f = fwd_.find(s);
    if (f != fwd_.end()) {
      if (f->second.first != sp) return false;
      ++f->second.second;
      return true;
    }
    if (rev_.count(sp)) return false;
    fwd_.emplace(s, std::make_pair(sp, 1));
    rev_.emplace(sp, s);
    return true;
  }
  void remove(uint32_t s, uint32_t sp) {
    auto f = fwd_.find(s);
    if (--f->second.second == 0) {
      fwd_.erase(f);
      rev_.erase(sp);
    }
  }

 private:
  std::unordered_map<uint32_t, std::pair<uint32_t, int>> fwd_;
  std::unordered_map<uint32_t, uint32_t> rev_;
};

// Pushes pair constraints (t_k + t_j -> v + img_j) for j = 0..k-1; on
// conflict undoes what it added and reports failure.
bool push_element(SumCorrespondence& corr, const std::vector<uint32_t>& pts,
                  const std::vector<uint32_t>& imgs, size_t k, uint32_t v) {
  for (size_t j = 0; j < k; ++j) {
    if (!corr.add(pts[k] ^ pts[j], v ^ imgs[j])) {
      while (j-- > 0) corr.remove(pts[k] ^ pts[j], v ^ imgs[j]);
      return false;
    }
  }
  return true;
}

void pop_element(SumCorrespondence& corr, const std::vector<uint32_t>& pts,
                 const std::vector<uint32_t>& imgs, size_t k, uint32_t v) {
  for (size_t j = 0; j < k; ++j) corr.remove(pts[k] ^ pts[j], v ^ imgs[j]);
}

// Per-element degree profile: the sorted multiset of pair-class sizes met by
// the element. Invariant under 2-isomorphism, cheap to compare.
std::vector<std::vector<int>> degree_profiles(const std::vector<uint32_t>& pts) {
  std::unordered_map<uint32_t, int> class_size;
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i; j < pts.size(); ++j) ++class_size[pts[i] ^ pts[j]];
  std::vector<std::vector<int>> prof(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) {
    prof[i].reserve(pts.size());
    for (uint32_t b : pts) prof[i].push_back(class_size.at(pts[i] ^ b));
    std::sort(prof[i].begin(), prof[i].end());
  }
  return prof;
}

// Echelon basis over generator-index space (up to 64 coordinates).
struct EchelonU64 {
  std::vector<uint64_t> rows;  // leading bits descending, reduced

  uint64_t reduce(uint64_t v) const {
    for (uint64_t r : rows) {
      const uint64_t x = v ^ r;
      if (x < v) v = x;
    }
    return v;
  }
  bool insert(uint64_t v) {
    v = reduce(v);
    if (!v) return false;
    const int p = 63 - std::countl_zero(v);
    for (uint64_t& r : rows)
      if ((r >> p) & 1ull) r ^= v;
    auto it = std::upper_bound(rows.begin(), rows.end(), v, std::greater<uint64_t>());
    rows.insert(it, v);
    return true;
  }
};

}  // namespace

PairSumPartition PairSumPartition::of(const GF2Set& t) {
  const auto pts = t.elements();
  std::unordered_map<uint32_t, std::vector<std::pair<uint32_t, uint32_t>>> by_sum;
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i; j < pts.size(); ++j)
      by_sum[pts[i] ^ pts[j]].emplace_back(pts[i], pts[j]);
  PairSumPartition out;
  out.classes.reserve(by_sum.size());
  for (auto& [sum, pairs] : by_sum) {
    std::sort(pairs.begin(), pairs.end());
    out.classes.push_back({sum, std::move(pairs)});
  }
  std::sort(out.classes.begin(), out.classes.end(),
            [](const Class& a, const Class& b) { return a.sum < b.sum; });
  return out;
}

size_t PairSumPartition::pair_count() const {
  size_t n = 0;
  for (const auto& c : classes) n += c.pairs.size();
  return n;
}

FreimanMap FreimanMap::identity(const GF2Set& t) {
  FreimanMap phi{t, t.dim(), {}};
  t.for_each([&](uint32_t p) { phi.images.emplace_back(p, p); });
  return phi;
}

bool FreimanMap::total() const {
  if (images.size() != domain.cardinality()) return false;
  for (const auto& [pre, img] : images) {
    (void)img;
    if (!domain.contains(pre)) return false;
  }
  return true;
}

uint32_t FreimanMap::image_of(uint32_t preimage) const {
  auto it = std::lower_bound(images.begin(), images.end(), preimage,
                             [](const auto& kv, uint32_t p) { return kv.first < p; });
  if (it == images.end() || it->first != preimage)
    fail(Err::OutOfRange, "element has no image under the map");
  return it->second;
}

GF2Set FreimanMap::image_set() const {
  GF2Set out(codomain_dim);
  for (const auto& [pre, img] : images) {
    (void)pre;
    out.insert(img);
  }
  return out;
}

bool is_2_isomorphism(const FreimanMap& phi) {
  if (!phi.total()) return false;
  const size_t n = phi.images.size();
  std::vector<uint32_t> pts(n), imgs(n);
  for (size_t i = 0; i < n; ++i) {
    pts[i] = phi.images[i].first;
    imgs[i] = phi.images[i].second;
  }
  {  // bijectivity onto the image
    std::vector<uint32_t> sorted = imgs;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  }
  SumCorrespondence corr;
  for (size_t k = 0; k < n; ++k)
    if (!push_element(corr, pts, imgs, k, imgs[k])) return false;
  return true;
}

std::optional<FreimanMap> find_2_isomorphism(const GF2Set& t1, const GF2Set& t2) {
  const auto p1 = t1.elements();
  const auto p2 = t2.elements();
  if (p1.size() != p2.size()) return std::nullopt;
  if (p1.empty()) return FreimanMap{t1, t2.dim(), {}};
  if (sumset(t1).cardinality() != sumset(t2).cardinality()) return std::nullopt;

  const auto prof1 = degree_profiles(p1);
  const auto prof2 = degree_profiles(p2);
  {
    auto m1 = prof1, m2 = prof2;
    std::sort(m1.begin(), m1.end());
    std::sort(m2.begin(), m2.end());
    if (m1 != m2) return std::nullopt;
  }

  const size_t n = p1.size();
  std::vector<uint32_t> imgs(n, 0);
  std::vector<bool> used(n, false);
  SumCorrespondence corr;

  auto dfs = [&](auto&& self, size_t k) -> bool {
    if (k == n) return true;
    for (size_t c = 0; c < n; ++c) {
      if (used[c] || prof2[c] != prof1[k]) continue;
      if (!push_element(corr, p1, imgs, k, p2[c])) continue;
      imgs[k] = p2[c];
      used[c] = true;
      if (self(self, k + 1)) return true;
      used[c] = false;
      pop_element(corr, p1, imgs, k, p2[c]);
    }
    return false;
  };
  if (!dfs(dfs, 0)) return std::nullopt;

  FreimanMap phi{t1, t2.dim(), {}};
  for (size_t i = 0; i < n; ++i) phi.images.emplace_back(p1[i], imgs[i]);
  std::sort(phi.images.begin(), phi.images.end());
  return phi;
}

FreimanMap UniversalModel::as_map(const GF2Set& t) const {
  return FreimanMap{t, model_dim, embedding};
}

UniversalModel universal_model(const GF2Set& t) {
  const auto pts = t.elements();
  const size_t n = pts.size();
  if (n < 2) fail(Err::Singleton, "universal model needs |T| >= 2");
  if (n - 1 > 64) fail(Err::ResourceLimit, "universal model limited to |T| <= 65");

  // Generator for pts[g+1] is bit (n-2-g); the least element has no generator.
  std::unordered_map<uint32_t, size_t> index;
  for (size_t i = 0; i < n; ++i) index.emplace(pts[i], i);
  auto chi = [&](uint32_t a) -> uint64_t {
    const size_t i = index.at(a);
    return i == 0 ? 0ull : 1ull << (n - 1 - i);
  };

  // Quadruple relations, one spanning set per pair-sum class.
  std::unordered_map<uint32_t, uint64_t> first_in_class;
  EchelonU64 relations;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j) {
      const uint32_t s = pts[i] ^ pts[j];
      const uint64_t v = chi(pts[i]) ^ chi(pts[j]);
      auto [it, fresh] = first_in_class.emplace(s, v);
      if (!fresh) relations.insert(it->second ^ v);
    }

  UniversalModel um;
  um.base_point = pts[0];
  um.relation_rank = static_cast<int>(relations.rows.size());
  um.model_dim = static_cast<int>(n - 1) - um.relation_rank;
  if (um.model_dim > limits().max_dim)
    fail(Err::ResourceLimit, "universal model dimension exceeds ambient guard");

  // Non-pivot generator coordinates carry the quotient, highest bit first.
  uint64_t pivot_mask = 0;
  for (uint64_t r : relations.rows) pivot_mask |= 1ull << (63 - std::countl_zero(r));
  std::vector<int> free_bits;
  for (int b = static_cast<int>(n) - 2; b >= 0; --b)
    if (!((pivot_mask >> b) & 1ull)) free_bits.push_back(b);

  auto project = [&](uint64_t v) -> uint32_t {
    v = relations.reduce(v);
    uint32_t q = 0;
    for (size_t j = 0; j < free_bits.size(); ++j)
      if ((v >> free_bits[j]) & 1ull) q |= 1u << (free_bits.size() - 1 - j);
    return q;
  };

  um.embedding.reserve(n);
  for (uint32_t p : pts) um.embedding.emplace_back(p, project(chi(p)));

  // forbidden = (D + D) \ {0} where D = {psi(a)+psi(b)}.
  GF2Set diffs(um.model_dim);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j)
      diffs.insert(um.embedding[i].second ^ um.embedding[j].second);
  um.forbidden = sumset(diffs);
  um.forbidden.erase(0);

  if (!is_2_isomorphism(um.as_map(t)))
    fail(Err::StructureViolation, "universal model is not 2-isomorphic to its set");
  return um;
}

namespace {

// Largest dimension of a subspace of F_2^M meeting `forbidden` only at 0.
// Subspaces are enumerated once each via their canonical increasing chain of
// minimal new elements; v extends a chain iff it is the canonical coset
// representative modulo the current span.
int max_avoiding_dim(int model_dim, const GF2Set& forbidden) {
  const uint32_t space = 1u << model_dim;
  GF2Set span(model_dim);
  span.insert(0);
  Subspace echelon(model_dim);
  int best = 0;

  auto dfs = [&](auto&& self, uint32_t from) -> void {
    best = std::max(best, echelon.dim());
    for (uint32_t v = from; v < space; ++v) {
      if (echelon.reduce(v) != v || forbidden.contains(v)) continue;
      GF2Set grown = span | span.translated(v);
      if (grown.intersects(forbidden)) continue;
      GF2Set saved_span = std::move(span);
      Subspace saved_ech = echelon;
      span = std::move(grown);
      echelon.extend(v);
      self(self, v + 1);
      span = std::move(saved_span);
      echelon = std::move(saved_ech);
    }
  };
  dfs(dfs, 1);
  return best;
}

int rank_universal(const GF2Set& t) {
  const UniversalModel um = universal_model(t);
  if (um.model_dim > limits().universal_rank_dim)
    fail(Err::ResourceLimit, "universal rank guarded at model_dim <= " +
                                 std::to_string(limits().universal_rank_dim));
  return um.model_dim - max_avoiding_dim(um.model_dim, um.forbidden);
}

int rank_search(const GF2Set& t) {
  const int lo = ceil_log2(sumset(t).cardinality());
  const int hi = static_cast<int>(affine_hull(t).direction.dim());
  for (int m = lo; m <= hi; ++m)
    if (rank_embedding(t, m)) return m;
  fail(Err::StructureViolation, "embedding search missed the affine-span dimension");
}

}  // namespace

std::optional<FreimanMap> rank_embedding(const GF2Set& t, int m) {
  const auto pts = t.elements();
  const size_t n = pts.size();
  if (n < 2) fail(Err::Singleton, "rank embedding needs |T| >= 2");
  if (static_cast<uint64_t>(n) > (1ull << m)) return std::nullopt;

  std::vector<uint32_t> imgs(n, 0);
  std::vector<bool> used(1ull << m, false);
  std::vector<uint32_t> span_sorted{0};  // image span so far, ascending
  SumCorrespondence corr;
  push_element(corr, pts, imgs, 0, 0);  // least element anchored at 0
  used[0] = true;

  // Dependent candidates range over the current image span; the single fresh
  // candidate is forced to the next standard basis vector, which quotients
  // out GL symmetry without losing completeness.
  auto dfs = [&](auto&& self, size_t k, int rank_so_far) -> bool {
    if (k == n) return true;
    auto try_value = [&](uint32_t v, bool fresh) -> bool {
      if (used[v] || !push_element(corr, pts, imgs, k, v)) return false;
      imgs[k] = v;
      used[v] = true;
      std::vector<uint32_t> saved_span;
      if (fresh) {
        saved_span = span_sorted;
        std::vector<uint32_t> grown;
        grown.reserve(span_sorted.size() * 2);
        std::vector<uint32_t> shifted(span_sorted);
        for (uint32_t& x : shifted) x ^= v;
        std::sort(shifted.begin(), shifted.end());
        std::merge(span_sorted.begin(), span_sorted.end(), shifted.begin(), shifted.end(),
                   std::back_inserter(grown));
        span_sorted = std::move(grown);
      }
      if (self(self, k + 1, rank_so_far + (fresh ? 1 : 0))) return true;
      if (fresh) span_sorted = std::move(saved_span);
      used[v] = false;
      pop_element(corr, pts, imgs, k, v);
      return false;
    };
    for (uint32_t v : span_sorted)
      if (try_value(v, false)) return true;
    if (rank_so_far < m && try_value(1u << (m - 1 - rank_so_far), true)) return true;
    return false;
  };
  if (!dfs(dfs, 1, 0)) return std::nullopt;

  FreimanMap phi{t, m, {}};
  for (size_t i = 0; i < n; ++i) phi.images.emplace_back(pts[i], imgs[i]);
  std::sort(phi.images.begin(), phi.images.end());
  return phi;
}

int rank(const GF2Set& t, RankMethod method) {
  if (t.cardinality() < 2) fail(Err::Singleton, "rank needs |T| >= 2");
  switch (method) {
    case RankMethod::universal:
      return rank_universal(t);
    case RankMethod::search:
      return rank_search(t);
    case RankMethod::both: {
      const int rs = rank_search(t);
      std::optional<int> ru;
      try {
        ru = rank_universal(t);
      } catch (const F2Error& e) {
        if (e.code() != Err::ResourceLimit) throw;  // guard trip: search decides
      }
      if (ru && *ru != rs)
        fail(Err::Disagreement, "rank methods disagree: universal=" + std::to_string(*ru) +
                                    " search=" + std::to_string(rs));
      return rs;
    }
  }
  fail(Err::OutOfRange, "bad rank method");
}

int rank_lower_bound(const GF2Set& t) {
  if (t.empty()) fail(Err::EmptySet, "rank lower bound of empty set");
  return ceil_log2(sumset(t).cardinality());
}

}  // namespace f2lab
