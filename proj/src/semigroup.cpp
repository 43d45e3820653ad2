#include <mink/semigroup.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>

namespace mink {
namespace {

// ---------------------------------------------------------------------------
// Packed point stores.
//
// The k-fold sumset S_k of P's lattice points is, by definition, exactly the
// set of points that decompose into k lattice points of P, and S_k is
// contained in kP. The checks below therefore enumerate integer candidates of
// the dilate and classify each by an S_k lookup, falling back to one exact LP
// per candidate that misses the certificate set. Sumsets are materialised in
// flat int64 buffers (magnitudes are pre-checked, so packing is exact).
// ---------------------------------------------------------------------------

struct PointStore {
  int dim = 0;
  std::vector<int64_t> flat;  // row-major, lex-sorted, deduplicated

  size_t size() const { return dim == 0 ? 0 : flat.size() / static_cast<size_t>(dim); }
  const int64_t* row(size_t i) const { return flat.data() + i * static_cast<size_t>(dim); }

  static int compare_rows(const int64_t* a, const int64_t* b, int d) {
    for (int i = 0; i < d; ++i)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }

  bool contains(const int64_t* q) const {
    size_t lo = 0, hi = size();
    while (lo < hi) {
      size_t mid = lo + (hi - lo) / 2;
      int c = compare_rows(row(mid), q, dim);
      if (c == 0) return true;
      c < 0 ? lo = mid + 1 : hi = mid;
    }
    return false;
  }
};

void sort_dedupe(PointStore& s) {
  const int d = s.dim;
  const size_t n = s.size();
  std::vector<size_t> idx(n);
  for (size_t i = 0; i < n; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    return PointStore::compare_rows(s.row(a), s.row(b), d) < 0;
  });
  std::vector<int64_t> out;
  out.reserve(s.flat.size());
  for (size_t i = 0; i < n; ++i) {
    const int64_t* r = s.row(idx[i]);
    if (!out.empty() &&
        PointStore::compare_rows(out.data() + (out.size() - static_cast<size_t>(d)), r, d) == 0)
      continue;
    out.insert(out.end(), r, r + d);
  }
  s.flat = std::move(out);
}

PointStore merge_union(const PointStore& a, const PointStore& b) {
  PointStore out;
  out.dim = a.dim != 0 ? a.dim : b.dim;
  const int d = out.dim;
  out.flat.reserve(a.flat.size() + b.flat.size());
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = PointStore::compare_rows(a.row(i), b.row(j), d);
    const int64_t* r = c <= 0 ? a.row(i) : b.row(j);
    out.flat.insert(out.flat.end(), r, r + d);
    if (c <= 0) ++i;
    if (c >= 0) ++j;
  }
  for (; i < a.size(); ++i) out.flat.insert(out.flat.end(), a.row(i), a.row(i) + d);
  for (; j < b.size(); ++j) out.flat.insert(out.flat.end(), b.row(j), b.row(j) + d);
  return out;
}

// memory cap for one un-deduplicated product block (int64 entries)
constexpr size_t kProductEntryBudget = 8'000'000;

// all pairwise row sums of a and b, sorted and deduplicated, built in
// bounded-size blocks so the intermediate product never spikes memory
PointStore pairwise_sums(const PointStore& a, const PointStore& b) {
  PointStore acc;
  acc.dim = a.dim != 0 ? a.dim : b.dim;
  const int d = acc.dim;
  if (a.size() == 0 || b.size() == 0 || d == 0) return acc;
  const size_t rows_per_block =
      std::max<size_t>(1, kProductEntryBudget / static_cast<size_t>(d) / b.size());
  for (size_t a0 = 0; a0 < a.size(); a0 += rows_per_block) {
    const size_t a1 = std::min(a.size(), a0 + rows_per_block);
    PointStore blk;
    blk.dim = d;
    blk.flat.reserve((a1 - a0) * b.size() * static_cast<size_t>(d));
    for (size_t i = a0; i < a1; ++i) {
      const int64_t* ra = a.row(i);
      for (size_t j = 0; j < b.size(); ++j) {
        const int64_t* rb = b.row(j);
        for (int t = 0; t < d; ++t) blk.flat.push_back(ra[t] + rb[t]);
      }
    }
    sort_dedupe(blk);
    acc = acc.size() == 0 ? std::move(blk) : merge_union(acc, blk);
  }
  return acc;
}

const BigInt kPackLimit = BigInt(1) << 61;

// exact packing; nullopt when a coordinate exceeds the packable range (such a
// point cannot lie in any store built under the magnitude guard)
std::optional<std::vector<int64_t>> pack_point(const LatticePoint& x) {
  std::vector<int64_t> out;
  out.reserve(x.size());
  for (const BigInt& v : x) {
    if (v > kPackLimit || v < -kPackLimit) return std::nullopt;
    out.push_back(v.convert_to<int64_t>());
  }
  return out;
}

PointStore pack_sorted_points(const std::vector<LatticePoint>& pts, int dim) {
  PointStore s;
  s.dim = dim;
  s.flat.reserve(pts.size() * static_cast<size_t>(dim));
  for (const auto& p : pts)
    for (const BigInt& v : p) s.flat.push_back(v.convert_to<int64_t>());
  return s;
}

// Lazily materialised fold sumsets of one polytope's lattice points.
class SumsetEngine {
 public:
  // max_fold: largest multiple of the base coordinate magnitude that must
  // stay packable (covers both sumset layers and dilate scan candidates)
  SumsetEngine(const LatticePolytope& p, int max_fold)
      : base_(lattice_points(p)), dim_(p.ambient_dim) {
    BigInt mag = 0;
    for (const auto& pt : base_)
      for (const BigInt& v : pt) {
        BigInt a = abs(v);
        if (a > mag) mag = a;
      }
    packed_ = mag * (std::max(max_fold, 1) + 1) <= kPackLimit;
    if (packed_) layers_.push_back(pack_sorted_points(base_, dim_));
  }

  bool packed() const { return packed_; }
  const std::vector<LatticePoint>& base() const { return base_; }

  // k-fold sumset store; pre: packed()
  const PointStore& layer(int k) {
    while (static_cast<int>(layers_.size()) < k)
      layers_.push_back(pairwise_sums(layers_.back(), layers_.front()));
    return layers_[static_cast<size_t>(k) - 1];
  }

  // x decomposes into k lattice points of the base polytope; pre: packed()
  bool decomposable(const LatticePoint& x, int k) {
    auto q = pack_point(x);
    if (!q) return false;
    return layer(k).contains(q->data());
  }

 private:
  std::vector<LatticePoint> base_;
  int dim_;
  bool packed_ = false;
  std::vector<PointStore> layers_;
};

// ---------------------------------------------------------------------------
// Exhaustive decomposition search (independent of the sumset certificates):
// depth-first over lex-non-increasing part sequences, each residual pruned by
// the dilate's exact prefilters plus an exact containment LP.
// ---------------------------------------------------------------------------

struct SearchContext {
  const LatticePolytope& poly;
  std::vector<LatticePoint> base;  // ascending lex
  std::map<int, LatticePolytope> dilates;
  std::map<int, BoxScanner> scanners;
  std::map<int, MembershipOracle> oracles;

  explicit SearchContext(const LatticePolytope& p) : poly(p), base(lattice_points(p)) {}

  const LatticePolytope& dilate_of(int n) {
    auto it = dilates.find(n);
    if (it == dilates.end()) it = dilates.emplace(n, dilate(poly, BigInt(n))).first;
    return it->second;
  }

  const BoxScanner& scanner_of(int n) {
    auto it = scanners.find(n);
    if (it == scanners.end()) it = scanners.emplace(n, BoxScanner(dilate_of(n), false)).first;
    return it->second;
  }

  const MembershipOracle& oracle_of(int n) {
    auto it = oracles.find(n);
    if (it == oracles.end()) it = oracles.emplace(n, MembershipOracle(dilate_of(n))).first;
    return it->second;
  }

  bool residual_feasible(const LatticePoint& r, int rem) {
    return scanner_of(rem).admits(r) && oracle_of(rem).test(r, false);
  }

  bool dfs(int rem, size_t cap, LatticePoint& residual, std::vector<size_t>& picks) {
    if (rem == 1) {
      auto it = std::lower_bound(base.begin(), base.end(), residual, lex_less);
      if (it == base.end() || *it != residual) return false;
      size_t idx = static_cast<size_t>(it - base.begin());
      if (idx > cap) return false;
      picks.push_back(idx);
      return true;
    }
    for (size_t ii = cap + 1; ii-- > 0;) {
      const LatticePoint& g = base[ii];
      for (size_t t = 0; t < residual.size(); ++t) residual[t] -= g[t];
      if (residual_feasible(residual, rem - 1)) {
        picks.push_back(ii);
        if (dfs(rem - 1, ii, residual, picks)) {
          for (size_t t = 0; t < residual.size(); ++t) residual[t] += g[t];
          return true;
        }
        picks.pop_back();
      }
      for (size_t t = 0; t < residual.size(); ++t) residual[t] += g[t];
    }
    return false;
  }
};

std::string idp_failure_statement(int k) {
  return "lattice point of the " + std::to_string(k) +
         "-fold dilate admits no decomposition into " + std::to_string(k) +
         " lattice points of the polytope";
}

std::string level_failure_statement(int k) {
  return "interior lattice point of the " + std::to_string(k) +
         "-fold dilate does not split as one interior lattice point plus " +
         std::to_string(k - 1) + " lattice points of the polytope";
}

// shared core of idp_check / normal_check; restrict_to_point_lattice turns on
// the (always-satisfied) affine-lattice filter over kP's own lattice points
CheckReport decomposition_check(const LatticePolytope& p, int max_k, bool restrict_to_point_lattice,
                                const std::string& property) {
  if (max_k < 1) throw std::invalid_argument(property + " check: max_k must be >= 1");
  CheckReport rep;
  rep.property = property;
  rep.verdict = "HOLDS_UP_TO_K";
  rep.verified_up_to_k = max_k;
  SumsetEngine eng(p, max_k);
  for (int k = 2; k <= max_k; ++k) {
    LatticePolytope kp = dilate(p, BigInt(k));
    std::optional<LatticePoint> bad;
    auto decomposes = [&](const LatticePoint& x) {
      if (eng.packed()) return eng.decomposable(x, k);
      return decompose(x, k, p).has_value();
    };
    if (restrict_to_point_lattice) {
      // literal reading: membership is tested against the affine lattice
      // generated by kP's own lattice points (which contains all of them)
      std::vector<LatticePoint> members = lattice_points(kp);
      AffineLattice lat = affine_lattice(members);
      for (const auto& x : members) {
        if (!lat.contains(x)) continue;
        if (!decomposes(x)) {
          bad = x;
          break;
        }
      }
    } else {
      BoxScanner scanner(kp, false);
      MembershipOracle kp_oracle(kp);
      scanner.scan([&](const LatticePoint& x) {
        if (eng.packed() && eng.decomposable(x, k)) return true;
        if (!kp_oracle.test(x, false)) return true;
        if (!eng.packed() && decompose(x, k, p).has_value()) return true;
        bad = x;
        return false;
      });
    }
    if (bad) {
      if (decompose(*bad, k, p).has_value())
        throw std::logic_error(property + " check: certificate and exhaustive search disagree");
      rep.verdict = "FAILS";
      rep.verified_up_to_k = k - 1;
      rep.counterexample = Counterexample{k, *bad, idp_failure_statement(k)};
      return rep;
    }
  }
  return rep;
}

}  // namespace

std::optional<std::vector<LatticePoint>> decompose(const LatticePoint& alpha, int k,
                                                   const LatticePolytope& p) {
  if (k < 1) throw std::invalid_argument("decompose: k must be >= 1");
  if (static_cast<int>(alpha.size()) != p.ambient_dim)
    throw std::invalid_argument("decompose: alpha dimension mismatch");
  if (k == 1) {
    if (contains(p, alpha)) return std::vector<LatticePoint>{alpha};
    return std::nullopt;
  }
  SearchContext ctx(p);
  LatticePoint residual = alpha;
  std::vector<size_t> picks;
  if (!ctx.dfs(k, ctx.base.size() - 1, residual, picks)) return std::nullopt;
  std::vector<LatticePoint> parts;
  parts.reserve(picks.size());
  LatticePoint check(alpha.size(), BigInt(0));
  for (size_t idx : picks) {
    parts.push_back(ctx.base[idx]);
    for (size_t t = 0; t < check.size(); ++t) check[t] += ctx.base[idx][t];
  }
  if (check != alpha) throw std::logic_error("decompose: internal witness mismatch");
  return parts;
}

CheckReport idp_check(const LatticePolytope& p, int max_k) {
  return decomposition_check(p, max_k, false, "IDP");
}

CheckReport normal_check(const LatticePolytope& p, int max_k) {
  return decomposition_check(p, max_k, true, "NORMAL");
}

CheckReport level_check(const std::vector<LatticePolytope>& ps, const std::vector<BigInt>& ns,
                        int max_k) {
  if (ps.empty()) throw std::invalid_argument("level_check: no polytopes");
  if (ps.size() != ns.size()) throw std::invalid_argument("level_check: size mismatch");
  if (max_k < 1) throw std::invalid_argument("level_check: max_k must be >= 1");
  std::vector<LatticePolytope> scaled;
  scaled.reserve(ps.size());
  for (size_t i = 0; i < ps.size(); ++i) {
    if (ns[i] < 1) throw std::invalid_argument("level_check: factors must be >= 1");
    scaled.push_back(dilate(ps[i], ns[i]));
  }
  LatticePolytope q = minkowski_sum(scaled);

  CheckReport rep;
  rep.property = "LEVEL";
  rep.verdict = "HOLDS_UP_TO_K";
  rep.verified_up_to_k = max_k;

  SumsetEngine eng(q, max_k);  // layers only reach k-1 but scan candidates reach max_k
  std::vector<LatticePoint> interior = relint_lattice_points(q);
  PointStore interior_store;
  if (eng.packed()) interior_store = pack_sorted_points(interior, q.ambient_dim);

  // exhaustive fallback / defensive re-check: x = beta + (k-1 parts), beta interior
  auto splits_exhaustive = [&](const LatticePoint& x, int k) {
    for (const auto& beta : interior) {
      LatticePoint r = sub(x, beta);
      if (k == 1) {
        if (is_zero(r)) return true;
      } else if (decompose(r, k - 1, q).has_value()) {
        return true;
      }
    }
    return false;
  };

  for (int k = 2; k <= max_k; ++k) {
    LatticePolytope kq = dilate(q, BigInt(k));
    PointStore cert;  // interior point + (k-1)-fold sums
    if (eng.packed() && interior_store.size() > 0)
      cert = pairwise_sums(interior_store, eng.layer(k - 1));
    std::optional<LatticePoint> bad;
    BoxScanner scanner(kq, true);
    MembershipOracle kq_oracle(kq);
    scanner.scan([&](const LatticePoint& x) {
      if (cert.size() > 0) {
        auto qx = pack_point(x);
        if (qx && cert.contains(qx->data())) return true;
      }
      if (!kq_oracle.test(x, true)) return true;
      if (!eng.packed() && splits_exhaustive(x, k)) return true;
      bad = x;
      return false;
    });
    if (bad) {
      if (splits_exhaustive(*bad, k))
        throw std::logic_error("level_check: certificate and exhaustive search disagree");
      rep.verdict = "FAILS";
      rep.verified_up_to_k = k - 1;
      rep.counterexample = Counterexample{k, *bad, level_failure_statement(k)};
      return rep;
    }
  }
  return rep;
}

std::vector<LatticePoint> sumset(const std::vector<LatticePoint>& a,
                                 const std::vector<LatticePoint>& b) {
  std::vector<LatticePoint> out;
  if (a.empty() || b.empty()) return out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(add(x, y));
  std::sort(out.begin(), out.end(), lex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

LatticePolytope scaled_or_origin(const LatticePolytope& p, const BigInt& f) {
  if (f == 0)
    return LatticePolytope(p.ambient_dim,
                           {LatticePoint(static_cast<size_t>(p.ambient_dim), BigInt(0))});
  return dilate(p, f);
}

int fold_count(const BigInt& n) {
  if (n > 1000000) throw std::invalid_argument("dilation factor too large to enumerate");
  return n.convert_to<int>();
}

}  // namespace

bool verify_lemma25a(const std::vector<LatticePolytope>& ps, const std::vector<BigInt>& ns) {
  if (ps.empty() || ps.size() != ns.size())
    throw std::invalid_argument("verify_lemma25a: bad input sizes");
  std::vector<BigInt> dims;
  std::vector<LatticePolytope> full, reduced;
  for (size_t i = 0; i < ps.size(); ++i) {
    BigInt d = dimension(ps[i]);
    if (ns[i] < d + 1) throw std::invalid_argument("verify_lemma25a: need n_i >= dim + 1");
    dims.push_back(d);
    full.push_back(dilate(ps[i], ns[i]));
    reduced.push_back(scaled_or_origin(ps[i], d));
  }
  std::vector<LatticePoint> lhs = lattice_points(minkowski_sum(full));
  std::vector<LatticePoint> rhs = lattice_points(minkowski_sum(reduced));
  for (size_t i = 0; i < ps.size(); ++i) {
    std::vector<LatticePoint> li = lattice_points(ps[i]);
    int folds = fold_count(ns[i] - dims[i]);
    for (int t = 0; t < folds; ++t) rhs = sumset(rhs, li);
  }
  return lhs == rhs;
}

bool verify_lemma25b(const std::vector<LatticePolytope>& ps, const std::vector<BigInt>& ns) {
  if (ps.empty() || ps.size() != ns.size())
    throw std::invalid_argument("verify_lemma25b: bad input sizes");
  std::vector<BigInt> dims;
  std::vector<LatticePolytope> full, reduced;
  for (size_t i = 0; i < ps.size(); ++i) {
    BigInt d = dimension(ps[i]);
    if (ns[i] < d + 2) throw std::invalid_argument("verify_lemma25b: need n_i >= dim + 2");
    dims.push_back(d);
    full.push_back(dilate(ps[i], ns[i]));
    reduced.push_back(dilate(ps[i], d + 1));
  }
  std::vector<LatticePoint> lhs = relint_lattice_points(minkowski_sum(full));
  std::vector<LatticePoint> rhs = relint_lattice_points(minkowski_sum(reduced));
  for (size_t i = 0; i < ps.size(); ++i) {
    std::vector<LatticePoint> li = lattice_points(ps[i]);
    int folds = fold_count(ns[i] - dims[i] - 1);
    for (int t = 0; t < folds; ++t) rhs = sumset(rhs, li);
  }
  return lhs == rhs;
}

}  // namespace mink
