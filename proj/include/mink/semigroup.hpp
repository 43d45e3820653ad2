#pragma once
// Certified brute-force decomposition checks: k-fold decomposition search,
// IDP / normality / levelness reports with deterministic least
// counterexamples, and the two exact dilation set identities.

#include <mink/polytope.hpp>

#include <optional>
#include <string>
#include <vector>

namespace mink {

struct DecompositionWitness {
  int k = 0;
  LatticePoint alpha;
  std::vector<LatticePoint> parts;  // k lattice points of p summing to alpha
};

struct Counterexample {
  int k = 0;
  LatticePoint alpha;
  std::string statement;
};

struct CheckReport {
  std::string property;        // "IDP" | "NORMAL" | "LEVEL"
  int verified_up_to_k = 0;    // last fully verified dilation level
  std::string verdict;         // "HOLDS_UP_TO_K" | "FAILS"
  std::optional<Counterexample> counterexample;
};

// Searches for alpha = a_1 + ... + a_k with every a_i in p's lattice points.
// Depth-first over the lattice points in a fixed order with lex-non-increasing
// parts (summand order is irrelevant, so only sorted sequences are explored);
// every node is pruned by an exact residual-containment test. Absence is a
// certified exhaustive verdict. pre: k >= 1.
std::optional<std::vector<LatticePoint>> decompose(const LatticePoint& alpha, int k,
                                                   const LatticePolytope& p);

// IDP: every lattice point of kP decomposes into k lattice points of P, for
// k = 2..max_k. The failure reported is the smallest (k, alpha) in
// (level, lex) order. pre: max_k >= 1.
CheckReport idp_check(const LatticePolytope& p, int max_k);

// Normality: same check with alpha restricted to the affine lattice generated
// by kP's own lattice points. (Every lattice point of kP generates that
// lattice, so the restriction keeps all of them; the filter is still applied
// literally.)
CheckReport normal_check(const LatticePolytope& p, int max_k);

// Levelness proxy for Q = n_1 P_1 + ... + n_m P_m: every interior lattice
// point of kQ must be (interior lattice point of Q) + (k-1 lattice points of
// Q), for k = 2..max_k. pre: sizes match, n_i >= 1.
CheckReport level_check(const std::vector<LatticePolytope>& ps, const std::vector<BigInt>& ns,
                        int max_k);

// Exact set identity: lattice points of sum n_i P_i equal the sumset of the
// lattice points of sum d_i P_i (d_i = dim P_i) with (n_i - d_i) copies of
// each P_i's lattice points. pre: n_i >= d_i + 1.
bool verify_lemma25a(const std::vector<LatticePolytope>& ps, const std::vector<BigInt>& ns);

// Interior variant: interior lattice points of sum n_i P_i equal the sumset of
// the interior lattice points of sum (d_i+1) P_i with (n_i - d_i - 1) copies
// of each P_i's lattice points. pre: n_i >= d_i + 2.
bool verify_lemma25b(const std::vector<LatticePolytope>& ps, const std::vector<BigInt>& ns);

// sorted deduped pointwise sumset of two sorted point lists
std::vector<LatticePoint> sumset(const std::vector<LatticePoint>& a,
                                 const std::vector<LatticePoint>& b);

}  // namespace mink
