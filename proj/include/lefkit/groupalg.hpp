#pragma once

#include <utility>
#include <vector>

#include "lefkit/linalg.hpp"

namespace lefkit {

// A finite group given by its multiplication table over element indices.
// Identity/inverse/associativity laws are verified at construction
// (associativity on all triples up to order 64, sampled beyond).
class FiniteGroup {
 public:
  static FiniteGroup from_table(std::vector<std::vector<int>> table);
  static FiniteGroup cyclic(int n);
  // Elements generated by permutations of {0..k-1}; order is breadth-first
  // from the identity, so it is deterministic in the generators.
  static FiniteGroup from_permutations(const std::vector<std::vector<int>>& gens);
  static FiniteGroup symmetric3();

  int order() const { return int(table_.size()); }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[size_t(a)][size_t(b)]; }
  int inverse(int a) const { return inverse_[size_t(a)]; }
  const std::vector<std::vector<int>>& table() const { return table_; }

 private:
  FiniteGroup() = default;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  int identity_ = 0;
};

// A rational representation: one invertible matrix per group element.
struct RepMat {
  FiniteGroup group;
  std::vector<QMat> rho;
};

// Validates rho(g)rho(h) = rho(gh) on all pairs and rho(identity) = I.
RepMat make_rep(FiniteGroup group, std::vector<QMat> rho);

RepMat regular_representation(const FiniteGroup& g);

// Group-algebra elements are coefficient vectors indexed by group elements.
struct CentralIdempotentSet {
  std::vector<QVec> idempotents;
};

// Central primitive orthogonal idempotents of Q[G]: class sums span the
// center; primitive splitting via minimal-polynomial factorization over Q.
// The count equals the number of rational irreducible characters.
CentralIdempotentSet central_idempotents(const FiniteGroup& g);

QVec groupalg_mul(const FiniteGroup& g, const QVec& x, const QVec& y);

// Image subspaces of rho(e_i) for the central primitive idempotents e_i.
std::vector<std::pair<int, Subspace>> isotypic_components(const RepMat& rep);

// Linear extension of g -> g^{-1}, the canonical anti-automorphism.
QVec group_involution(const FiniteGroup& g, const QVec& x);

// Rank of the Reynolds projector (1/|G|) sum rho(g).
int invariant_dimension(const RepMat& rep);

// dim (wedge^2 V)^G computed both through the induced action on wedge^2 and
// through the character formula (1/|G|) sum (tr(rho(g))^2 - tr(rho(g^2)))/2;
// throws if the two disagree.
int wedge2_invariant_dimension(const RepMat& rep);

// (sum_i (-1)^i tr wedge^i g, det(I - g)); the two agree for every g.
std::pair<Rat, Rat> lefschetz_identity(const QMat& g);

}  // namespace lefkit
