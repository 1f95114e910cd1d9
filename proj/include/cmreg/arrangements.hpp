#pragma once

#include <cstdint>
#include <vector>

#include "cmreg/ideal.hpp"

namespace cmreg {

// Linear subspace of P^{num_vars - 1} cut out by independent linear forms.
// Forms are stored row-reduced, so two presentations of the same subspace
// compare equal form-by-form.
class LinearSubspace {
 public:
  LinearSubspace(RingPtr ctx, std::vector<Polynomial> forms);

  const RingPtr& context() const { return ctx_; }
  const std::vector<Polynomial>& forms() const { return forms_; }
  int codim() const { return static_cast<int>(forms_.size()); }
  // projective dimension
  int dim() const { return ctx_->num_vars - 1 - codim(); }
  Ideal ideal() const;

 private:
  RingPtr ctx_;
  std::vector<Polynomial> forms_;
};

// codim = ambient - dim forms with uniform coefficients, redrawn until
// independent; deterministic per seed
LinearSubspace random_subspace(const RingPtr& ctx, int dim, uint64_t seed);

// Defining ideal of the union: the intersection of the subspace ideals.
// Saturated by construction (finite intersection of primes); every generator
// is checked to vanish on every member before returning.
Ideal arrangement_ideal(const std::vector<LinearSubspace>& subspaces);

struct Arrangement {
  std::vector<LinearSubspace> subspaces;
  Ideal ideal;
  explicit Arrangement(std::vector<LinearSubspace> subs)
      : subspaces(std::move(subs)), ideal(arrangement_ideal(subspaces)) {}
};

// entry (i, j) = projective dimension of X_i ∩ X_j (-1 when empty);
// diagonal entries hold dim X_i
std::vector<std::vector<int>> pairwise_intersection_dims(
    const std::vector<LinearSubspace>& subspaces);

// The same generators read in a ring with extra trailing variables: the cone
// over the subvariety. Keeps a known saturation certificate.
Ideal cone_ideal(const Ideal& ideal, int extra_vars);

// Ideal of a finite point set, each point given by num_vars homogeneous
// coordinates. Points must be nonzero and pairwise distinct up to scalar.
Ideal points_ideal(const RingPtr& ctx, const std::vector<std::vector<uint32_t>>& points);

// Smallest linear subspace containing the given points: the kernel of the
// stacked evaluation matrix. Its dimension is rank - 1.
LinearSubspace subspace_spanned_by(const RingPtr& ctx,
                                   const std::vector<std::vector<uint32_t>>& points);

}  // namespace cmreg
