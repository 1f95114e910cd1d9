#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "cmreg/groebner.hpp"
#include "cmreg/ring.hpp"

namespace cmreg {

// Homogeneous ideal given by generators. Zero generators are dropped at
// construction; the zero ideal has an empty generator list. The Groebner
// basis is computed lazily, once, and shared by copies.
class Ideal {
 public:
  Ideal(RingPtr ctx, std::vector<Polynomial> generators);
  static Ideal zero(RingPtr ctx) { return Ideal(std::move(ctx), {}); }
  static Ideal unit(RingPtr ctx);

  const RingPtr& context() const { return ctx_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;

  // reduced Groebner basis, cached after the first call
  const GroebnerBasis& groebner_basis() const;

  bool contains(const Polynomial& f) const;

  // Saturation status when known. Construction leaves it unknown; saturate()
  // stamps its result, and arrangement ideals are stamped by construction.
  std::optional<bool> saturated_hint() const { return *saturated_; }
  void set_saturated_hint(bool v) const { *saturated_ = v; }

 private:
  RingPtr ctx_;
  std::vector<Polynomial> gens_;
  // shared across copies so the basis is computed at most once per family
  std::shared_ptr<std::shared_ptr<const GroebnerBasis>> gb_;
  std::shared_ptr<std::optional<bool>> saturated_;
};

bool equal_ideals(const Ideal& a, const Ideal& b);  // by mutual membership

// Generators: all pairwise products, deduplicated. product(I, 0) = 0.
Ideal product(const Ideal& a, const Ideal& b);
// Generators: concatenation, then inter-reduced to the reduced basis.
Ideal sum(const Ideal& a, const Ideal& b);
// Elimination with an auxiliary leading variable t: I ∩ J is generated by the
// t-free part of a basis of t*I + (1-t)*J. The only place inhomogeneous
// polynomials ever appear.
Ideal intersect(const Ideal& a, const Ideal& b);
// (a : b) = { f : f*b ⊆ a }, via intersections with principal ideals.
Ideal colon(const Ideal& a, const Ideal& b);
// Iterated colon with the irrelevant maximal ideal until stabilization
// (checked by mutual membership).
Ideal saturate(const Ideal& i);

// Krull dimension of S/I (affine cone; projective dimension is one less).
// Unit ideal: -1. Zero ideal: num_vars.
int krull_dim(const Ideal& i);

// dim_k of the degree-d piece of I itself (not of S/I).
int64_t hilbert_function(const Ideal& i, int degree);

}  // namespace cmreg
