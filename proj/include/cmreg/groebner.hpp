#pragma once

#include <vector>

#include "cmreg/module.hpp"
#include "cmreg/ring.hpp"

namespace cmreg {

// A reduced Groebner basis: elements are monic, inter-reduced, and sorted by
// decreasing lead term, which makes the basis canonical for (ideal, order).
// Polynomial bases live in the rank-1 ring module; syzygy bases live in free
// modules carrying Schreyer orders.
struct GroebnerBasis {
  FreeModulePtr module;
  std::vector<FreeModuleElement> elements;
};

struct DivisionResult {
  FreeModuleElement remainder;
  std::vector<Polynomial> quotients;  // one per divisor: f = sum q_k g_k + remainder
};

// Full normal form: every term of the remainder is reducible by no divisor
// lead term. Deterministic for a fixed divisor ordering (first divisor whose
// lead divides the current term wins).
DivisionResult divide(const FreeModuleElement& f, const std::vector<FreeModuleElement>& divisors);

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);
FreeModuleElement normal_form(const FreeModuleElement& f, const GroebnerBasis& gb);

// Buchberger completion with the normal selection strategy (lowest lcm degree
// first). Prunes coprime-lead pairs and applies the chain criterion; the
// output is always inter-reduced. Homogeneous input required.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens);
// Same algorithm without the homogeneity requirement (needed internally for
// elimination computations, which mix degrees).
GroebnerBasis buchberger_general(const std::vector<Polynomial>& gens);

// The first syzygies of a Groebner basis: one generator per S-pair, expressed
// over the basis elements. The result is itself a Groebner basis of the
// syzygy module under the Schreyer order induced by gb, and comes back
// inter-reduced with its ambient module attached to each element.
std::vector<FreeModuleElement> syzygy_basis(const GroebnerBasis& gb);

}  // namespace cmreg
