#pragma once

// Slow reference implementations used to cross-check the library.  Each
// recomputes its quantity straight from the definition, by a different
// route than the production code, so agreement is meaningful.

#include <map>
#include <stdexcept>
#include <vector>

#include "hopfsmash/hopf.hpp"

namespace hopfsmash::oracles {

/// x^[n,tau] by brute force: expand delta^{n-1}(x) into a sum over basis
/// index tuples (always expanding the last tensor factor), then for each
/// tuple multiply b_{t1} (tau.b_{t2}) (tau^2.b_{t3}) ... left to right.
/// Exponential in n; fine for the small n used in tests.  tau is a raw
/// matrix on purpose so non-automorphism twists can be checked too.
inline ExactVector naive_twisted_power(const FiniteHopfAlgebra& h, const ExactVector& x,
                                       unsigned n, const ExactMatrix& tau) {
  if (n == 0) throw std::invalid_argument("naive power needs n >= 1");
  std::map<std::vector<size_t>, FieldScalar> terms;
  for (size_t i = 0; i < h.dim(); ++i)
    if (!x[i].is_zero()) terms[{i}] = x[i];
  for (unsigned step = 1; step < n; ++step) {
    std::map<std::vector<size_t>, FieldScalar> next;
    for (const auto& [tuple, c] : terms)
      for (const auto& t : h.comult_table()[tuple.back()]) {
        std::vector<size_t> ext(tuple.begin(), tuple.end() - 1);
        ext.push_back(t.j);
        ext.push_back(t.k);
        auto [it, fresh] = next.emplace(std::move(ext), c * t.c);
        if (!fresh) it->second = it->second + c * t.c;
      }
    terms = std::move(next);
  }

  std::vector<ExactMatrix> tau_pow{ExactMatrix::identity(h.field(), h.dim())};
  for (unsigned p = 1; p < n; ++p) tau_pow.push_back(tau_pow.back() * tau);

  ExactVector acc(h.field(), h.dim());
  for (const auto& [tuple, c] : terms) {
    ExactVector prod = h.basis_vector(tuple[0]);
    for (size_t pos = 1; pos < tuple.size(); ++pos)
      prod = h.multiply(prod, tau_pow[pos] * h.basis_vector(tuple[pos]));
    acc += prod * c;
  }
  return acc;
}

inline ExactVector naive_hopf_power(const FiniteHopfAlgebra& h, const ExactVector& x,
                                    unsigned n) {
  return naive_twisted_power(h, x, n, ExactMatrix::identity(h.field(), h.dim()));
}

}  // namespace hopfsmash::oracles
