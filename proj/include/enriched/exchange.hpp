#pragma once

#include <array>

#include "enriched/cells.hpp"

namespace enriched {

// U -F,H,P-> V -G,K,Q-> W with
//   alpha[0..3] : F->H, H->P, G->K, K->Q   (same for beta, gamma)
//   mu[i] : alpha[i] => beta[i], nu[i] : beta[i] => gamma[i]
struct Pasting {
  std::string name;
  V2CategoryRef U, V, W;
  V2FunctorRef F, H, P, G, K, Q;
  std::array<V2NatRef, 4> alpha, beta, gamma;
  std::array<ModificationRef, 4> mu, nu;
};

// throws InvalidPasting when the cells do not sit as described
void validatePasting(const Pasting& p);

// exchange-1: (a4 a2) * (a3 a1) = (a4 * a3)(a2 * a1)
// exchange-2: (n2 . m2) * (n1 . m1) = (n2 * n1) . (m2 * m1)
// exchange-3: (n3 n1) . (m3 m1) = (n3 . m3)(n1 . m1)
// exchange-4: (m4 m2) * (m3 m1) = (m4 * m3)(m2 * m1)
// juxtaposition composes along the middle V-2-category, * along the middle functor
CheckReport exchangeSuite(const Pasting& p, const CheckOptions& opts = {});

}  // namespace enriched
