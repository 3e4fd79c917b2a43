#pragma once

#include <vector>

#include "mjsing/upoly.hpp"

namespace mjsing {

struct Factor {
  UPoly poly;  // monic, irreducible over Q
  int multiplicity = 1;
};

/// Factorization over Q: pairwise distinct monic irreducible factors with
/// multiplicities, so that p = lc(p) * prod poly^multiplicity. Output is
/// sorted by degree, then by coefficients. Throws "zero input" on p = 0.
///
/// Square-free parts are handled by Zassenhaus' method: factor modulo a
/// small prime (distinct-degree + Cantor-Zassenhaus), Hensel-lift past the
/// Mignotte bound, then recombine local factors by trial division.
std::vector<Factor> univariate_factor(const UPoly& p);

/// True iff p has degree >= 1 and no nontrivial factorization over Q.
bool is_irreducible(const UPoly& p);

}  // namespace mjsing
