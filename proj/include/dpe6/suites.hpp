#pragma once

#include <cstdint>

#include "dpe6/reports.hpp"

namespace dpe6 {

/// Exact lattice checks: printed Cartan matrices, delta expansions,
/// isometries, translation vectors, word decompositions and the basis-change
/// conjugation identities. Integer equality throughout.
SuiteReport lattice_suite();

/// Exact pointwise group relations at random Q(sqrt2) configurations:
/// involutions, braid relations, dihedral relations, the decomposition of
/// the reference step and its w1-conjugate.
SuiteReport weyl_relations_suite(int trials, std::uint64_t seed);

/// Exact coordinate-change equivalence at random non-singular states, the
/// round-trip identity, and the relabeled-system check.
SuiteReport theorem1_suite(int trials, std::uint64_t seed);

/// Base-point and cascade verification for one exact parameter triple.
SuiteReport basepoints_suite(const Rational& lambda, const Rational& s, const Rational& n,
                             std::uint64_t seed);

/// Sampled exact PointConfig; components are small rationals plus sqrt2
/// parts. With normalize set, a2 is chosen so the root variables sum to 1.
PointConfig<QuadExt> sample_config(Rng& rng, bool normalize);

}  // namespace dpe6
