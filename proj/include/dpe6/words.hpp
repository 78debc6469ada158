#pragma once

#include <string>
#include <vector>

#include "dpe6/lattice.hpp"

namespace dpe6 {

/// Generators of the extended affine Weyl group W~(A2): the three simple
/// reflections and the two diagram reflections.
enum class WeylGen { w0, w1, w2, sigma1, sigma2 };

using Word = std::vector<WeylGen>;

/// Composition convention for words. Right-to-left means the rightmost
/// generator acts first, matching ordinary function composition; the
/// reference decompositions reproduce the expected translation vectors under
/// this convention (pinned by the acceptance suite).
enum class WordOrder { right_to_left, left_to_right };
inline constexpr WordOrder kWordOrder = WordOrder::right_to_left;

const char* gen_name(WeylGen g);

/// Parses a whitespace-separated word such as "s1 s2 w0 w2".
Word parse_word(const std::string& text);

/// The generator's action on Pic in the standard basis: w_i is the
/// reflection in alpha_i; sigma_1 and sigma_2 are the stated triple
/// reflection products.
const LatticeMap& generator_map(WeylGen g);

/// Product of generator lattice maps in the kWordOrder convention.
LatticeMap realize_word(const Word& word);

/// realize(s1 s2 w0 w2): the reference-equation step on Pic.
const LatticeMap& phi_star_word();

/// realize(s1 s2 w2 w1): the applied step as a word on the standard basis.
const LatticeMap& psi_star_word();

inline const Word& phi_word() {
  static const Word w{WeylGen::sigma1, WeylGen::sigma2, WeylGen::w0, WeylGen::w2};
  return w;
}

inline const Word& psi_word() {
  static const Word w{WeylGen::sigma1, WeylGen::sigma2, WeylGen::w2, WeylGen::w1};
  return w;
}

}  // namespace dpe6
