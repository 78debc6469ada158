#include "dpe6/words.hpp"

namespace dpe6 {

namespace {

PicClass std_class(std::array<long, 10> coeffs) { return pic(Basis::standard, coeffs); }

LatticeMap triple_reflection(std::array<long, 10> r1, std::array<long, 10> r2,
                             std::array<long, 10> r3) {
  // The three roots are pairwise orthogonal, so the order is immaterial.
  return compose(reflection_map(std_class(r1)),
                 compose(reflection_map(std_class(r2)), reflection_map(std_class(r3))));
}

}  // namespace

const char* gen_name(WeylGen g) {
  switch (g) {
    case WeylGen::w0: return "w0";
    case WeylGen::w1: return "w1";
    case WeylGen::w2: return "w2";
    case WeylGen::sigma1: return "s1";
    case WeylGen::sigma2: return "s2";
  }
  return "?";
}

Word parse_word(const std::string& text) {
  Word word;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && text[i] == ' ') ++i;
    if (i == text.size()) break;
    std::size_t j = text.find(' ', i);
    if (j == std::string::npos) j = text.size();
    std::string tok = text.substr(i, j - i);
    if (tok == "w0") word.push_back(WeylGen::w0);
    else if (tok == "w1") word.push_back(WeylGen::w1);
    else if (tok == "w2") word.push_back(WeylGen::w2);
    else if (tok == "s1" || tok == "sigma1") word.push_back(WeylGen::sigma1);
    else if (tok == "s2" || tok == "sigma2") word.push_back(WeylGen::sigma2);
    else throw usage_error("unknown generator: " + tok);
    i = j;
  }
  if (word.empty()) throw usage_error("empty word");
  return word;
}

const LatticeMap& generator_map(WeylGen g) {
  static const LatticeMap w0 = reflection_map(standard_symmetry_basis().roots[0]);
  static const LatticeMap w1 = reflection_map(standard_symmetry_basis().roots[1]);
  static const LatticeMap w2 = reflection_map(standard_symmetry_basis().roots[2]);
  // sigma_1 = w_{E1-E3} w_{E2-E4} w_{Hq-Hp},  sigma_2 = w_{E1-E7} w_{E2-E8} w_{Hq-E5-E6}
  static const LatticeMap s1 = triple_reflection({0, 0, 1, 0, -1, 0, 0, 0, 0, 0},
                                                 {0, 0, 0, 1, 0, -1, 0, 0, 0, 0},
                                                 {1, -1, 0, 0, 0, 0, 0, 0, 0, 0});
  static const LatticeMap s2 = triple_reflection({0, 0, 1, 0, 0, 0, 0, 0, -1, 0},
                                                 {0, 0, 0, 1, 0, 0, 0, 0, 0, -1},
                                                 {1, 0, 0, 0, 0, 0, -1, -1, 0, 0});
  switch (g) {
    case WeylGen::w0: return w0;
    case WeylGen::w1: return w1;
    case WeylGen::w2: return w2;
    case WeylGen::sigma1: return s1;
    case WeylGen::sigma2: return s2;
  }
  throw std::logic_error("unreachable");
}

LatticeMap realize_word(const Word& word) {
  if (word.empty()) throw usage_error("realize_word: empty word");
  LatticeMap acc = identity_map(Basis::standard);
  if (kWordOrder == WordOrder::right_to_left) {
    for (WeylGen g : word) acc = compose(acc, generator_map(g));
  } else {
    for (WeylGen g : word) acc = compose(generator_map(g), acc);
  }
  return acc;
}

const LatticeMap& phi_star_word() {
  static const LatticeMap m = realize_word(phi_word());
  return m;
}

const LatticeMap& psi_star_word() {
  static const LatticeMap m = realize_word(psi_word());
  return m;
}

}  // namespace dpe6
