#include "dpe6/lattice.hpp"

namespace dpe6 {

namespace {

const Mat10& generator_gram() {
  static const Mat10 g = [] {
    Mat10 m = Mat10::Zero();
    m(0, 1) = 1;
    m(1, 0) = 1;
    for (int i = 2; i < 10; ++i) m(i, i) = -1;
    return m;
  }();
  return g;
}

}  // namespace

PicClass pic(Basis basis, std::array<long, 10> coeffs) {
  PicClass c;
  c.basis = basis;
  for (int i = 0; i < 10; ++i) c.coeffs(i) = coeffs[static_cast<std::size_t>(i)];
  return c;
}

Int pair(const PicClass& a, const PicClass& b) {
  require_same_basis(a, b, "pair");
  return a.coeffs.dot(generator_gram() * b.coeffs);
}

PicClass reflect(const PicClass& root, const PicClass& c) {
  if (pair(root, root) != -2)
    throw math_error("reflect: root must have self-intersection -2");
  return c + pair(c, root) * root;
}

PicClass apply(const LatticeMap& m, const PicClass& c) {
  if (m.source != c.basis)
    throw basis_mismatch("apply: class basis does not match map source");
  return {m.m * c.coeffs, m.target};
}

LatticeMap compose(const LatticeMap& m2, const LatticeMap& m1) {
  if (m2.source != m1.target)
    throw basis_mismatch("compose: inner target does not match outer source");
  return {m2.m * m1.m, m1.source, m2.target};
}

LatticeMap identity_map(Basis basis) { return {Mat10::Identity(), basis, basis}; }

LatticeMap reflection_map(const PicClass& root) {
  if (pair(root, root) != -2)
    throw math_error("reflection_map: root must have self-intersection -2");
  // c + (r^T G c) r  ==  (I + r (G r)^T) c, using symmetry of G.
  Mat10 m = Mat10::Identity() + root.coeffs * (generator_gram() * root.coeffs).transpose();
  return {m, root.basis, root.basis};
}

bool is_isometry(const LatticeMap& m) {
  const Mat10& g = generator_gram();
  Mat10 pulled = m.m.transpose() * g * m.m;
  return pulled.cwiseEqual(g).all();
}

PicClass anticanonical(Basis basis) {
  return pic(basis, {2, 2, -1, -1, -1, -1, -1, -1, -1, -1});
}

PicClass RootBasis::delta() const {
  PicClass acc{Coeffs10::Zero(), roots.front().basis};
  for (std::size_t i = 0; i < roots.size(); ++i) acc = acc + Int(delta_mults[i]) * roots[i];
  return acc;
}

IntMatrix gram_matrix(const RootBasis& basis) {
  const auto n = static_cast<Eigen::Index>(basis.roots.size());
  IntMatrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      g(i, j) = pair(basis.roots[static_cast<std::size_t>(i)],
                     basis.roots[static_cast<std::size_t>(j)]);
  return g;
}

std::array<Int, 3> translation_vector(const LatticeMap& m, const RootBasis& symmetry) {
  if (symmetry.kind != RootBasis::Kind::symmetry)
    throw usage_error("translation_vector: needs a symmetry root basis");
  if (m.source != m.target || m.source != symmetry.roots.front().basis)
    throw basis_mismatch("translation_vector: map and basis tags disagree");
  if (!is_isometry(m)) throw not_a_translation("translation_vector: map is not an isometry");
  PicClass mk = apply(m, anticanonical(m.source));
  if (mk != anticanonical(m.source))
    throw not_a_translation("translation_vector: map does not fix -K");

  PicClass delta = symmetry.delta();
  int pivot = 0;
  while (delta.coeffs(pivot) == 0) ++pivot;
  std::array<Int, 3> k;
  for (int i = 0; i < 3; ++i) {
    PicClass r = apply(m, symmetry.roots[static_cast<std::size_t>(i)]) -
                 symmetry.roots[static_cast<std::size_t>(i)];
    if (r.coeffs(pivot) % delta.coeffs(pivot) != 0)
      throw not_a_translation("translation_vector: residual not a multiple of delta");
    k[static_cast<std::size_t>(i)] = r.coeffs(pivot) / delta.coeffs(pivot);
    PicClass expected = k[static_cast<std::size_t>(i)] * delta;
    if (r != expected)
      throw not_a_translation("translation_vector: residual off the delta line at alpha_" +
                              std::to_string(i));
  }
  return k;
}

}  // namespace dpe6
