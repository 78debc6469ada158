// Transcribed lattice data: root bases, the induced map of the recurrence
// dynamics, the two basis identifications, and the printed Cartan matrices.
// Coordinate order is (H_q, H_p, E_1..E_8) resp. (H_x, H_y, F_1..F_8).

#include "dpe6/lattice.hpp"

namespace dpe6 {

namespace {

RootBasis make_basis(RootBasis::Kind kind, std::string name, Basis tag,
                     std::vector<std::array<long, 10>> rows, std::vector<long> mults) {
  RootBasis b;
  b.kind = kind;
  b.name = std::move(name);
  b.delta_mults = std::move(mults);
  for (const auto& row : rows) b.roots.push_back(pic(tag, row));
  return b;
}

LatticeMap map_from_columns(Basis source, Basis target,
                            const std::array<std::array<long, 10>, 10>& cols) {
  LatticeMap m;
  m.source = source;
  m.target = target;
  for (int j = 0; j < 10; ++j)
    for (int i = 0; i < 10; ++i)
      m.m(i, j) = cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  return m;
}

// Applied basis in terms of the standard one (left column of the lemma).
const LatticeMap& pre_applied_to_standard() {
  static const LatticeMap m = map_from_columns(
      Basis::applied, Basis::standard,
      {{
          {0, 1, 0, 0, 0, 0, 0, 0, 0, 0},     // H_x = H_p
          {1, 1, -1, 0, -1, 0, 0, 0, 0, 0},   // H_y = H_q + H_p - E_1 - E_3
          {0, 0, 0, 0, 0, 1, 0, 0, 0, 0},     // F_1 = E_4
          {0, 0, 0, 1, 0, 0, 0, 0, 0, 0},     // F_2 = E_2
          {0, 1, -1, 0, 0, 0, 0, 0, 0, 0},    // F_3 = H_p - E_1
          {0, 1, 0, 0, -1, 0, 0, 0, 0, 0},    // F_4 = H_p - E_3
          {0, 0, 0, 0, 0, 0, 1, 0, 0, 0},     // F_5 = E_5
          {0, 0, 0, 0, 0, 0, 0, 1, 0, 0},     // F_6 = E_6
          {0, 0, 0, 0, 0, 0, 0, 0, 1, 0},     // F_7 = E_7
          {0, 0, 0, 0, 0, 0, 0, 0, 0, 1},     // F_8 = E_8
      }});
  return m;
}

// Standard basis in terms of the applied one (right column of the lemma).
const LatticeMap& pre_standard_to_applied() {
  static const LatticeMap m = map_from_columns(
      Basis::standard, Basis::applied,
      {{
          {1, 1, 0, 0, -1, -1, 0, 0, 0, 0},   // H_q = H_x + H_y - F_3 - F_4
          {1, 0, 0, 0, 0, 0, 0, 0, 0, 0},     // H_p = H_x
          {1, 0, 0, 0, -1, 0, 0, 0, 0, 0},    // E_1 = H_x - F_3
          {0, 0, 0, 1, 0, 0, 0, 0, 0, 0},     // E_2 = F_2
          {1, 0, 0, 0, 0, -1, 0, 0, 0, 0},    // E_3 = H_x - F_4
          {0, 0, 1, 0, 0, 0, 0, 0, 0, 0},     // E_4 = F_1
          {0, 0, 0, 0, 0, 0, 1, 0, 0, 0},     // E_5 = F_5
          {0, 0, 0, 0, 0, 0, 0, 1, 0, 0},     // E_6 = F_6
          {0, 0, 0, 0, 0, 0, 0, 0, 1, 0},     // E_7 = F_7
          {0, 0, 0, 0, 0, 0, 0, 0, 0, 1},     // E_8 = F_8
      }});
  return m;
}

const LatticeMap& fin_applied_to_standard() {
  static const LatticeMap m = map_from_columns(
      Basis::applied, Basis::standard,
      {{
          {1, 1, 0, 0, -1, -1, 0, 0, 0, 0},    // H_x = H_q + H_p - E_3 - E_4
          {1, 1, -1, 0, -1, 0, 0, 0, 0, 0},    // H_y = H_q + H_p - E_1 - E_3
          {1, 0, 0, 0, -1, 0, 0, 0, 0, 0},     // F_1 = H_q - E_3
          {0, 0, 0, 1, 0, 0, 0, 0, 0, 0},      // F_2 = E_2
          {1, 1, -1, 0, -1, -1, 0, 0, 0, 0},   // F_3 = H_q + H_p - E_1 - E_3 - E_4
          {0, 1, 0, 0, -1, 0, 0, 0, 0, 0},     // F_4 = H_p - E_3
          {0, 0, 0, 0, 0, 0, 1, 0, 0, 0},      // F_5 = E_5
          {0, 0, 0, 0, 0, 0, 0, 1, 0, 0},      // F_6 = E_6
          {0, 0, 0, 0, 0, 0, 0, 0, 1, 0},      // F_7 = E_7
          {0, 0, 0, 0, 0, 0, 0, 0, 0, 1},      // F_8 = E_8
      }});
  return m;
}

const LatticeMap& fin_standard_to_applied() {
  static const LatticeMap m = map_from_columns(
      Basis::standard, Basis::applied,
      {{
          {1, 1, 0, 0, -1, -1, 0, 0, 0, 0},    // H_q = H_x + H_y - F_3 - F_4
          {1, 1, -1, 0, -1, 0, 0, 0, 0, 0},    // H_p = H_x + H_y - F_1 - F_3
          {1, 0, 0, 0, -1, 0, 0, 0, 0, 0},     // E_1 = H_x - F_3
          {0, 0, 0, 1, 0, 0, 0, 0, 0, 0},      // E_2 = F_2
          {1, 1, -1, 0, -1, -1, 0, 0, 0, 0},   // E_3 = H_x + H_y - F_1 - F_3 - F_4
          {0, 1, 0, 0, -1, 0, 0, 0, 0, 0},     // E_4 = H_y - F_3
          {0, 0, 0, 0, 0, 0, 1, 0, 0, 0},      // E_5 = F_5
          {0, 0, 0, 0, 0, 0, 0, 1, 0, 0},      // E_6 = F_6
          {0, 0, 0, 0, 0, 0, 0, 0, 1, 0},      // E_7 = F_7
          {0, 0, 0, 0, 0, 0, 0, 0, 0, 1},      // E_8 = F_8
      }});
  return m;
}

}  // namespace

const RootBasis& standard_surface_basis() {
  static const RootBasis b = make_basis(
      RootBasis::Kind::surface, "standard surface", Basis::standard,
      {
          {0, 0, 0, 0, 0, 0, 0, 0, 1, -1},    // delta_0 = E_7 - E_8
          {0, 0, 1, -1, 0, 0, 0, 0, 0, 0},    // delta_1 = E_1 - E_2
          {1, 0, -1, 0, 0, 0, -1, 0, 0, 0},   // delta_2 = H_q - E_1 - E_5
          {0, 0, 0, 0, 0, 0, 1, -1, 0, 0},    // delta_3 = E_5 - E_6
          {0, 1, 0, 0, -1, 0, -1, 0, 0, 0},   // delta_4 = H_p - E_3 - E_5
          {0, 0, 0, 0, 1, -1, 0, 0, 0, 0},    // delta_5 = E_3 - E_4
          {0, 0, 0, 0, 0, 0, 0, 1, -1, 0},    // delta_6 = E_6 - E_7
      },
      {1, 1, 2, 3, 2, 1, 2});
  return b;
}

const RootBasis& standard_symmetry_basis() {
  static const RootBasis b = make_basis(
      RootBasis::Kind::symmetry, "standard symmetry", Basis::standard,
      {
          {1, 1, 0, 0, 0, 0, -1, -1, -1, -1},  // alpha_0 = H_q + H_p - E_5678
          {1, 0, 0, 0, -1, -1, 0, 0, 0, 0},    // alpha_1 = H_q - E_3 - E_4
          {0, 1, -1, -1, 0, 0, 0, 0, 0, 0},    // alpha_2 = H_p - E_1 - E_2
      },
      {1, 1, 1});
  return b;
}

const RootBasis& applied_surface_basis() {
  static const RootBasis b = make_basis(
      RootBasis::Kind::surface, "applied surface", Basis::applied,
      {
          {0, 0, 0, 0, 0, 0, 0, 0, 1, -1},    // delta_0 = F_7 - F_8
          {1, 0, 0, -1, -1, 0, 0, 0, 0, 0},   // delta_1 = H_x - F_2 - F_3
          {0, 1, 0, 0, 0, -1, -1, 0, 0, 0},   // delta_2 = H_y - F_4 - F_5
          {0, 0, 0, 0, 0, 0, 1, -1, 0, 0},    // delta_3 = F_5 - F_6
          {0, 0, 0, 0, 0, 1, -1, 0, 0, 0},    // delta_4 = F_4 - F_5
          {1, 0, -1, 0, 0, -1, 0, 0, 0, 0},   // delta_5 = H_x - F_1 - F_4
          {0, 0, 0, 0, 0, 0, 0, 1, -1, 0},    // delta_6 = F_6 - F_7
      },
      {1, 1, 2, 3, 2, 1, 2});
  return b;
}

const RootBasis& applied_symmetry_pre() {
  static const RootBasis b = make_basis(
      RootBasis::Kind::symmetry, "applied symmetry (preliminary)", Basis::applied,
      {
          {2, 1, 0, 0, -1, -1, -1, -1, -1, -1},  // alpha_0 = 2H_x + H_y - F_345678
          {0, 1, -1, 0, -1, 0, 0, 0, 0, 0},      // alpha_1 = H_y - F_1 - F_3
          {0, 0, 0, -1, 1, 0, 0, 0, 0, 0},       // alpha_2 = F_3 - F_2
      },
      {1, 1, 1});
  return b;
}

const RootBasis& applied_symmetry_fin() {
  static const RootBasis b = make_basis(
      RootBasis::Kind::symmetry, "applied symmetry (final)", Basis::applied,
      {
          {2, 2, -1, 0, -2, -1, -1, -1, -1, -1},  // alpha_0 = 2H_x + 2H_y - F_1 - 2F_3 - F_45678
          {0, -1, 1, 0, 1, 0, 0, 0, 0, 0},        // alpha_1 = -H_y + F_1 + F_3
          {0, 1, -1, -1, 0, 0, 0, 0, 0, 0},       // alpha_2 = H_y - F_1 - F_2
      },
      {1, 1, 1});
  return b;
}

const LatticeMap& psi_star() {
  static const LatticeMap m = map_from_columns(
      Basis::applied, Basis::applied,
      {{
          {4, 2, 0, -1, -1, -2, -2, -2, -1, -1},  // H_x -> 4H_x + 2H_y - F_23 - 2F_456 - F_78
          {2, 1, 0, 0, 0, -1, -1, -1, -1, 0},     // H_y -> 2H_x + H_y - F_4567
          {2, 1, 0, 0, 0, -1, -1, -1, -1, -1},    // F_1 -> 2H_x + H_y - F_45678
          {2, 1, 0, 0, -1, -1, -1, -1, -1, 0},    // F_2 -> 2H_x + H_y - F_34567
          {2, 1, 0, -1, 0, -1, -1, -1, -1, 0},    // F_3 -> 2H_x + H_y - F_24567
          {1, 1, 0, 0, 0, -1, -1, -1, 0, 0},      // F_4 -> H_x + H_y - F_456
          {1, 0, 0, 0, 0, 0, 0, -1, 0, 0},        // F_5 -> H_x - F_6
          {1, 0, 0, 0, 0, 0, -1, 0, 0, 0},        // F_6 -> H_x - F_5
          {1, 0, 0, 0, 0, -1, 0, 0, 0, 0},        // F_7 -> H_x - F_4
          {0, 0, 1, 0, 0, 0, 0, 0, 0, 0},         // F_8 -> F_1
      }});
  return m;
}

const IntMatrix& e6_cartan_matrix() {
  static const IntMatrix g = [] {
    IntMatrix m(7, 7);
    const long rows[7][7] = {
        {-2, 0, 0, 0, 0, 0, 1},
        {0, -2, 1, 0, 0, 0, 0},
        {0, 1, -2, 1, 0, 0, 0},
        {0, 0, 1, -2, 1, 0, 1},
        {0, 0, 0, 1, -2, 1, 0},
        {0, 0, 0, 0, 1, -2, 0},
        {1, 0, 0, 1, 0, 0, -2},
    };
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j) m(i, j) = rows[i][j];
    return m;
  }();
  return g;
}

const IntMatrix& a2_cartan_matrix() {
  static const IntMatrix g = [] {
    IntMatrix m(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = (i == j) ? -2 : 1;
    return m;
  }();
  return g;
}

LatticeMap change_of_basis_map(ChangeOfBasis which, Basis from) {
  if (which == ChangeOfBasis::pre)
    return from == Basis::applied ? pre_applied_to_standard() : pre_standard_to_applied();
  return from == Basis::applied ? fin_applied_to_standard() : fin_standard_to_applied();
}

PicClass change_basis(const PicClass& c, ChangeOfBasis which) {
  return apply(change_of_basis_map(which, c.basis), c);
}

LatticeMap conjugate_to_applied(const LatticeMap& m, ChangeOfBasis which) {
  if (m.source != Basis::standard || m.target != Basis::standard)
    throw basis_mismatch("conjugate_to_applied: expects a standard-basis endomorphism");
  return compose(change_of_basis_map(which, Basis::standard),
                 compose(m, change_of_basis_map(which, Basis::applied)));
}

void verify_lattice_tables() {
  for (ChangeOfBasis which : {ChangeOfBasis::pre, ChangeOfBasis::fin}) {
    LatticeMap there = change_of_basis_map(which, Basis::applied);
    LatticeMap back = change_of_basis_map(which, Basis::standard);
    if (!(compose(back, there) == identity_map(Basis::applied)) ||
        !(compose(there, back) == identity_map(Basis::standard)))
      throw math_error("lattice tables: basis-change columns are not mutual inverses");
    if (!is_isometry(there) || !is_isometry(back))
      throw math_error("lattice tables: basis change is not an isometry");
  }
  for (const RootBasis* b : {&standard_surface_basis(), &standard_symmetry_basis(),
                             &applied_surface_basis(), &applied_symmetry_pre(),
                             &applied_symmetry_fin()}) {
    for (const PicClass& root : b->roots)
      if (pair(root, root) != -2)
        throw math_error("lattice tables: root without self-intersection -2 in " + b->name);
    if (b->delta() != anticanonical(b->roots.front().basis))
      throw math_error("lattice tables: delta expansion differs from -K in " + b->name);
  }
}

}  // namespace dpe6
