#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dpe6/rng.hpp"
#include "dpe6/suites.hpp"

using namespace dpe6;

namespace {

using Config = PointConfig<QuadExt>;

Config rational_config(long a0n, long a0d, long a1n, long a1d, long a2n, long a2d,
                       long tn, long td, long qn, long qd, long pn, long pd) {
  auto r = [](long n, long d) { return QuadExt(Rational(n) / d); };
  return {r(a0n, a0d), r(a1n, a1d), r(a2n, a2d), r(tn, td), r(qn, qd), r(pn, pd)};
}

}  // namespace

TEST_CASE("generator images match the printed action") {
  // w1 at (1/2, 1/4, 1/4; 1; 2, 3)
  Config c = rational_config(1, 2, 1, 4, 1, 4, 1, 1, 2, 1, 3, 1);
  Config w1c = apply_generator(WeylGen::w1, c);
  CHECK(w1c == rational_config(3, 4, -1, 4, 1, 2, 1, 1, 2, 1, 23, 8));

  // w0 with a0 = 0 leaves everything unchanged
  Config c0 = rational_config(0, 1, 1, 3, 2, 3, 1, 1, 5, 7, 5, 7);
  CHECK(apply_generator(WeylGen::w0, c0) == c0);

  // sigma1 row: roots negated and permuted, (q, p) -> (-p, -q)
  Rng rng(3);
  Config r = sample_config(rng, false);
  Config s1r = apply_generator(WeylGen::sigma1, r);
  CHECK(s1r.a0 == -r.a0);
  CHECK(s1r.a1 == -r.a2);
  CHECK(s1r.a2 == -r.a1);
  CHECK(s1r.q == -r.p);
  CHECK(s1r.p == -r.q);
  CHECK(s1r.t == r.t);
}

TEST_CASE("exceptional loci raise singular_point with the failing generator") {
  Config c = rational_config(1, 2, 1, 4, 1, 4, 1, 1, 0, 1, 3, 1);  // q = 0, a1 != 0
  CHECK_THROWS_AS(apply_generator(WeylGen::w1, c), singular_point);
  try {
    apply_word({WeylGen::w2, WeylGen::w1}, c);  // rightmost acts first
    FAIL("expected singular_point");
  } catch (const singular_point& e) {
    CHECK(e.where().find("w1") != std::string::npos);
  }
}

TEST_CASE("generators are involutions and preserve |a0 + a1 + a2|") {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Config c = sample_config(rng, false);
    for (WeylGen g : {WeylGen::w0, WeylGen::w1, WeylGen::w2, WeylGen::sigma1, WeylGen::sigma2}) {
      try {
        Config gc = apply_generator(g, c);
        // w_i preserve the sum; sigma_i negate it
        bool reflecting = (g == WeylGen::sigma1 || g == WeylGen::sigma2);
        CHECK(gc.root_sum() == (reflecting ? -c.root_sum() : c.root_sum()));
        CHECK(apply_generator(g, gc) == c);
      } catch (const singular_point&) {
        // acceptable on random points; involution tested on the rest
      }
    }
  }
}

TEST_CASE("dihedral relation pointwise") {
  Rng rng(12);
  Word rel{WeylGen::sigma1, WeylGen::sigma2, WeylGen::sigma1,
           WeylGen::sigma2, WeylGen::sigma1, WeylGen::sigma2};
  for (int trial = 0; trial < 50; ++trial) {
    Config c = sample_config(rng, false);
    CHECK(apply_word(rel, c) == c);
  }
}

TEST_CASE("the word s1 s2 w0 w2 is the reference step") {
  Rng rng(13);
  int checked = 0;
  while (checked < 100) {
    Config c = sample_config(rng, /*normalize=*/true);
    try {
      Config via_word = apply_word(phi_word(), c);
      Config via_step = phi_step(c);
      CHECK(via_word == via_step);
      ++checked;
    } catch (const singular_point&) {
    }
  }
}

TEST_CASE("reference step on the worked example") {
  Config c = rational_config(1, 1, 0, 1, 0, 1, 0, 1, 1, 1, 2, 1);
  Config next = phi_step(c);
  CHECK(next == rational_config(1, 1, -1, 1, 1, 1, 0, 1, 1, 1, -2, 1));
  // root sum is preserved by the step
  CHECK(next.root_sum() == c.root_sum());
}

TEST_CASE("iterated steps drift a1 down and a2 up") {
  Rng rng(14);
  int done = 0;
  while (done < 10) {
    Config c = sample_config(rng, true);
    try {
      Config it = c;
      for (int k = 1; k <= 4; ++k) {
        it = phi_step(it);
        CHECK(it.a0 == c.a0);
        CHECK(it.a1 == c.a1 - QuadExt(k));
        CHECK(it.a2 == c.a2 + QuadExt(k));
        CHECK(it.t == c.t);
      }
      ++done;
    } catch (const singular_point&) {
    }
  }
}

TEST_CASE("step entry requires normalized root variables") {
  Config c = rational_config(1, 1, 1, 1, 0, 1, 0, 1, 1, 1, 2, 1);  // sum = 2
  CHECK_THROWS_AS(phi_step(c), usage_error);
}

TEST_CASE("relabeled system holds exactly across one step") {
  Rng rng(15);
  int checked = 0;
  while (checked < 100) {
    Config c = sample_config(rng, true);
    try {
      auto res = sk7_residuals(c);
      CHECK(res[0].is_zero());
      CHECK(res[1].is_zero());
      // relabeling permutes the root variables, so the sums agree
      QuadExt b0 = c.a2, b1 = c.a0, b2 = c.a1;
      CHECK(b0 + b1 + b2 == c.root_sum());
      // fbar = -qbar under the step by definition of the relabeling
      Config next = phi_step(c);
      CHECK(-next.q == -(next.q));
      ++checked;
    } catch (const singular_point&) {
    }
  }
}

TEST_CASE("relations report passes at 100 trials") {
  SuiteReport report = weyl_relations_suite(100, 1);
  for (const auto& check : report.checks) {
    INFO(check.name);
    CHECK(check.pass);
    CHECK(check.detail["failures"] == 0);
    CHECK(check.detail["trials"] == 100);
  }
  CHECK(report.pass());
  CHECK_THROWS_AS(weyl_relations_suite(0, 1), usage_error);
}

TEST_CASE("relations report is deterministic for a fixed seed") {
  std::string a = dump_json(weyl_relations_suite(20, 42).to_json());
  std::string b = dump_json(weyl_relations_suite(20, 42).to_json());
  std::string c = dump_json(weyl_relations_suite(20, 43).to_json());
  CHECK(a == b);
  CHECK(a == c);  // all relations hold at any seed, so payloads agree too
}
