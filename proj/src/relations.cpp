// Pointwise verification of the group presentation and of the dynamics
// decompositions, on random exact configurations.

#include "dpe6/rng.hpp"
#include "dpe6/suites.hpp"
#include "dpe6/xy_state.hpp"

namespace dpe6 {

namespace {

constexpr int kMaxResamples = 100;

using Config = PointConfig<QuadExt>;

/// Either side of a relation: a word, or the closed-form step.
struct Side {
  Word word;        // empty means identity
  bool use_phi = false;

  Config eval(const Config& c) const {
    if (use_phi) return phi_step(c);
    if (word.empty()) return c;
    return apply_word(word, c);
  }
};

struct Relation {
  std::string name;
  Side lhs, rhs;
  bool normalized_sampling = false;
};

std::vector<Relation> relation_table() {
  using G = WeylGen;
  std::vector<Relation> rels;
  auto add = [&](std::string name, Word lhs, Word rhs, bool norm = false) {
    rels.push_back({std::move(name), Side{std::move(lhs), false}, Side{std::move(rhs), false}, norm});
  };
  add("w0 w0 = e", {G::w0, G::w0}, {});
  add("w1 w1 = e", {G::w1, G::w1}, {});
  add("w2 w2 = e", {G::w2, G::w2}, {});
  add("w0 w1 w0 = w1 w0 w1", {G::w0, G::w1, G::w0}, {G::w1, G::w0, G::w1});
  add("w0 w2 w0 = w2 w0 w2", {G::w0, G::w2, G::w0}, {G::w2, G::w0, G::w2});
  add("w1 w2 w1 = w2 w1 w2", {G::w1, G::w2, G::w1}, {G::w2, G::w1, G::w2});
  add("s1 s1 = e", {G::sigma1, G::sigma1}, {});
  add("s2 s2 = e", {G::sigma2, G::sigma2}, {});
  add("(s1 s2)^3 = e",
      {G::sigma1, G::sigma2, G::sigma1, G::sigma2, G::sigma1, G::sigma2}, {});
  rels.push_back({"s1 s2 w0 w2 = phi",
                  Side{phi_word(), false},
                  Side{{}, true},
                  true});
  add("s1 s2 w2 w1 = w1 (s1 s2 w0 w2) w1", psi_word(),
      {G::w1, G::sigma1, G::sigma2, G::w0, G::w2, G::w1});
  return rels;
}

}  // namespace

PointConfig<QuadExt> sample_config(Rng& rng, bool normalize) {
  Config c{rng.quadext(), rng.quadext(), rng.quadext(),
           rng.quadext(), rng.quadext(), rng.quadext()};
  if (normalize) c.a2 = QuadExt(1) - c.a0 - c.a1;
  return c;
}

SuiteReport weyl_relations_suite(int trials, std::uint64_t seed) {
  if (trials < 1) throw usage_error("weyl relations: trials must be >= 1");
  SuiteReport report;
  report.name = "weyl-relations";
  report.config = Json{{"trials", trials}, {"seed", seed}};

  const auto rels = relation_table();
  for (std::size_t r = 0; r < rels.size(); ++r) {
    const Relation& rel = rels[r];
    int failures = 0;
    int abandoned = 0;
    Json witness;
    for (int trial = 0; trial < trials; ++trial) {
      Rng rng = Rng::stream(seed, r * 1000003ULL + static_cast<std::uint64_t>(trial));
      bool done = false;
      for (int attempt = 0; attempt < kMaxResamples && !done; ++attempt) {
        Config c = sample_config(rng, rel.normalized_sampling);
        try {
          Config lhs = rel.lhs.eval(c);
          Config rhs = rel.rhs.eval(c);
          done = true;
          if (!(lhs == rhs)) {
            ++failures;
            if (witness.empty())
              witness = Json{{"trial", trial}, {"config", to_json(c)},
                             {"lhs", to_json(lhs)}, {"rhs", to_json(rhs)}};
          }
        } catch (const singular_point&) {
          // exceptional locus: resample rather than perturb
        }
      }
      if (!done) {
        ++abandoned;
        if (witness.empty())
          witness = Json{{"trial", trial},
                         {"diagnostic", "exceeded resample budget on exceptional locus"}};
      }
    }
    Json detail{{"relation", rel.name}, {"trials", trials}, {"failures", failures}};
    if (abandoned > 0) detail["abandoned_trials"] = abandoned;
    if (!witness.empty()) detail["first_failure_witness"] = witness;
    report.add(rel.name, failures == 0 && abandoned == 0, detail);
  }
  return report;
}

SuiteReport theorem1_suite(int trials, std::uint64_t seed) {
  if (trials < 1) throw usage_error("theorem1: trials must be >= 1");
  SuiteReport report;
  report.name = "theorem1";
  report.config = Json{{"trials", trials}, {"seed", seed}};

  auto sample_state = [](Rng& rng) {
    XYState<QuadExt> st{QuadExt(rng.rational(20, 20)), QuadExt(rng.rational(20, 20)),
                        QuadExt(rng.rational(20, 20)), QuadExt(rng.nonzero_rational(20, 20)),
                        QuadExt(rng.nonzero_rational(20, 20))};
    return st;
  };

  {
    int failures = 0, abandoned = 0;
    Json witness;
    for (int trial = 0; trial < trials; ++trial) {
      Rng rng = Rng::stream(seed, 1000000007ULL + static_cast<std::uint64_t>(trial));
      bool done = false;
      for (int attempt = 0; attempt < kMaxResamples && !done; ++attempt) {
        XYState<QuadExt> st = sample_state(rng);
        try {
          auto outcome = theorem1_check(st);
          done = true;
          if (!outcome.equal) {
            ++failures;
            if (witness.empty()) {
              Json state;
              state["lambda"] = to_json(st.lambda);
              state["s"] = to_json(st.s);
              state["n"] = to_json(st.n);
              state["x"] = to_json(st.x);
              state["y"] = to_json(st.y);
              witness = Json{{"trial", trial}, {"state", state}};
            }
          }
        } catch (const singular_point&) {
        }
      }
      if (!done) ++abandoned;
    }
    Json detail{{"trials", trials}, {"failures", failures}};
    if (abandoned > 0) detail["abandoned_trials"] = abandoned;
    if (!witness.empty()) detail["first_failure_witness"] = witness;
    report.add("psi = conjugated phi at random exact states", failures == 0 && abandoned == 0,
               detail);
  }

  {
    int failures = 0, abandoned = 0;
    for (int trial = 0; trial < trials; ++trial) {
      Rng rng = Rng::stream(seed, 2000000011ULL + static_cast<std::uint64_t>(trial));
      bool done = false;
      for (int attempt = 0; attempt < kMaxResamples && !done; ++attempt) {
        XYState<QuadExt> st = sample_state(rng);
        try {
          XYState<QuadExt> back = qp_to_xy(xy_to_qp(st), st.lambda);
          done = true;
          if (!(back == st)) ++failures;
        } catch (const singular_point&) {
        }
      }
      if (!done) ++abandoned;
    }
    report.add("coordinate round-trip is the identity", failures == 0 && abandoned == 0,
               Json{{"trials", trials}, {"failures", failures}});
  }

  {
    int failures = 0, abandoned = 0;
    for (int trial = 0; trial < trials; ++trial) {
      Rng rng = Rng::stream(seed, 3000000019ULL + static_cast<std::uint64_t>(trial));
      bool done = false;
      for (int attempt = 0; attempt < kMaxResamples && !done; ++attempt) {
        Config c = sample_config(rng, /*normalize=*/true);
        try {
          auto res = sk7_residuals(c);
          done = true;
          if (!res[0].is_zero() || !res[1].is_zero()) ++failures;
        } catch (const singular_point&) {
        }
      }
      if (!done) ++abandoned;
    }
    report.add("relabeled system holds across one step", failures == 0 && abandoned == 0,
               Json{{"trials", trials}, {"failures", failures}});
  }

  return report;
}

}  // namespace dpe6
