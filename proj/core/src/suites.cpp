#include "qmsa/suites.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "qmsa/coaction.hpp"
#include "qmsa/hopf.hpp"
#include "qmsa/minkowski.hpp"
#include "qmsa/textio.hpp"
#include "qmsa/version.hpp"

namespace qmsa {

namespace {

constexpr unsigned long long kStepBound = 200000;

/// All algebras and derived structures shared by the suites. Everything is
/// immutable after construction, so suites may run on any worker.
struct Workspace {
  ManinAlgebra m42{manin_shape(4, 2)};
  ManinAlgebra m22{manin_shape(2, 2)};
  ManinAlgebra s{manin_shape(4, 2, 2)};
  ManinAlgebra gl2{manin_shape(2, 0)};
  Grassmannian gr{m42};
  MinkowskiSpace mink{gr};
  HopfGL2 hopf{};
  Cleaving cleaving{hopf};
};

std::string raw_word_text(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += "*";
    s += to_string(w[i]);
  }
  return s;
}

Word random_word(std::mt19937_64& rng, const AlgebraShape& sh, int max_len,
                 int min_len = 1) {
  std::uniform_int_distribution<int> len_d(min_len, max_len);
  std::uniform_int_distribution<int> row_d(1, sh.dim());
  std::uniform_int_distribution<int> col_d(1, sh.max_col());
  Word w;
  const int len = len_d(rng);
  for (int i = 0; i < len; ++i) w.push_back(gen(row_d(rng), col_d(rng)));
  return w;
}

GenId random_gen(std::mt19937_64& rng, const AlgebraShape& sh) {
  std::uniform_int_distribution<int> row_d(1, sh.dim());
  std::uniform_int_distribution<int> col_d(1, sh.max_col());
  return gen(row_d(rng), col_d(rng));
}

// ---------------------------------------------------------------------------
// manin-properties: engine soundness (confluence, termination, associativity,
// parity, q=1 supercommutativity) plus the bialgebra properties of the
// coproduct on random samples.
// ---------------------------------------------------------------------------

std::vector<RelationInstance> manin_properties(const Workspace& ws,
                                               const RunConfig& cfg) {
  std::vector<RelationInstance> out;
  const ManinAlgebra& A = ws.m42;
  std::mt19937_64 rng(cfg.seed);
  const int n_confluence = std::max(1, cfg.samples);
  const int n_assoc = std::max(1, 2 * cfg.samples / 5);
  const int n_morphism = std::max(1, cfg.samples / 5);

  for (int k = 0; k < n_confluence; ++k) {
    const Word w = random_word(rng, A.shape(), 5);
    out.push_back(run_instance("manin-properties",
                               "prop.confluence[" + std::to_string(k) + "]",
                               raw_word_text(w), "strategy-independent normal form", [&] {
      const Element l = A.normal_form(w, Strategy::kLeftmost);
      const Element r = A.normal_form(w, Strategy::kRightmost);
      const Element diff = l - r;
      return std::make_pair(print(diff), diff.is_zero());
    }));
  }

  for (int k = 0; k < n_confluence; ++k) {
    const Word w = random_word(rng, A.shape(), 6);
    out.push_back(run_instance("manin-properties",
                               "prop.termination[" + std::to_string(k) + "]",
                               raw_word_text(w),
                               "fixed point within " + std::to_string(kStepBound) +
                                   " rewrite steps", [&] {
      (void)A.normal_form(w);
      const auto steps = rewrite_steps();
      return std::make_pair("steps=" + std::to_string(steps), steps <= kStepBound);
    }));
  }

  for (int k = 0; k < n_assoc; ++k) {
    const Element x = Element::generator(random_gen(rng, A.shape()));
    const Element y = Element::generator(random_gen(rng, A.shape()));
    const Element z = Element::generator(random_gen(rng, A.shape()));
    out.push_back(run_instance("manin-properties",
                               "prop.assoc[" + std::to_string(k) + "]",
                               "(x*y)*z", "x*(y*z)", [&] {
      const Element diff =
          A.multiply(A.multiply(x, y), z) - A.multiply(x, A.multiply(y, z));
      return std::make_pair(print(diff), diff.is_zero());
    }));
  }

  for (int k = 0; k < n_assoc; ++k) {
    const GenId x = random_gen(rng, A.shape());
    const GenId y = random_gen(rng, A.shape());
    out.push_back(run_instance("manin-properties",
                               "prop.parity[" + std::to_string(k) + "]",
                               to_string(x) + "*" + to_string(y),
                               "parity-homogeneous product", [&] {
      const Element p = A.multiply(Element::generator(x), Element::generator(y));
      const int want = (A.parity(x) + A.parity(y)) & 1;
      for (const auto& [w, c] : p.terms())
        if (word_parity(w, A.shape()) != want)
          return std::make_pair(std::string("parity leak in ") + raw_word_text(w), false);
      return std::make_pair(std::string("0"), true);
    }));
  }

  // q = 1 supercommutativity on all generator pairs.
  for (GenId x : A.shape().generators())
    for (GenId y : A.shape().generators()) {
      out.push_back(run_instance("manin-properties",
                                 "prop.supercomm[" + to_string(x) + "|" + to_string(y) + "]",
                                 to_string(x) + "*" + to_string(y) + " at q=1",
                                 "(-1)^{|x||y|} " + to_string(y) + "*" + to_string(x), [&] {
        const Scalar sign = (A.parity(x) && A.parity(y)) ? -Scalar::one() : Scalar::one();
        const Element diff =
            (A.multiply(Element::generator(x), Element::generator(y)) -
             sign * A.multiply(Element::generator(y), Element::generator(x)))
                .specialize(1);
        return std::make_pair(print(diff), diff.is_zero());
      }));
    }

  // Coassociativity on all generators of M_q(4|2) and M_q(2|2).
  for (const ManinAlgebra* alg : {&ws.m42, &ws.m22}) {
    const TensorGenMap delta = coproduct_map(*alg);
    const std::string tag = alg == &ws.m42 ? "m42" : "m22";
    for (GenId g : alg->shape().generators()) {
      out.push_back(run_instance("manin-properties",
                                 "prop.coassoc[" + tag + ":" + to_string(g) + "]",
                                 "(Delta (x) id)Delta", "(id (x) Delta)Delta", [&] {
        const TensorElement dg = delta.apply(Element::generator(g));
        const bool pass = apply_delta_left(dg, delta) == apply_delta_right(dg, delta);
        return std::make_pair(pass ? std::string("0") : std::string("triple tensors differ"),
                              pass);
      }));
    }
  }

  // Counit axioms on all generators and on random quadratic elements.
  {
    const TensorGenMap delta = coproduct_map(A);
    const auto counit_check = [&](const std::string& id, const Element& x,
                                  const std::string& xt) {
      return run_instance("manin-properties", id, "(eps (x) id)Delta(" + xt + ")",
                          xt, [&] {
        const TensorElement dx = delta.apply(x);
        const Element diff =
            (collapse_left(dx) - x) + (collapse_right(dx) - x);
        return std::make_pair(print(diff), diff.is_zero());
      });
    };
    for (GenId g : A.shape().generators())
      out.push_back(counit_check("prop.counit[" + to_string(g) + "]",
                                 Element::generator(g), to_string(g)));
    for (int k = 0; k < n_morphism; ++k) {
      const GenId x = random_gen(rng, A.shape());
      const GenId y = random_gen(rng, A.shape());
      out.push_back(counit_check("prop.counit-quad[" + std::to_string(k) + "]",
                                 A.multiply(Element::generator(x), Element::generator(y)),
                                 to_string(x) + "*" + to_string(y)));
    }

    // Delta is an algebra morphism on random generator pairs.
    const TensorAlgebra T(A, A);
    for (int k = 0; k < n_morphism; ++k) {
      const GenId x = random_gen(rng, A.shape());
      const GenId y = random_gen(rng, A.shape());
      out.push_back(run_instance("manin-properties",
                                 "prop.delta-morphism[" + std::to_string(k) + "]",
                                 "Delta(" + to_string(x) + "*" + to_string(y) + ")",
                                 "Delta(x)*Delta(y)", [&] {
        const TensorElement lhs = delta.apply(A.straighten_pair(x, y));
        const TensorElement rhs =
            T.multiply(delta.apply(Element::generator(x)),
                       delta.apply(Element::generator(y)));
        const TensorElement diff = lhs - rhs;
        return std::make_pair(print(diff, "a", "a"), diff.is_zero());
      }));
    }

    // Koszul tensor multiplication is associative on simple tensors.
    for (int k = 0; k < n_morphism; ++k) {
      const TensorElement t1 = TensorElement::term(random_word(rng, A.shape(), 2, 0),
                                                   random_word(rng, A.shape(), 2, 0),
                                                   Scalar::one());
      const TensorElement t2 = TensorElement::term(random_word(rng, A.shape(), 2, 0),
                                                   random_word(rng, A.shape(), 2, 0),
                                                   Scalar::one());
      const TensorElement t3 = TensorElement::term(random_word(rng, A.shape(), 2, 0),
                                                   random_word(rng, A.shape(), 2, 0),
                                                   Scalar::one());
      out.push_back(run_instance("manin-properties",
                                 "prop.tensor-assoc[" + std::to_string(k) + "]",
                                 "(t1*t2)*t3", "t1*(t2*t3)", [&] {
        const TensorElement diff = T.multiply(T.multiply(t1, t2), t3) -
                                   T.multiply(t1, T.multiply(t2, t3));
        return std::make_pair(print(diff, "a", "a"), diff.is_zero());
      }));
    }
  }

  return out;
}

std::vector<RelationInstance> run_one(const std::string& name, const Workspace& ws,
                                      const RunConfig& cfg) {
  const QMode qm{cfg.q0};
  if (name == "manin-properties") return manin_properties(ws, cfg);
  if (name == "grassmann-cr") return verify_cr_suites(ws.gr, qm);
  if (name == "plucker") return verify_plucker_suite(ws.gr, qm);
  if (name == "classical-plucker") return verify_classical_suite(ws.gr);
  if (name == "closure") return straightening_closure(ws.gr, qm);
  if (name == "coaction") return verify_coaction(ws.gr, qm);
  if (name == "coinvariants") return coinvariance_check(ws.s, ws.gl2, qm);
  if (name == "minkowski") {
    auto out = ws.mink.build_twist_table(qm);
    auto cr = ws.mink.verify_minkowski_cr(qm);
    out.insert(out.end(), std::make_move_iterator(cr.begin()),
               std::make_move_iterator(cr.end()));
    return out;
  }
  if (name == "beta-iso") return ws.mink.verify_beta_iso(qm);
  if (name == "classical-bigcell") return ws.mink.verify_classical_bigcell();
  if (name == "hopf-axioms") return ws.hopf.verify_hopf_axioms(qm);
  if (name == "cleaving")
    return ws.cleaving.verify_cleaving(cfg.seed, std::max(1, cfg.samples / 25), qm);
  if (name == "coinvariant-generation")
    return ws.cleaving.verify_coinvariant_generation(qm);
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "manin-properties", "grassmann-cr",  "plucker",
      "classical-plucker", "closure",      "coaction",
      "coinvariants",      "minkowski",    "beta-iso",
      "classical-bigcell", "hopf-axioms",  "cleaving",
      "coinvariant-generation"};
  return names;
}

std::vector<std::string> resolve_suites(const std::vector<std::string>& requested) {
  std::vector<std::string> out;
  for (const std::string& name : requested) {
    if (name == "all") {
      for (const std::string& n : suite_names())
        if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
      continue;
    }
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), name) == names.end())
      throw std::invalid_argument("unknown suite: " + name);
    if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
  }
  return out;
}

RunReport run(const RunConfig& config) {
  if (config.q0 && *config.q0 == 0)
    throw std::invalid_argument("q0 = 0 is not a valid specialization point");
  if (config.jobs < 1) throw std::invalid_argument("jobs must be >= 1");
  const std::vector<std::string> selected = resolve_suites(config.suites);

  const Workspace ws;
  RunReport report;
  report.engine_version = kVersion;
  report.q_mode = config.q0 ? to_string(*config.q0) : "symbolic";
  report.seed = config.seed;
  report.jobs = config.jobs;
  report.samples = config.samples;
  report.suites.resize(selected.size());

  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= selected.size()) return;
      report.suites[i] = {selected[i], run_one(selected[i], ws, config)};
    }
  };
  const int n_threads =
      std::min<int>(config.jobs, static_cast<int>(selected.size()));
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return report;
}

}  // namespace qmsa
