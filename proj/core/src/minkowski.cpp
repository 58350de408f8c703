#include "qmsa/minkowski.hpp"

#include <algorithm>
#include <sstream>

#include "qmsa/textio.hpp"

namespace qmsa {

namespace {

constexpr int kTwistScanMax = 4;

Scalar gap() { return Scalar::q_power(-1) - Scalar::q_power(1); }

struct MTerm {
  Scalar c;
  MinkGen g1, g2;
};

struct MRel {
  std::string id;
  std::vector<MTerm> lhs, rhs;
};

std::string fmt_side(const std::vector<MTerm>& side) {
  if (side.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : side) {
    bool neg = false;
    const std::string prefix = coefficient_prefix(t.c, neg);
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    os << prefix << t.g1.label() << "*" << t.g2.label();
  }
  return os.str();
}

MinkGen U(int i, int j) { return MinkGen{false, i, j}; }
MinkGen Nu(int k, int l) { return MinkGen{true, k, l}; }

std::vector<MRel> minkowski_relations() {
  const Scalar one = Scalar::one();
  const Scalar qinv = Scalar::q_power(-1);
  std::vector<MRel> out;
  for (int i = 3; i <= 4; ++i)
    out.push_back({"mink.1[i=" + std::to_string(i) + "]",
                   {{one, U(i, 2), U(i, 1)}},
                   {{qinv, U(i, 1), U(i, 2)}}});
  for (int k = 5; k <= 6; ++k)
    out.push_back({"mink.2[k=" + std::to_string(k) + "]",
                   {{one, Nu(k, 1), Nu(k, 2)}},
                   {{-qinv, Nu(k, 2), Nu(k, 1)}}});
  for (int l = 1; l <= 2; ++l)
    out.push_back({"mink.3[l=" + std::to_string(l) + "]",
                   {{one, Nu(5, l), Nu(6, l)}},
                   {{-qinv, Nu(6, l), Nu(5, l)}}});
  for (int j = 1; j <= 2; ++j)
    out.push_back({"mink.4[j=" + std::to_string(j) + "]",
                   {{one, U(3, j), U(4, j)}},
                   {{qinv, U(4, j), U(3, j)}}});
  for (int j = 1; j <= 2; ++j)
    for (int i = 3; i <= 4; ++i)
      for (int k = 5; k <= 6; ++k)
        out.push_back({"mink.5[i=" + std::to_string(i) + ",k=" + std::to_string(k) +
                           ",j=" + std::to_string(j) + "]",
                       {{one, U(i, j), Nu(k, j)}},
                       {{qinv, Nu(k, j), U(i, j)}}});
  for (int i = 3; i <= 4; ++i)
    for (int k = 5; k <= 6; ++k)
      out.push_back({"mink.6[i=" + std::to_string(i) + ",k=" + std::to_string(k) + "]",
                     {{one, U(i, 1), Nu(k, 2)}},
                     {{one, Nu(k, 2), U(i, 1)}}});
  out.push_back({"mink.7", {{one, U(3, 1), U(4, 2)}}, {{one, U(4, 2), U(3, 1)}}});
  out.push_back({"mink.8", {{one, Nu(5, 1), Nu(6, 2)}}, {{-one, Nu(6, 2), Nu(5, 1)}}});
  out.push_back({"mink.9",
                 {{one, U(3, 2), U(4, 1)}, {-one, U(4, 1), U(3, 2)}},
                 {{gap(), U(4, 2), U(3, 1)}}});
  for (int i = 3; i <= 4; ++i)
    for (int k = 5; k <= 6; ++k)
      out.push_back({"mink.10[i=" + std::to_string(i) + ",k=" + std::to_string(k) + "]",
                     {{one, U(i, 2), Nu(k, 1)}, {-one, Nu(k, 1), U(i, 2)}},
                     {{gap(), Nu(k, 2), U(i, 1)}}});
  out.push_back({"mink.11",
                 {{one, Nu(5, 2), Nu(6, 1)}, {one, Nu(6, 1), Nu(5, 2)}},
                 {{-gap(), Nu(6, 2), Nu(5, 1)}}});
  return out;
}

}  // namespace

MinkowskiSpace::MinkowskiSpace(const Grassmannian& gr)
    : gr_(&gr), ring_(gr.ambient(), gr.top_determinant(), "D_12") {
  const Element& d = gr.top_determinant();
  for (const Minor& g : gr.generators()) {
    const Element dg = gr.ambient().multiply(d, g.expansion);
    const Element gd = gr.ambient().multiply(g.expansion, d);
    for (int c = 0; c <= kTwistScanMax; ++c) {
      if (dg == Scalar::q_power(-c) * gd) {
        twist_.emplace(std::make_pair(g.r, g.s), c);
        break;
      }
    }
  }
}

std::optional<int> MinkowskiSpace::twist_of(int r, int s) const {
  auto it = twist_.find({r, s});
  if (it == twist_.end()) return std::nullopt;
  return it->second;
}

LocalizedElement MinkowskiSpace::value(const MinkGen& g) const {
  if (g.col == 2)
    return ring_.make(gr_->at(1, g.row).expansion, 1);
  return ring_.make(-Scalar::q_power(-1) * gr_->at(2, g.row).expansion, 1);
}

std::vector<MinkGen> MinkowskiSpace::generators() const {
  std::vector<MinkGen> out;
  for (int i = 3; i <= 4; ++i)
    for (int j = 1; j <= 2; ++j) out.push_back(U(i, j));
  for (int k = 5; k <= 6; ++k)
    for (int l = 1; l <= 2; ++l) out.push_back(Nu(k, l));
  return out;
}

std::vector<RelationInstance> MinkowskiSpace::build_twist_table(const QMode& qm) const {
  std::vector<RelationInstance> out;
  for (const Minor& g : gr_->generators()) {
    const auto c = twist_of(g.r, g.s);
    const std::string rhs =
        c ? "q^-" + std::to_string(*c) + "*" + g.label() + "*D[1,2]"
          : "no exponent in range";
    out.push_back(run_instance("minkowski", "twist[" + g.label() + "]",
                               "D[1,2]*" + g.label(), rhs, [&] {
      if (!c) return std::make_pair(std::string("not q-normal"), false);
      const Element residue = qm.view(
          gr_->ambient().multiply(gr_->top_determinant(), g.expansion) -
          Scalar::q_power(-*c) *
              gr_->ambient().multiply(g.expansion, gr_->top_determinant()));
      return std::make_pair(print(residue), residue.is_zero() && *c >= 0 && *c <= 2);
    }));
  }
  return out;
}

std::vector<RelationInstance> MinkowskiSpace::verify_minkowski_cr(const QMode& qm) const {
  std::vector<RelationInstance> out;
  for (const MRel& rel : minkowski_relations()) {
    const auto side = [&](const std::vector<MTerm>& terms) {
      LocalizedElement acc{Element::zero(), 0};
      for (const MTerm& t : terms)
        acc = ring_.add(acc, ring_.scale(t.c, ring_.mul(value(t.g1), value(t.g2))));
      return acc;
    };
    RelationInstance inst = run_instance("minkowski", rel.id, fmt_side(rel.lhs),
                                         fmt_side(rel.rhs), [&] {
      const Element residue = qm.view(ring_.residue(side(rel.lhs), side(rel.rhs)));
      return std::make_pair(print(residue), residue.is_zero());
    });
    if (!inst.pass)
      inst.lhs_normal = print(side(rel.lhs).num) + " over Dinv^" +
                        std::to_string(side(rel.lhs).denom_pow);
    out.push_back(std::move(inst));
  }
  return out;
}

// ---------------------------------------------------------------------------
// beta: C_q[M] -> M_q(2|2) restricted to columns {1,2}. The map sends
// u[i,j] to z[i-2, 3-j] and nu[k,l] to xi[k-2, 3-l]; the column swap makes
// the images satisfy the Manin relations verbatim.
// ---------------------------------------------------------------------------

namespace {

std::string target_label(GenId g) {
  const char* fam = g.row <= 2 ? "z" : "xi";
  return std::string(fam) + "[" + std::to_string(g.row) + "," +
         std::to_string(g.col) + "]";
}

std::string target_print(const Element& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : x.terms()) {
    bool neg = false;
    const std::string prefix = coefficient_prefix(c, neg);
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    if (w.empty()) {
      os << (prefix.empty() ? "1" : prefix.substr(0, prefix.size() - 1));
      continue;
    }
    os << prefix;
    bool fw = true;
    for (GenId g : w) {
      if (!fw) os << "*";
      fw = false;
      os << target_label(g);
    }
  }
  return os.str();
}

MinkGen beta_inverse(GenId g) {
  return MinkGen{g.row > 2, g.row + 2, g.col == 1 ? 2 : 1};
}

GenId beta_forward(const MinkGen& m) {
  return gen(m.row - 2, m.col == 1 ? 2 : 1);
}

std::string manin_case(const ManinAlgebra& t, GenId x, GenId y) {
  if (x == y) return t.parity(x) ? "odd square" : "even square";
  if (x.row == y.row) return "same row";
  if (x.col == y.col) return "same column";
  const bool diag = (x.row < y.row) == (x.col < y.col);
  return diag ? "diagonal" : "anti-diagonal";
}

}  // namespace

std::vector<RelationInstance> MinkowskiSpace::verify_beta_iso(const QMode& qm) const {
  const ManinAlgebra target(manin_shape(2, 2, 2));
  std::vector<RelationInstance> out;

  const auto phi = [&](GenId g) { return value(beta_inverse(g)); };
  const auto phi_elem = [&](const Element& x) {
    LocalizedElement acc{Element::zero(), 0};
    for (const auto& [w, c] : x.terms()) {
      LocalizedElement prod = ring_.unit();
      for (GenId g : w) prod = ring_.mul(prod, phi(g));
      acc = ring_.add(acc, ring_.scale(c, prod));
    }
    return acc;
  };

  // Every ordered generator pair of the target, pulled back.
  const auto gens = target.shape().generators();
  for (GenId x : gens)
    for (GenId y : gens) {
      const Element nf = target.straighten_pair(x, y);
      out.push_back(run_instance(
          "beta-iso", "beta.pair[" + target_label(x) + "|" + target_label(y) + "]",
          "phi(" + target_label(x) + ")*phi(" + target_label(y) + ")",
          "phi(" + target_print(nf) + ")", [&] {
        const LocalizedElement lhs = ring_.mul(phi(x), phi(y));
        const LocalizedElement rhs = phi_elem(nf);
        const Element residue = qm.view(ring_.residue(lhs, rhs));
        return std::make_pair(print(residue), residue.is_zero());
      }));
    }

  // Odd squares, stated separately.
  for (GenId x : gens) {
    if (target.parity(x) == 0) continue;
    out.push_back(run_instance("beta-iso", "beta.square[" + target_label(x) + "]",
                               "phi(" + target_label(x) + ")^2", "0", [&] {
      const LocalizedElement sq = ring_.mul(phi(x), phi(x));
      const Element residue = qm.view(ring_.residue(sq, LocalizedElement{}));
      return std::make_pair(print(residue), residue.is_zero());
    }));
  }

  // Each Minkowski commutation line, pushed forward, is an instance of the
  // Manin relation of its leading pair.
  for (const MRel& rel : minkowski_relations()) {
    const GenId bx = beta_forward(rel.lhs.front().g1);
    const GenId by = beta_forward(rel.lhs.front().g2);
    out.push_back(run_instance(
        "beta-iso", "beta.match[" + rel.id + "]", "beta(" + fmt_side(rel.lhs) + ")",
        "beta(" + fmt_side(rel.rhs) + ")  [ManinCR " + manin_case(target, bx, by) +
            " for " + target_label(bx) + "," + target_label(by) + "]",
        [&] {
      const auto side = [&](const std::vector<MTerm>& terms) {
        Element acc;
        for (const MTerm& t : terms)
          acc += t.c * target.multiply(Element::generator(beta_forward(t.g1)),
                                       Element::generator(beta_forward(t.g2)));
        return acc;
      };
      const Element residue = qm.view(side(rel.lhs) - side(rel.rhs));
      return std::make_pair(target_print(residue), residue.is_zero());
    }));
  }

  // Generator-level bijection.
  out.push_back(run_instance("beta-iso", "beta.bijection",
                             "beta on the 8 generators", "8 distinct images", [&] {
    std::vector<GenId> images;
    for (const MinkGen& m : generators()) images.push_back(beta_forward(m));
    std::sort(images.begin(), images.end());
    const bool distinct =
        std::adjacent_find(images.begin(), images.end()) == images.end();
    const bool total = images.size() == gens.size();
    std::vector<LocalizedElement> values;
    for (const MinkGen& m : generators()) values.push_back(value(m));
    bool values_distinct = true;
    for (std::size_t a = 0; a < values.size(); ++a)
      for (std::size_t b = a + 1; b < values.size(); ++b)
        if (ring_.equal(values[a], values[b])) values_distinct = false;
    const bool pass = distinct && total && values_distinct;
    return std::make_pair(pass ? std::string("0") : std::string("degenerate"), pass);
  }));
  return out;
}

std::vector<RelationInstance> MinkowskiSpace::verify_classical_bigcell() const {
  const ClassicalAlgebra cl(manin_shape(4, 2));
  std::vector<RelationInstance> out;
  for (const MinkGen& g : generators()) {
    const ClassicalElement expected =
        g.col == 1 ? -cl.minor(2, g.row) : cl.minor(1, g.row);
    const std::string rhs = std::string(g.col == 1 ? "-d[2," : "d[1,") +
                            std::to_string(g.row) + "]*Dinv";
    out.push_back(run_instance("classical-bigcell", "bigcell[" + g.label() + "]",
                               g.label() + " at q=1", rhs, [&] {
      const LocalizedElement v = value(g);
      const Element at1 = v.num.specialize(1);
      const bool pass = v.denom_pow == 1 && equals_specialized(at1, expected);
      Element residue = at1;
      for (const auto& [w, c] : expected.terms()) residue.add_term(w, -Scalar::of(c));
      return std::make_pair(print(residue), pass);
    }));
  }
  return out;
}

}  // namespace qmsa
