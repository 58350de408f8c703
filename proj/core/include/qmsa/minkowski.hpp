#pragma once

#include "qmsa/localized.hpp"
#include "qmsa/minors.hpp"

namespace qmsa {

/// A Minkowski generator: u[row,col] (even) or nu[row,col] (odd), realized
/// as +-q^-1-scaled minor over D_12^-1.
struct MinkGen {
  bool odd = false;
  int row = 0, col = 0;

  std::string label() const {
    return std::string(odd ? "nu" : "u") + "[" + std::to_string(row) + "," +
           std::to_string(col) + "]";
  }
  friend auto operator<=>(const MinkGen&, const MinkGen&) = default;
};

/// The chiral Minkowski superspace inside the localization of the minor
/// subalgebra of M_q(4|2) at the q-normal minor D_12.
class MinkowskiSpace {
 public:
  explicit MinkowskiSpace(const Grassmannian& gr);

  const Grassmannian& grassmannian() const { return *gr_; }
  const LocalizedRing& ring() const { return ring_; }

  /// Certified exponents c(G) with D_12 * G = q^{-c(G)} * G * D_12;
  /// nullopt when no exponent in the scanned range works.
  std::optional<int> twist_of(int r, int s) const;

  /// u[i,1] = -q^-1 D_2i Dinv, u[i,2] = D_1i Dinv (i = 3,4); likewise
  /// nu[k,l] for rows k = 5,6.
  LocalizedElement value(const MinkGen& g) const;
  std::vector<MinkGen> generators() const;

  /// Emits the 17 certified twist exponents as instances (entries must lie
  /// in {0,1,2}).
  std::vector<RelationInstance> build_twist_table(const QMode& qm = {}) const;

  /// The 28 Minkowski commutation instances, cleared of denominators and
  /// verified in the ambient algebra.
  std::vector<RelationInstance> verify_minkowski_cr(const QMode& qm = {}) const;

  /// The generator-level isomorphism with the rectangular Manin algebra
  /// M_q(2|2) on columns {1,2}: pullback of every ordered generator pair
  /// relation and every odd square, plus the match of each Minkowski
  /// commutation line with the Manin relation it instantiates.
  std::vector<RelationInstance> verify_beta_iso(const QMode& qm = {}) const;

  /// q = 1 generators against the classical big-cell coordinates.
  std::vector<RelationInstance> verify_classical_bigcell() const;

 private:
  const Grassmannian* gr_;
  LocalizedRing ring_;
  std::map<std::pair<int, int>, int> twist_;
};

}  // namespace qmsa
