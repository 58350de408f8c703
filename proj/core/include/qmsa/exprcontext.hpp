#pragma once

#include "qmsa/minkowski.hpp"
#include "qmsa/textio.hpp"

namespace qmsa {

/// Atom resolver for expressions over the ambient algebra M_q(4|2):
/// a[i,j], D[r,s], D[r,s;k,l], u[i,j], nu[k,l], Dinv.
class AmbientResolver : public AtomResolver {
 public:
  explicit AmbientResolver(const MinkowskiSpace& mink) : mink_(&mink) {}

  const ManinAlgebra& algebra() const override {
    return mink_->grassmannian().ambient();
  }
  const LocalizedRing* ring() const override { return &mink_->ring(); }
  LocalizedElement atom(const ExprNode& node) const override;

 private:
  const MinkowskiSpace* mink_;
};

/// Atom resolver for GL_q(2) expressions: g[i,j], Detinv.
class GL2Resolver : public AtomResolver {
 public:
  GL2Resolver(const ManinAlgebra& gl2, const LocalizedRing& ring)
      : gl2_(&gl2), ring_(&ring) {}

  const ManinAlgebra& algebra() const override { return *gl2_; }
  const LocalizedRing* ring() const override { return ring_; }
  LocalizedElement atom(const ExprNode& node) const override;

 private:
  const ManinAlgebra* gl2_;
  const LocalizedRing* ring_;
};

}  // namespace qmsa
