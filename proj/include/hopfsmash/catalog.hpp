#pragma once

#include <map>

#include "hopfsmash/representations.hpp"

namespace hopfsmash {

/// A built-in example: the algebra together with named automorphisms and
/// representations.  Everything is verified at build time, so holding an
/// entry means the axiom suite passed.  Entries are constructed once and
/// shared; repeated lookups return the same underlying algebra object.
struct CatalogEntry {
  std::string name;
  HopfPtr algebra;
  std::map<std::string, HopfAutomorphism> automorphisms;
  std::map<std::string, Representation> representations;
  std::string notes;
};

/// The eight-dimensional semisimple algebra generated by group-likes x, y
/// and an element z with z^2 = (1+x+y-xy)/2 and twisted commutation
/// zx = yz, zy = xz.  Basis {1, x, y, xy, z, xz, yz, xyz}.  Carries the
/// order-2 automorphism tau4 exchanging x and y, and the two-dimensional
/// simple representation N.
CatalogEntry h8();

/// The eight-dimensional non-semisimple algebra generated by a group-like
/// g and skew-primitive x, y with gx = -xg, gy = -yg, xy = -yx, g^2 = 1,
/// x^2 = y^2 = 0.  Basis {1, g, x, gx, y, gy, xy, gxy}.  S^2 is not the
/// identity; the two-sided integral is xy + gxy.
CatalogEntry nichols8();

/// The same algebra over Q(zeta3), carrying the order-3 diagonal
/// automorphism x -> zeta3 x, y -> zeta3^2 y.
CatalogEntry nichols8_z3();

/// The automorphism of the nichols8 instance over the scalars' field that
/// fixes g and acts on span{x, y} by x -> ax + by, y -> cx + dy, extended
/// multiplicatively (in particular xy -> (ad-bc) xy).  The parameter
/// matrix must be invertible.
HopfAutomorphism nichols8_automorphism(const FieldScalar& a, const FieldScalar& b,
                                       const FieldScalar& c, const FieldScalar& d);

/// Every built-in entry name, in lookup order.
std::vector<std::string> catalog_names();

/// Lookup by name; throws std::invalid_argument for unknown names.  The
/// catalog covers h8, nichols8, nichols8_z3, the cyclic group algebras
/// kC2..kC5, kS3, and the function algebras k^C2, k^C3, k^S3.
const CatalogEntry& catalog_entry(const std::string& name);

}  // namespace hopfsmash
