#pragma once

#include "nbe/syntax.hpp"

namespace nbe::testing {

/// (Star => Star) => Star => Star, the type of Church numerals.
Ty church_ty();

/// \f:*->*. \x:*. f (f (... x)), n applications.
Tm church(unsigned n);

/// Addition on Church numerals: \m. \n. \f. \x. m f (n f x).
Tm church_add();

/// The eta-long normal form of church(n).
Nf church_nf(unsigned n);

/// S K K as a closed term of type Star => Star.
Tm skk();
Ty skk_ty();

/// The eta-long discipline: a lambda at every arrow type, a neutral spine at
/// the base type whose head is in scope and whose arguments are eta-long at
/// the types the head demands, with the spine consuming the head's whole
/// arrow telescope.
bool is_eta_long(const Cxt& ctx, const Ty& a, const Nf& n);

}  // namespace nbe::testing
