#pragma once

#include "garchmimic/copula.hpp"
#include "garchmimic/vtransform.hpp"

namespace garchmimic {

// Inverse-v-transformed copula of (V1^<-(U), V2^<-(V)) for (U,V) ~ base:
// density c(u,v) = c_base(V1(u), V2(v)).  When both transforms are linear
// the returned object carries closed-form cdf, h-functions and inverse
// h-functions; otherwise only density and sampling are available.
CopulaPtr inverse_vt_copula(CopulaPtr base, VTransform vt1, VTransform vt2);

// V-transformed copula of (V1(U), V2(V)): the four-branch Delta-weighted
// density.  Density and sampling only; no closed-form cdf exists.
CopulaPtr forward_vt_copula(CopulaPtr base, VTransform vt1, VTransform vt2);

// Shorthand for the closed-form construction with two linear v-transforms.
CopulaPtr linear_vt_copula(CopulaPtr base, double delta1, double delta2);

}  // namespace garchmimic
