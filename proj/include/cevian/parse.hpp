#pragma once

#include <string>
#include <string_view>

#include "cevian/orbit.hpp"
#include "cevian/shape.hpp"

namespace cevian {

/// Arithmetic expression over Q(zeta12): rationals and finite decimals,
/// + - * / ^ (integer exponents), parentheses, implicit multiplication
/// ("4i", "2(1+w)") and the constants z (zeta), w (omega), r (rho), i.
Cyc12 parse_cyc12(std::string_view text);

/// "(a, b, c)" with Cyc12 expressions, or "[[re,im],[re,im],[re,im]]".
Triple<Cyc12> parse_triple(std::string_view text);

/// Operator literal and a normalized description of it.
struct OperatorLiteral {
  ExtOp<Cyc12> op;
  std::string description;
};

/// One of
///   S[p=..,q=..]  S[eta=..,eta'=..]  S[a=..,b=..,g=..]
///   M[wx/yz][p=..,q=..]  M[wx/yz][eta=..,eta'=..]
///   H[s=..]  C[s=..]
OperatorLiteral parse_operator(std::string_view text);

/// "k:coef, k:coef, ..." with integer frequencies and Cyc12 coefficients.
TrigPoly parse_trig_poly(std::string_view text);

ExtOp<Approx> downcast(const ExtOp<Cyc12>& op);

}  // namespace cevian
