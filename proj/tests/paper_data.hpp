#pragma once

// Transcribed polynomial data for the surfon chain (so(5) > so(3)):
// the quadratic invariants b1, b2 and the quartic D1..D4, exactly as
// printed, in the l0,l1,lm1,q3..qm3 coordinates.

#include <string>

#include "commutant/builtin_chains.hpp"
#include "commutant/polynomial.hpp"

namespace paper_data {

inline const std::string kSurfonB1 = "l0^2 + l1*lm1";

inline const std::string kSurfonB2 =
    "5/3*q1*qm1 - 5/2*q0^2 - 1/6*q2*qm2 + q3*qm3";

inline const std::string kSurfonD1 =
    "4*l0^3*q0 + l1*lm1^2*q1 - lm1^3*q3 - l1^2*lm1*qm1"
    " - 4*l0^2*lm1*q1 + 4*l0^2*l1*qm1"
    " - 6*l0*l1*lm1*q0 + l0*lm1^2*q2 + l0*l1^2*qm2 + l1^3*qm3";

inline const std::string kSurfonD2 =
    "lm1^2*(q1^2 - q0*q2 + q3*qm1)"
    " + l0*lm1*(-2*q0*q1 + q2*qm1 - q3*qm2)"
    " + l1^2*(qm1^2 - q0*qm2 + q1*qm3)"
    " + l0*l1*(2*q0*qm1 - q1*qm2 + q2*qm3)"
    " + l1*lm1*(-2*q0^2 + q1*qm1 - q3*qm3)"
    " + 2*l0^2*(2*q0^2 - q1*qm1 + q3*qm3)";

inline const std::string kSurfonD3 =
    "lm1*(-6*q0^2*q1 + 4*q1^2*qm1 + q0*q2*qm1 - 8*q3*qm1^2 - q1*q2*qm2"
    " + 9*q0*q3*qm2 + q2^2*qm3 - 12*q1*q3*qm3)"
    " + l1*(6*q0^2*qm1 - 4*q1*qm1^2 - q0*q1*qm2 + q2*qm1*qm2 - q3*qm2^2"
    " + 8*q1^2*qm3 - 9*q0*q2*qm3 + 12*q3*qm1*qm3)"
    " + 2*l0*(18*q0^3 + 3*q2*qm1^2 + 3*q1^2*qm2 - q3*qm1*qm2 - q1*q2*qm3"
    " + q0*(-17*q1*qm1 - 2*q2*qm2 + 9*q3*qm3))";

inline const std::string kSurfonD4 =
    "81*q0^4 + 16*q1^2*qm1^2 - 48*q3*qm1^3 - 8*q1*q2*qm1*qm2 + q2^2*qm2^2"
    " - 12*q1*q3*qm2^2"
    " - 12*(4*q1^3 + q2^2*qm1 - 12*q1*q3*qm1)*qm3"
    " - 18*q0^2*(6*q1*qm1 + q2*qm2 + 18*q3*qm3)"
    " + 24*q0*((q1^2 + 3*q3*qm1)*qm2 + q2*(qm1^2 + 3*q1*qm3))";

inline commutant::Polynomial surfon_poly(const std::string& text) {
  static const commutant::ChainSpec chain = commutant::builtin_chain("surfon");
  return commutant::Polynomial::parse(text, chain.algebra().generators());
}

}  // namespace paper_data
