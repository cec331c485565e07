#pragma once

#include "ggp/character.hpp"
#include "ggp/parameter.hpp"
#include "ggp/summand.hpp"

namespace fixtures {

inline ggp::CharE chi(int k = 1) { return ggp::CharE::generator("chi", ggp::Grade::Omega, k); }
inline ggp::CharE chi_v(int k = 1) { return ggp::CharE::generator("chiV", ggp::Grade::Trivial, k); }
inline ggp::CharE chi_w(int k = 1) { return ggp::CharE::generator("chiW", ggp::Grade::Omega, k); }

inline ggp::Summand atom(const std::string& label, int dim, ggp::Duality d = ggp::Duality::Plus) {
  return ggp::Summand::atom(label, dim, d);
}

// A + B (dims 1, 2) on U(W_3), flagged as a supercuspidal packet.
inline ggp::LParameter phi1_AB() {
  ggp::ParameterFlags flags;
  flags.supercuspidal_packet = true;
  return ggp::mk_parameter({{atom("A", 1), 1}, {atom("B", 2), 1}}, {}, ggp::skew_hermitian(3), flags);
}

}  // namespace fixtures
