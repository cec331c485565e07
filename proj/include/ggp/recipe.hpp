#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ggp/character.hpp"
#include "ggp/component_group.hpp"
#include "ggp/epsilon.hpp"
#include "ggp/parameter.hpp"
#include "ggp/theta.hpp"

namespace ggp {

/// The characters fixing the lifts: the Fourier-Jacobi character chi (restricts
/// to omega) and the splitting pair chi_v, chi_w (both restrict to omega^n).
struct GgpSetting {
  int n = 1;
  CharE chi;
  CharE chi_v;
  CharE chi_w;
  BaseFieldData base;

  /// Throws InvalidContext.
  void validate() const;
  bool odd() const { return n % 2 != 0; }
  /// psi2E for n odd, psiE for n even.
  PsiTag fj_tag() const { return odd() ? PsiTag::psi2E : PsiTag::psiE; }

  /// U(W_n) -> U(V_{n+2}) relative to (chi_w, chi_v).
  ThetaContext leg1() const;
  /// U(W_n) -> U(V_{n+1}) relative to (chi_w, chi_v chi^((-1)^n)).
  ThetaContext leg2() const;
  /// The same legs relative to the inverted characters.
  ThetaContext leg1_inverted() const;
  ThetaContext leg2_inverted() const;
  /// chi^((-1)^(n+1)): the character of the rank-one leg.
  CharE leg3_character() const;

  /// phi = phi2 tensor twist + chi_w: twist = chi_v^-1 chi chi_w.
  CharE recover_twist() const;
  /// The summand of phi2 whose presence doubles chi_w in phi: chi_v chi^-1.
  CharE doubling_character() const;
};

/// Setting with chi_v = chi^(n+2) and chi_w = chi^n.
GgpSetting identified_setting(int n, CharE chi, BaseFieldData base = {});

/// Bessel recipe: a_i -> eps(d_i (x) h, psiNeg2E), b_j -> eps(d (x) h_j, psiNeg2E).
CharPair bessel_eta(const LParameter& d, const LParameter& h, const EpsilonOracle& oracle);

/// Fourier-Jacobi recipe: a_i -> eps(d_i (x) h (x) chi^-1), b_j -> eps(d (x) h_j (x)
/// chi^-1), with psi2E for n odd and psiE for n even.
CharPair fj_eta(const LParameter& d, const LParameter& h, int n, const CharE& chi,
                const EpsilonOracle& oracle);

/// (phi minus one chi_w) untwisted, as a tempered parameter of U(W_n). Throws
/// ChiWAbsent.
LParameter recover_phi2(const LParameter& phi, const GgpSetting& setting);

/// A representation of a packet: parameter, character, and the side it lives on.
struct PacketMember {
  LParameter parameter;
  SChar character;
  Sign side;

  static PacketMember of(LParameter parameter, SChar character);
};

struct DistinguishedPair {
  PacketMember big;    // on U(V_{n+2})
  PacketMember small;  // on U(V_{n+1})

  CharPair characters() const { return {big.character, small.character}; }
};

/// Closed-form pair when chi_w occurs once in phi: characters of
/// S_{theta(phi1)} and S_phi.
CharPair closed_form_pair(const LParameter& phi1, const LParameter& phi, const GgpSetting& setting,
                          const EpsilonOracle& oracle);

/// Pair for the case where phi2 contains the doubling character, assuming
/// every nonzero lift back from theta(phi2) is irreducible. The small
/// character is computed on S_phi2 and moved to S_{theta(phi2)} = S_phi.
CharPair irreducible_lift_pair(const LParameter& phi1, const LParameter& phi, const GgpSetting& setting,
                               const EpsilonOracle& oracle);

enum class MultiplicityCase { Zero, One, AtLeastOne };

std::string_view to_string(MultiplicityCase c);

struct GgpOptions {
  /// The caller vouches that every nonzero lift back from theta(phi2) is
  /// irreducible; enables the formula when chi_w occurs more than once.
  bool certify_irreducible_lift = false;
};

struct MultiplicityReport {
  MultiplicityCase result = MultiplicityCase::Zero;
  std::optional<LParameter> theta_phi1;
  std::optional<LParameter> recovered_phi2;
  std::optional<DistinguishedPair> pair;
  /// "none", "closed-form", "irreducible-lift" or "see-saw".
  std::string method = "none";
  int chi_w_multiplicity = 0;
  std::vector<OracleCall> audit;
};

/// Checks that phi1 is a supercuspidal-packet parameter of U(W_n) and phi a
/// tempered parameter of U(V_{n+1}). Throws HypothesisViolation or
/// NotSupercuspidalPacket.
void check_hypotheses(const LParameter& phi1, const LParameter& phi, const GgpSetting& setting);

MultiplicityReport main_multiplicity(const LParameter& phi1, const LParameter& phi, const GgpSetting& setting,
                                     const EpsilonOracle& oracle, const GgpOptions& options = {});

}  // namespace ggp
