#include "ggp/summand.hpp"

#include "ggp/error.hpp"

namespace ggp {

std::string_view to_string(Duality d) {
  switch (d) {
    case Duality::Plus: return "+1";
    case Duality::Minus: return "-1";
    case Duality::None: return "none";
  }
  return "none";
}

Duality duality_of(Sign s) { return s.is_plus() ? Duality::Plus : Duality::Minus; }

Summand Summand::atom(std::string base, int dim, Duality base_duality, bool tempered,
                      bool sl2_trivial) {
  if (base.empty()) throw Error(ErrorKind::InvalidSummand, "empty base label");
  if (dim < 1) throw Error(ErrorKind::InvalidSummand, "dimension of " + base + " must be positive");
  if (base == kCharacterBase && (dim != 1 || base_duality != Duality::Plus || !tempered || !sl2_trivial)) {
    throw Error(ErrorKind::InvalidSummand, "label '1' is reserved for character atoms");
  }
  Summand s;
  s.base_ = std::move(base);
  s.dim_ = dim;
  s.base_duality_ = base_duality;
  s.base_tempered_ = tempered;
  s.sl2_trivial_ = sl2_trivial;
  return s;
}

Summand Summand::character(const CharE& mu) {
  Summand s;
  s.base_ = std::string(kCharacterBase);
  s.twist_ = mu;
  return s;
}

Duality Summand::duality() const {
  if (!twist_.unitary() || base_duality_ == Duality::None) return Duality::None;
  const Sign base = base_duality_ == Duality::Plus ? Sign::plus() : Sign::minus();
  return duality_of(base * conj_dual_sign(twist_));
}

bool Summand::tempered() const { return base_tempered_ && twist_.unitary(); }

std::optional<CharE> Summand::as_character() const {
  if (!is_character()) return std::nullopt;
  return twist_;
}

std::string Summand::label() const { return dual_tag_ ? base_ + "~" : base_; }

std::string Summand::to_string() const {
  if (is_character()) return twist_.to_string();
  std::string out = label();
  if (dim_ != 1) out += "[dim " + std::to_string(dim_) + "]";
  if (!twist_.is_trivial()) out += "*" + twist_.to_string();
  return out;
}

Summand twist(const Summand& s, const CharE& mu) {
  Summand out = s;
  out.twist_ *= mu;
  return out;
}

Summand dual(const Summand& s) {
  Summand out = s;
  out.twist_ = s.twist_.inverse();
  if (s.base_duality_ == Duality::None) out.dual_tag_ = !s.dual_tag_;
  return out;
}

Summand conjugate_dual(const Summand& s) {
  Summand out = s;
  out.twist_ = s.twist_.with_slope_halves(-s.twist_.slope_halves());
  if (s.base_duality_ == Duality::None) out.dual_tag_ = !s.dual_tag_;
  return out;
}

}  // namespace ggp
