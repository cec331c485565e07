#include "ggp/character.hpp"

#include <algorithm>
#include <cstdlib>

#include "ggp/error.hpp"

namespace ggp {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonUnitarySlope: return "NonUnitarySlope";
    case ErrorKind::GradeConflict: return "GradeConflict";
    case ErrorKind::InvalidSummand: return "InvalidSummand";
    case ErrorKind::EmptyParameter: return "EmptyParameter";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::WrongDualitySign: return "WrongDualitySign";
    case ErrorKind::FlagContradiction: return "FlagContradiction";
    case ErrorKind::NotContained: return "NotContained";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::NoEmbedding: return "NoEmbedding";
    case ErrorKind::MissingTableEntry: return "MissingTableEntry";
    case ErrorKind::InvalidContext: return "InvalidContext";
    case ErrorKind::NotSupercuspidalPacket: return "NotSupercuspidalPacket";
    case ErrorKind::ChiWAbsent: return "ChiWAbsent";
    case ErrorKind::HypothesisViolation: return "HypothesisViolation";
    case ErrorKind::EngineInvariant: return "EngineInvariant";
  }
  return "Unknown";
}

Sign Sign::from_int(int value) {
  if (value == 1) return plus();
  if (value == -1) return minus();
  throw std::invalid_argument("sign must be +1 or -1, got " + std::to_string(value));
}

CharE CharE::generator(std::string name, Grade grade, int exponent) {
  CharE c;
  if (name.empty()) throw std::invalid_argument("character generator needs a name");
  if (exponent != 0) c.terms_.push_back({std::move(name), grade, exponent});
  return c;
}

CharE CharE::abs_power(int halves) {
  CharE c;
  c.slope_halves_ = halves;
  return c;
}

CharE CharE::operator*(const CharE& other) const {
  CharE out = *this;
  out *= other;
  return out;
}

CharE& CharE::operator*=(const CharE& other) {
  std::vector<CharTerm> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->name < b->name)) {
      merged.push_back(*a++);
    } else if (a == terms_.end() || b->name < a->name) {
      merged.push_back(*b++);
    } else {
      if (a->grade != b->grade) {
        throw Error(ErrorKind::GradeConflict,
                    "generator '" + a->name + "' used with two different restriction grades");
      }
      const int e = a->exponent + b->exponent;
      if (e != 0) merged.push_back({a->name, a->grade, e});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  slope_halves_ += other.slope_halves_;
  return *this;
}

CharE CharE::inverse() const { return pow(-1); }

CharE CharE::pow(int k) const {
  CharE out;
  if (k == 0) return out;
  for (const auto& t : terms_) out.terms_.push_back({t.name, t.grade, t.exponent * k});
  out.slope_halves_ = slope_halves_ * k;
  return out;
}

Grade CharE::restriction_grade() const {
  Grade g = Grade::Trivial;
  for (const auto& t : terms_) {
    if (t.grade == Grade::Omega) g = g + grade_of_power(std::abs(t.exponent));
  }
  return g;
}

int CharE::exponent(std::string_view name) const {
  for (const auto& t : terms_) {
    if (t.name == name) return t.exponent;
  }
  return 0;
}

CharE CharE::unitary_part() const { return with_slope_halves(0); }

CharE CharE::with_slope_halves(int halves) const {
  CharE out = *this;
  out.slope_halves_ = halves;
  return out;
}

std::string half_integer_to_string(int halves) {
  if (halves % 2 == 0) return std::to_string(halves / 2);
  return std::to_string(halves) + "/2";
}

std::string CharE::to_string() const {
  if (is_trivial()) return "1";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += '*';
    out += t.name;
    if (t.exponent != 1) out += "^" + std::to_string(t.exponent);
  }
  if (slope_halves_ != 0) {
    if (!out.empty()) out += '*';
    out += "|.|^" + half_integer_to_string(slope_halves_);
  }
  return out;
}

Sign conj_dual_sign(const CharE& mu) {
  if (!mu.unitary()) {
    throw Error(ErrorKind::NonUnitarySlope,
                "character " + mu.to_string() + " is not conjugate self-dual");
  }
  return sign_of(mu.restriction_grade());
}

}  // namespace ggp
