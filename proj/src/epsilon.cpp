#include "ggp/epsilon.hpp"

#include <algorithm>

#include "ggp/error.hpp"

namespace ggp {

std::string_view to_string(PsiTag tag) {
  switch (tag) {
    case PsiTag::psiE: return "psiE";
    case PsiTag::psi2E: return "psi2E";
    case PsiTag::psiNeg2E: return "psiNeg2E";
  }
  return "psiE";
}

std::optional<PsiTag> parse_psi_tag(std::string_view text) {
  if (text == "psiE") return PsiTag::psiE;
  if (text == "psi2E") return PsiTag::psi2E;
  if (text == "psiNeg2E") return PsiTag::psiNeg2E;
  return std::nullopt;
}

AtomKey AtomKey::from_parts(std::vector<std::string> labels, CharE twist) {
  std::erase(labels, std::string(Summand::kCharacterBase));
  std::sort(labels.begin(), labels.end());
  return AtomKey{std::move(labels), std::move(twist)};
}

AtomKey AtomKey::of(const std::vector<Summand>& factors) {
  std::vector<std::string> labels;
  CharE twist;
  for (const auto& s : factors) {
    if (!s.is_character()) labels.push_back(s.label());
    twist *= s.twist();
  }
  return from_parts(std::move(labels), std::move(twist));
}

std::string AtomKey::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += "*";
    out += labels[i];
  }
  return out + "|" + twist.to_string();
}

TensorFactor TensorFactor::of(const LParameter& phi) {
  TensorFactor f;
  for (const auto& b : phi.blocks()) f.terms.emplace_back(b.summand, b.multiplicity);
  return f;
}

TensorFactor TensorFactor::of(const Summand& s, int multiplicity) {
  TensorFactor f;
  f.terms.emplace_back(s, multiplicity);
  return f;
}

TensorFactor TensorFactor::of(const CharE& mu) { return of(Summand::character(mu)); }

std::map<AtomKey, long long> TensorExpr::expand() const {
  std::map<AtomKey, long long> out;
  if (factors.empty()) return out;
  std::vector<Summand> current;
  // Depth-first over one term per factor.
  auto walk = [&](auto&& self, std::size_t depth, long long mult) -> void {
    if (depth == factors.size()) {
      out[AtomKey::of(current)] += mult;
      return;
    }
    for (const auto& [s, m] : factors[depth].terms) {
      current.push_back(s);
      self(self, depth + 1, mult * m);
      current.pop_back();
    }
  };
  walk(walk, 0, 1);
  return out;
}

std::string backend_name(const EpsBackend& backend) {
  if (std::holds_alternative<ConstantOneBackend>(backend)) return "one";
  if (std::holds_alternative<TableBackend>(backend)) return "table";
  return "hashed";
}

namespace {

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

Sign hashed_sign(std::uint64_t seed, std::string_view key) {
  return (splitmix64(seed ^ fnv1a(key)) >> 63) ? Sign::minus() : Sign::plus();
}

Sign EpsilonOracle::atom(const AtomKey& key, PsiTag psi) const {
  Sign value;
  if (const auto* table = std::get_if<TableBackend>(&backend_)) {
    auto it = table->entries.find({key, psi});
    if (it == table->entries.end()) {
      throw Error(ErrorKind::MissingTableEntry,
                  "no epsilon value for (" + key.to_string() + "; " + std::string(to_string(psi)) + ")");
    }
    value = it->second;
  } else if (const auto* hashed = std::get_if<HashedBackend>(&backend_)) {
    value = hashed_sign(hashed->seed, key.to_string() + ";" + std::string(to_string(psi)));
  }
  audit_.push_back({key.to_string(), psi, value});
  return value;
}

Sign EpsilonOracle::eps_half(const TensorExpr& expr, PsiTag psi) const {
  Sign out = Sign::plus();
  for (const auto& [key, mult] : expr.expand()) {
    if (mult % 2 != 0) out *= atom(key, psi);
  }
  return out;
}

}  // namespace ggp
