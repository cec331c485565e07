#include "ggp/component_group.hpp"

#include <algorithm>

#include "ggp/error.hpp"

namespace ggp {

namespace {

void require_rank(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    throw Error(ErrorKind::RankMismatch, std::string(what) + ": rank " + std::to_string(got) +
                                             " where " + std::to_string(want) + " was expected");
  }
}

}  // namespace

bool GroupElement::is_identity() const {
  return std::none_of(coords.begin(), coords.end(), [](bool b) { return b; });
}

std::string GroupElement::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ",";
    out += coords[i] ? "1" : "0";
  }
  return out + ")";
}

SChar SChar::trivial(std::size_t rank) { return SChar{std::vector<Sign>(rank, Sign::plus())}; }

SChar SChar::operator*(const SChar& other) const {
  require_rank(other.rank(), rank(), "character product");
  SChar out = *this;
  for (std::size_t i = 0; i < values.size(); ++i) out.values[i] *= other.values[i];
  return out;
}

std::string SChar::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += values[i].to_string();
  }
  return out + ")";
}

bool operator<(const SChar& a, const SChar& b) {
  return std::lexicographical_compare(a.values.begin(), a.values.end(), b.values.begin(), b.values.end(),
                                      [](Sign x, Sign y) { return x.value() < y.value(); });
}

std::optional<std::size_t> ComponentGroup::index_of(const Summand& s) const {
  auto it = std::find(basis_.begin(), basis_.end(), s);
  if (it == basis_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - basis_.begin());
}

ComponentGroup component_group(const LParameter& phi) {
  std::vector<Summand> basis;
  for (const auto& b : phi.blocks()) basis.push_back(b.summand);
  return ComponentGroup(std::move(basis));
}

GroupElement central_element(const LParameter& phi) {
  GroupElement z;
  for (const auto& b : phi.blocks()) z.coords.push_back(b.multiplicity % 2 != 0);
  return z;
}

std::vector<SChar> enumerate_characters(std::size_t rank) {
  if (rank >= 63) throw Error(ErrorKind::RankMismatch, "component group too large to enumerate");
  std::vector<SChar> out;
  const unsigned long long count = 1ULL << rank;
  out.reserve(count);
  for (unsigned long long k = 0; k < count; ++k) {
    SChar eta = SChar::trivial(rank);
    for (std::size_t i = 0; i < rank; ++i) {
      if ((k >> i) & 1ULL) eta.values[i] = Sign::minus();
    }
    out.push_back(std::move(eta));
  }
  return out;
}

std::vector<SChar> enumerate_characters(const ComponentGroup& group) {
  return enumerate_characters(group.rank());
}

Sign eval(const SChar& eta, const GroupElement& x) {
  require_rank(x.rank(), eta.rank(), "evaluation");
  Sign s = Sign::plus();
  for (std::size_t i = 0; i < x.rank(); ++i) {
    if (x.coords[i]) s *= eta.values[i];
  }
  return s;
}

Sign packet_side(const SChar& eta, const LParameter& phi) { return eval(eta, central_element(phi)); }

Embedding twist_embedding(const LParameter& source, const LParameter& target, const CharE& mu) {
  const ComponentGroup up = component_group(target);
  Embedding e;
  e.target_rank = up.rank();
  for (const auto& b : source.blocks()) {
    const Summand image = twist(b.summand, mu);
    auto idx = up.index_of(image);
    if (!idx) {
      throw Error(ErrorKind::NoEmbedding, image.to_string() + " is not a summand of " + target.to_string());
    }
    e.image.push_back(*idx);
  }
  return e;
}

SChar restrict(const SChar& eta_big, const Embedding& embedding) {
  require_rank(eta_big.rank(), embedding.target_rank, "restriction");
  SChar out;
  for (std::size_t j : embedding.image) out.values.push_back(eta_big.values.at(j));
  return out;
}

SChar nu_twist(const SChar& eta, const LParameter& phi, const BaseFieldData& base) {
  require_rank(eta.rank(), phi.blocks().size(), "nu twist");
  if (phi.dimension() % 2 != 0) return eta;
  SChar out = eta;
  for (std::size_t j = 0; j < phi.blocks().size(); ++j) {
    if (phi.blocks()[j].summand.dim() % 2 != 0) out.values[j] *= base.omega_at_minus_one;
  }
  return out;
}

SChar transport_dual(const SChar& eta, const LParameter& phi) {
  require_rank(eta.rank(), phi.blocks().size(), "dual transport");
  const ComponentGroup target = component_group(contragredient(phi));
  SChar out = SChar::trivial(target.rank());
  for (std::size_t j = 0; j < phi.blocks().size(); ++j) {
    auto idx = target.index_of(dual(phi.blocks()[j].summand));
    if (!idx) throw Error(ErrorKind::EngineInvariant, "contragredient lost a summand");
    out.values[*idx] = eta.values[j];
  }
  return out;
}

std::string CharPair::to_string() const { return "[" + diamond.to_string() + ", " + heart.to_string() + "]"; }

bool operator<(const CharPair& a, const CharPair& b) {
  if (a.diamond < b.diamond) return true;
  if (b.diamond < a.diamond) return false;
  return a.heart < b.heart;
}

}  // namespace ggp
