#include "ggp/parameter.hpp"

#include <algorithm>

#include "ggp/error.hpp"

namespace ggp {

std::string UnitaryGroup::to_string() const {
  return std::string("U(") + (form == FormKind::Hermitian ? "V" : "W") + "," +
         std::to_string(rank) + ")";
}

UnitaryGroup hermitian(int rank) { return {FormKind::Hermitian, rank}; }
UnitaryGroup skew_hermitian(int rank) { return {FormKind::SkewHermitian, rank}; }

namespace {

template <typename B>
void sort_and_merge(std::vector<B>& blocks) {
  std::erase_if(blocks, [](const B& b) { return b.multiplicity == 0; });
  std::sort(blocks.begin(), blocks.end(),
            [](const B& a, const B& b) { return a.summand < b.summand; });
  std::vector<B> merged;
  for (auto& b : blocks) {
    if (!merged.empty() && merged.back().summand == b.summand) {
      merged.back().multiplicity += b.multiplicity;
    } else {
      merged.push_back(std::move(b));
    }
  }
  blocks = std::move(merged);
}

}  // namespace

void LParameter::normalize() {
  for (auto& p : dual_pairs_) {
    Summand partner = p.partner();
    if (partner < p.summand) p.summand = std::move(partner);
  }
  sort_and_merge(blocks_);
  sort_and_merge(dual_pairs_);
}

LParameter LParameter::unchecked(std::vector<Block> blocks, std::vector<DualPairBlock> dual_pairs,
                                 UnitaryGroup group, bool supercuspidal_packet) {
  LParameter phi;
  phi.blocks_ = std::move(blocks);
  phi.dual_pairs_ = std::move(dual_pairs);
  phi.group_ = group;
  phi.supercuspidal_packet_ = supercuspidal_packet;
  phi.normalize();
  return phi;
}

LParameter LParameter::make(std::vector<Block> blocks, std::vector<DualPairBlock> dual_pairs,
                            UnitaryGroup group, ParameterFlags flags) {
  for (const auto& b : blocks) {
    if (b.multiplicity < 1) {
      throw Error(ErrorKind::InvalidSummand, "multiplicity of " + b.summand.to_string() + " must be >= 1");
    }
  }
  for (const auto& p : dual_pairs) {
    if (p.multiplicity < 1) {
      throw Error(ErrorKind::InvalidSummand, "multiplicity of " + p.summand.to_string() + " must be >= 1");
    }
  }
  if (blocks.empty() && dual_pairs.empty()) {
    throw Error(ErrorKind::EmptyParameter, "a parameter needs at least one block");
  }
  // A pair x + c(x)^v with x of the same type and c(x)^v = x is just 2x.
  const Duality same_type = duality_of(group.required_sign());
  std::vector<DualPairBlock> pairs;
  for (auto& p : dual_pairs) {
    if (p.summand.duality() == same_type && p.partner() == p.summand) {
      blocks.push_back({p.summand, 2 * p.multiplicity});
    } else {
      pairs.push_back(std::move(p));
    }
  }
  LParameter phi = unchecked(std::move(blocks), std::move(pairs), group, flags.supercuspidal_packet);
  phi.generic_ = flags.generic;
  phi.validate();
  if (flags.tempered && *flags.tempered != phi.tempered()) {
    throw Error(ErrorKind::FlagContradiction,
                std::string("declared ") + (*flags.tempered ? "tempered" : "non-tempered") +
                    " but the summands say otherwise");
  }
  if (flags.discrete && *flags.discrete != phi.discrete()) {
    throw Error(ErrorKind::FlagContradiction,
                std::string("declared ") + (*flags.discrete ? "discrete" : "non-discrete") +
                    " but the block structure says otherwise");
  }
  return phi;
}

LParameter mk_parameter(std::vector<Block> blocks, std::vector<DualPairBlock> dual_pairs,
                        UnitaryGroup group, ParameterFlags flags) {
  return LParameter::make(std::move(blocks), std::move(dual_pairs), group, flags);
}

void LParameter::validate() const {
  if (group_.rank < 1) throw Error(ErrorKind::EmptyParameter, "rank-0 parameters are not supported");
  if (dimension() != group_.rank) {
    throw Error(ErrorKind::DimensionMismatch, "summands have total dimension " +
                                                  std::to_string(dimension()) + " but the group is " +
                                                  group_.to_string());
  }
  const Duality same_type = duality_of(group_.required_sign());
  for (const auto& b : blocks_) {
    if (b.multiplicity < 1) {
      throw Error(ErrorKind::InvalidSummand, "non-positive multiplicity for " + b.summand.to_string());
    }
    if (b.summand.duality() != same_type) {
      throw Error(ErrorKind::WrongDualitySign,
                  b.summand.to_string() + " has duality " + std::string(ggp::to_string(b.summand.duality())) +
                      " but " + group_.to_string() + " requires " + group_.required_sign().to_string());
    }
  }
  for (const auto& p : dual_pairs_) {
    if (p.summand.duality() == same_type) {
      throw Error(ErrorKind::WrongDualitySign,
                  p.summand.to_string() + " is of the same type as the parameter and cannot sit in a dual pair");
    }
  }
  if (supercuspidal_packet_ && !conjecturally_supercuspidal()) {
    throw Error(ErrorKind::FlagContradiction,
                "a supercuspidal packet needs a discrete parameter with trivial SL2 restriction");
  }
}

bool LParameter::is_valid() const noexcept {
  try {
    validate();
    return true;
  } catch (const Error&) {
    return false;
  }
}

int LParameter::dimension() const {
  int d = 0;
  for (const auto& b : blocks_) d += b.multiplicity * b.summand.dim();
  for (const auto& p : dual_pairs_) d += 2 * p.multiplicity * p.summand.dim();
  return d;
}

bool LParameter::tempered() const {
  return std::all_of(blocks_.begin(), blocks_.end(), [](const Block& b) { return b.summand.tempered(); }) &&
         std::all_of(dual_pairs_.begin(), dual_pairs_.end(),
                     [](const DualPairBlock& p) { return p.summand.tempered(); });
}

bool LParameter::discrete() const {
  return dual_pairs_.empty() &&
         std::all_of(blocks_.begin(), blocks_.end(), [](const Block& b) { return b.multiplicity == 1; });
}

bool LParameter::sl2_trivial() const {
  return std::all_of(blocks_.begin(), blocks_.end(), [](const Block& b) { return b.summand.sl2_trivial(); }) &&
         std::all_of(dual_pairs_.begin(), dual_pairs_.end(),
                     [](const DualPairBlock& p) { return p.summand.sl2_trivial(); });
}

LParameter LParameter::with_group(UnitaryGroup group) const {
  LParameter out = *this;
  out.group_ = group;
  return out;
}

LParameter LParameter::with_supercuspidal_packet(bool value) const {
  LParameter out = *this;
  out.supercuspidal_packet_ = value;
  return out;
}

std::string LParameter::to_string() const {
  std::string out;
  for (const auto& b : blocks_) {
    if (!out.empty()) out += " + ";
    if (b.multiplicity != 1) out += std::to_string(b.multiplicity);
    out += b.summand.to_string();
  }
  for (const auto& p : dual_pairs_) {
    if (!out.empty()) out += " + ";
    if (p.multiplicity != 1) out += std::to_string(p.multiplicity);
    out += "(" + p.summand.to_string() + " + " + p.partner().to_string() + ")";
  }
  return out + " on " + group_.to_string();
}

int multiplicity_of(const LParameter& phi, const Summand& s) {
  for (const auto& b : phi.blocks()) {
    if (b.summand == s) return b.multiplicity;
  }
  return 0;
}

LParameter remove_once(const LParameter& phi, const Summand& s) {
  if (multiplicity_of(phi, s) < 1) {
    throw Error(ErrorKind::NotContained, s.to_string() + " is not a summand of " + phi.to_string());
  }
  std::vector<Block> blocks = phi.blocks();
  for (auto& b : blocks) {
    if (b.summand == s) --b.multiplicity;
  }
  UnitaryGroup group = phi.group();
  group.rank -= s.dim();
  if (group.rank < 1) throw Error(ErrorKind::EmptyParameter, "removing " + s.to_string() + " leaves nothing");
  return LParameter::unchecked(std::move(blocks), phi.dual_pairs(), group, phi.supercuspidal_packet());
}

LParameter add_summand(const LParameter& phi, const Summand& s, int multiplicity) {
  std::vector<Block> blocks = phi.blocks();
  blocks.push_back({s, multiplicity});
  UnitaryGroup group = phi.group();
  group.rank += multiplicity * s.dim();
  return LParameter::unchecked(std::move(blocks), phi.dual_pairs(), group, false);
}

LParameter tensor_twist(const LParameter& phi, const CharE& mu) {
  std::vector<Block> blocks;
  for (const auto& b : phi.blocks()) blocks.push_back({twist(b.summand, mu), b.multiplicity});
  std::vector<DualPairBlock> pairs;
  for (const auto& p : phi.dual_pairs()) pairs.push_back({twist(p.summand, mu), p.multiplicity});
  return LParameter::unchecked(std::move(blocks), std::move(pairs), phi.group(), phi.supercuspidal_packet());
}

LParameter contragredient(const LParameter& phi) {
  std::vector<Block> blocks;
  for (const auto& b : phi.blocks()) blocks.push_back({dual(b.summand), b.multiplicity});
  std::vector<DualPairBlock> pairs;
  for (const auto& p : phi.dual_pairs()) pairs.push_back({dual(p.summand), p.multiplicity});
  return LParameter::unchecked(std::move(blocks), std::move(pairs), phi.group(), phi.supercuspidal_packet());
}

}  // namespace ggp
