#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ggp/character.hpp"
#include "ggp/epsilon.hpp"
#include "ggp/error.hpp"
#include "ggp/parameter.hpp"
#include "ggp/summand.hpp"

namespace ggp::dsl {

struct SourcePos {
  int line = 1;
  int column = 1;

  std::string to_string() const { return std::to_string(line) + ":" + std::to_string(column); }
  friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

/// Malformed input: unexpected token or character.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(SourcePos pos, std::string found, std::vector<std::string> expected);

  const SourcePos& pos() const { return pos_; }
  const std::string& found() const { return found_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  SourcePos pos_;
  std::string found_;
  std::vector<std::string> expected_;
};

/// Well-formed input that does not describe valid objects. `cause` is set
/// when the engine rejected the object.
class SemanticError : public std::runtime_error {
 public:
  SemanticError(SourcePos pos, const std::string& message, std::optional<ErrorKind> cause = std::nullopt);

  const SourcePos& pos() const { return pos_; }
  const std::optional<ErrorKind>& cause() const { return cause_; }

 private:
  SourcePos pos_;
  std::optional<ErrorKind> cause_;
};

struct CharacterDecl {
  std::string name;
  Grade grade = Grade::Trivial;

  friend bool operator==(const CharacterDecl&, const CharacterDecl&) = default;
};

/// Intrinsic data of an atom, given either in an `atom` declaration or inline.
struct AtomSpec {
  int dim = 1;
  Duality duality = Duality::Plus;
  bool tempered = false;
  bool sl2_trivial = false;

  friend bool operator==(const AtomSpec&, const AtomSpec&) = default;
};

struct AtomDecl {
  std::string label;
  AtomSpec spec;

  friend bool operator==(const AtomDecl&, const AtomDecl&) = default;
};

/// One line of a parameter body.
struct EntryDecl {
  enum class Kind { Atom, Character };

  bool dual_pair = false;
  Kind kind = Kind::Atom;
  std::string label;               // Atom
  std::optional<AtomSpec> inline_spec;  // Atom defined on the spot
  CharE twist;                     // Atom twist, or the character itself
  int multiplicity = 1;
  SourcePos pos;

  friend bool operator==(const EntryDecl& a, const EntryDecl& b) {
    return a.dual_pair == b.dual_pair && a.kind == b.kind && a.label == b.label && a.inline_spec == b.inline_spec &&
           a.twist == b.twist && a.multiplicity == b.multiplicity;
  }
};

struct ParamFlagsDecl {
  std::optional<bool> tempered;
  std::optional<bool> discrete;
  bool supercuspidal = false;
  bool generic = false;

  friend bool operator==(const ParamFlagsDecl&, const ParamFlagsDecl&) = default;
};

struct ParamDecl {
  std::string name;
  FormKind form = FormKind::Hermitian;
  int rank = 1;
  Sign sign;
  ParamFlagsDecl flags;
  std::vector<EntryDecl> entries;
  SourcePos pos;

  friend bool operator==(const ParamDecl& a, const ParamDecl& b) {
    return a.name == b.name && a.form == b.form && a.rank == b.rank && a.sign == b.sign && a.flags == b.flags &&
           a.entries == b.entries;
  }
};

struct EpsilonItem {
  bool is_character = false;
  std::string label;  // without the dual mark
  bool dual_mark = false;
  CharE twist;

  friend bool operator==(const EpsilonItem&, const EpsilonItem&) = default;
};

struct EpsilonEntry {
  EpsilonItem left;
  EpsilonItem right;
  PsiTag psi = PsiTag::psiE;
  Sign value;
  SourcePos pos;

  friend bool operator==(const EpsilonEntry& a, const EpsilonEntry& b) {
    return a.left == b.left && a.right == b.right && a.psi == b.psi && a.value == b.value;
  }
};

struct SettingDecl {
  std::optional<CharE> chi;
  std::optional<CharE> chi_v;
  std::optional<CharE> chi_w;

  friend bool operator==(const SettingDecl&, const SettingDecl&) = default;
};

struct TaskDecl {
  /// "packet", "theta", "ggp" or "verify".
  std::string kind;
  /// Parameter names; for theta the first argument is "up1" or "up2".
  std::vector<std::string> args;
  std::map<std::string, std::string> options;
  SourcePos pos;

  friend bool operator==(const TaskDecl& a, const TaskDecl& b) {
    return a.kind == b.kind && a.args == b.args && a.options == b.options;
  }
};

struct Document {
  std::optional<Sign> omega_minus_one;
  std::vector<CharacterDecl> characters;
  std::vector<AtomDecl> atoms;
  std::vector<ParamDecl> params;
  std::optional<SettingDecl> setting;
  std::vector<EpsilonEntry> epsilon;
  std::vector<TaskDecl> tasks;

  friend bool operator==(const Document&, const Document&) = default;
};

/// Parses and checks a document. Throws SyntaxError or SemanticError.
Document parse(std::string_view text);

/// Canonical text of a document.
std::string print(const Document& doc);

/// Engine objects described by a document.
struct Model {
  BaseFieldData base;
  std::map<std::string, Grade> characters;
  std::map<std::string, LParameter> params;
  SettingDecl setting;
  TableBackend table;
  bool has_table = false;
  std::vector<TaskDecl> tasks;

  const LParameter& param(const std::string& name) const;
};

/// Resolves a parsed document. Throws SemanticError.
Model build_model(const Document& doc);

}  // namespace ggp::dsl
