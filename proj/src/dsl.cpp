#include "ggp/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace ggp::dsl {

namespace {

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string syntax_message(const SourcePos& pos, const std::string& found, const std::vector<std::string>& expected) {
  return "syntax error at " + pos.to_string() + ": found " + found + ", expected " + join(expected, " or ");
}

}  // namespace

SyntaxError::SyntaxError(SourcePos pos, std::string found, std::vector<std::string> expected)
    : std::runtime_error(syntax_message(pos, found, expected)),
      pos_(pos),
      found_(std::move(found)),
      expected_(std::move(expected)) {}

SemanticError::SemanticError(SourcePos pos, const std::string& message, std::optional<ErrorKind> cause)
    : std::runtime_error("semantic error at " + pos.to_string() + ": " + message), pos_(pos), cause_(cause) {}

const LParameter& Model::param(const std::string& name) const {
  const auto it = params.find(name);
  if (it == params.end()) throw Error(ErrorKind::InvalidSummand, "unknown parameter " + name);
  return it->second;
}

namespace {

// ---------------------------------------------------------------- lexer

enum class Tok { Ident, Int, Punct, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  SourcePos pos;

  std::string describe() const {
    switch (kind) {
      case Tok::Ident: return "'" + text + "'";
      case Tok::Int: return "integer " + text;
      case Tok::Punct: return "'" + text + "'";
      case Tok::End: return "end of input";
    }
    return text;
  }
};

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  SourcePos pos;
  std::size_t i = 0;
  auto advance = [&](std::size_t count) {
    for (std::size_t k = 0; k < count && i < text.size(); ++k, ++i) {
      if (text[i] == '\n') {
        ++pos.line;
        pos.column = 1;
      } else {
        ++pos.column;
      }
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    Token tok;
    tok.pos = pos;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      tok.kind = Tok::Ident;
      tok.text = std::string(text.substr(i, j - i));
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j - i > 9) throw SyntaxError(pos, "integer " + std::string(text.substr(i, j - i)), {"integer below 10^9"});
      tok.kind = Tok::Int;
      tok.text = std::string(text.substr(i, j - i));
      advance(j - i);
    } else if (text.substr(i, 3) == "|.|") {
      tok.kind = Tok::Punct;
      tok.text = "|.|";
      advance(3);
    } else if (std::string_view("{}()[],;=*^/~+-").find(c) != std::string_view::npos) {
      tok.kind = Tok::Punct;
      tok.text = std::string(1, c);
      advance(1);
    } else {
      std::string shown = std::isprint(static_cast<unsigned char>(c)) ? std::string("'") + c + "'" : "byte " + std::to_string(static_cast<unsigned char>(c));
      throw SyntaxError(pos, shown, {"a token"});
    }
    out.push_back(std::move(tok));
  }
  Token end;
  end.kind = Tok::End;
  end.pos = pos;
  out.push_back(end);
  return out;
}

// ---------------------------------------------------------------- parser

const std::set<std::string>& reserved_words() {
  static const std::set<std::string> words = {"base",  "character", "atom",    "param",    "on",      "setting",
                                              "epsilon", "task",    "char",    "pair",     "dim",     "sign",
                                              "none",  "tempered",  "sl2triv", "twist",    "mult",    "trivial",
                                              "omega", "U"};
  return words;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(lex(text)) {}

  Document run() {
    Document doc;
    while (peek().kind != Tok::End) item(doc);
    return doc;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    throw SyntaxError(peek().pos, peek().describe(), std::move(expected));
  }

  bool at_word(std::string_view w) const { return peek().kind == Tok::Ident && peek().text == w; }
  bool at_punct(std::string_view p) const { return peek().kind == Tok::Punct && peek().text == p; }

  const Token& word(std::string_view w) {
    if (!at_word(w)) fail({"'" + std::string(w) + "'"});
    return take();
  }
  const Token& punct(std::string_view p) {
    if (!at_punct(p)) fail({"'" + std::string(p) + "'"});
    return take();
  }
  const Token& ident(const std::string& what) {
    if (peek().kind != Tok::Ident || reserved_words().count(peek().text)) fail({what});
    return take();
  }
  int integer(const std::string& what) {
    if (peek().kind != Tok::Int) fail({what});
    return std::stoi(take().text);
  }
  int signed_integer(const std::string& what) {
    const bool negative = at_punct("-");
    if (negative) take();
    const int v = integer(what);
    return negative ? -v : v;
  }

  // '+' | '-', optionally followed by 1.
  Sign sign_value() {
    Sign s;
    if (at_punct("+")) {
      s = Sign::plus();
    } else if (at_punct("-")) {
      s = Sign::minus();
    } else {
      fail({"'+'", "'-'"});
    }
    take();
    if (peek().kind == Tok::Int) {
      if (peek().text != "1") fail({"'1'"});
      take();
    }
    return s;
  }

  void item(Document& doc) {
    if (at_word("base")) return base(doc);
    if (at_word("character")) return character(doc);
    if (at_word("atom")) return atom(doc);
    if (at_word("param")) return param(doc);
    if (at_word("setting")) return setting(doc);
    if (at_word("epsilon")) return epsilon(doc);
    if (at_word("task")) return task(doc);
    fail({"'base'", "'character'", "'atom'", "'param'", "'setting'", "'epsilon'", "'task'"});
  }

  void base(Document& doc) {
    const SourcePos at = take().pos;
    punct("{");
    word("omega_minus_one");
    punct("=");
    const Sign s = sign_value();
    punct(";");
    punct("}");
    if (doc.omega_minus_one) throw SemanticError(at, "base field block given twice");
    doc.omega_minus_one = s;
  }

  void character(Document& doc) {
    take();
    const Token& name = ident("character name");
    Grade g;
    if (at_word("trivial")) {
      g = Grade::Trivial;
    } else if (at_word("omega")) {
      g = Grade::Omega;
    } else {
      fail({"'trivial'", "'omega'"});
    }
    take();
    punct(";");
    if (grades_.count(name.text)) throw SemanticError(name.pos, "character " + name.text + " declared twice");
    grades_[name.text] = g;
    doc.characters.push_back({name.text, g});
  }

  AtomSpec atom_spec() {
    AtomSpec spec;
    word("dim");
    spec.dim = integer("dimension");
    word("sign");
    if (at_punct("+")) {
      spec.duality = Duality::Plus;
    } else if (at_punct("-")) {
      spec.duality = Duality::Minus;
    } else if (at_word("none")) {
      spec.duality = Duality::None;
    } else {
      fail({"'+'", "'-'", "'none'"});
    }
    take();
    if (at_word("tempered")) {
      take();
      spec.tempered = true;
    }
    if (at_word("sl2triv")) {
      take();
      spec.sl2_trivial = true;
    }
    return spec;
  }

  void atom(Document& doc) {
    take();
    const Token& label = ident("atom label");
    const AtomSpec spec = atom_spec();
    punct(";");
    for (const auto& a : doc.atoms) {
      if (a.label == label.text) throw SemanticError(label.pos, "atom " + label.text + " declared twice");
    }
    doc.atoms.push_back({label.text, spec});
  }

  // factor: NAME ['^' int] | '|.|' '^' half | '1'
  CharE char_factor() {
    if (peek().kind == Tok::Int) {
      if (peek().text != "1") fail({"'1'", "character name", "'|.|'"});
      take();
      return CharE();
    }
    if (at_punct("|.|")) {
      take();
      punct("^");
      const bool negative = at_punct("-");
      if (negative) take();
      int halves = 2 * integer("exponent");
      if (at_punct("/")) {
        take();
        if (peek().kind != Tok::Int || peek().text != "2") fail({"'2'"});
        take();
        halves /= 2;
      }
      return CharE::abs_power(negative ? -halves : halves);
    }
    if (peek().kind != Tok::Ident || reserved_words().count(peek().text)) fail({"character name", "'|.|'", "'1'"});
    const Token& name = take();
    const auto it = grades_.find(name.text);
    if (it == grades_.end()) throw SemanticError(name.pos, "undeclared character " + name.text);
    int exponent = 1;
    if (at_punct("^")) {
      take();
      exponent = signed_integer("exponent");
    }
    return CharE::generator(name.text, it->second, exponent);
  }

  CharE char_expr() {
    const SourcePos at = peek().pos;
    try {
      CharE out = char_factor();
      while (at_punct("*")) {
        take();
        out *= char_factor();
      }
      return out;
    } catch (const Error& e) {
      throw SemanticError(at, e.what(), e.kind());
    }
  }

  int multiplicity() {
    if (!at_word("mult")) return 1;
    take();
    const SourcePos at = peek().pos;
    const int m = integer("multiplicity");
    if (m < 1) throw SemanticError(at, "multiplicity must be positive");
    return m;
  }

  EntryDecl entry() {
    EntryDecl e;
    e.pos = peek().pos;
    if (at_word("pair")) {
      take();
      e.dual_pair = true;
    }
    if (at_word("char")) {
      take();
      e.kind = EntryDecl::Kind::Character;
      e.twist = char_expr();
    } else {
      e.kind = EntryDecl::Kind::Atom;
      e.label = ident(e.dual_pair ? "'char' or atom label" : "'char', 'pair' or atom label").text;
      if (at_word("dim")) e.inline_spec = atom_spec();
      if (at_word("twist")) {
        take();
        e.twist = char_expr();
      }
    }
    const bool had_mult = at_word("mult");
    e.multiplicity = multiplicity();
    if (!at_punct(";")) {
      // Name every optional part that could still follow.
      std::vector<std::string> expected;
      if (e.kind == EntryDecl::Kind::Atom && !had_mult && e.twist.is_trivial()) {
        if (!e.inline_spec) expected.push_back("'dim'");
        if (e.inline_spec && !e.inline_spec->sl2_trivial) {
          if (!e.inline_spec->tempered) expected.push_back("'tempered'");
          expected.push_back("'sl2triv'");
        }
        expected.push_back("'twist'");
      }
      if (!had_mult) expected.push_back("'mult'");
      expected.push_back("';'");
      fail(expected);
    }
    take();
    return e;
  }

  void set_flag(std::optional<bool>& slot, bool value, const SourcePos& at) {
    if (slot && *slot != value) throw SemanticError(at, "contradictory parameter flags", ErrorKind::FlagContradiction);
    slot = value;
  }

  void param(Document& doc) {
    ParamDecl p;
    p.pos = take().pos;
    const Token& name = ident("parameter name");
    p.name = name.text;
    word("on");
    word("U");
    punct("(");
    if (at_word("V")) {
      p.form = FormKind::Hermitian;
    } else if (at_word("W")) {
      p.form = FormKind::SkewHermitian;
    } else {
      fail({"'V'", "'W'"});
    }
    take();
    punct(",");
    const SourcePos rank_at = peek().pos;
    p.rank = integer("rank");
    if (p.rank < 1) throw SemanticError(rank_at, "rank must be positive");
    punct(",");
    p.sign = sign_value();
    punct(")");
    if (at_punct("[")) {
      take();
      while (true) {
        const Token& f = peek();
        if (f.kind != Tok::Ident) fail({"parameter flag"});
        if (f.text == "tempered") {
          set_flag(p.flags.tempered, true, f.pos);
        } else if (f.text == "nontempered") {
          set_flag(p.flags.tempered, false, f.pos);
        } else if (f.text == "discrete") {
          set_flag(p.flags.discrete, true, f.pos);
        } else if (f.text == "nondiscrete") {
          set_flag(p.flags.discrete, false, f.pos);
        } else if (f.text == "supercuspidal") {
          p.flags.supercuspidal = true;
        } else if (f.text == "generic") {
          p.flags.generic = true;
        } else {
          fail({"'tempered'", "'nontempered'", "'discrete'", "'nondiscrete'", "'supercuspidal'", "'generic'"});
        }
        take();
        if (at_punct(",")) {
          take();
          continue;
        }
        punct("]");
        break;
      }
    }
    punct("{");
    while (!at_punct("}")) {
      if (peek().kind == Tok::End) fail({"'}'", "parameter entry"});
      p.entries.push_back(entry());
    }
    take();
    for (const auto& q : doc.params) {
      if (q.name == p.name) throw SemanticError(name.pos, "parameter " + p.name + " declared twice");
    }
    doc.params.push_back(std::move(p));
  }

  void setting(Document& doc) {
    const SourcePos at = take().pos;
    if (doc.setting) throw SemanticError(at, "setting block given twice");
    SettingDecl s;
    punct("{");
    while (!at_punct("}")) {
      std::optional<CharE>* slot = nullptr;
      if (at_word("chi")) {
        slot = &s.chi;
      } else if (at_word("chi_v")) {
        slot = &s.chi_v;
      } else if (at_word("chi_w")) {
        slot = &s.chi_w;
      } else {
        fail({"'chi'", "'chi_v'", "'chi_w'", "'}'"});
      }
      const Token& key = take();
      if (slot->has_value()) throw SemanticError(key.pos, key.text + " given twice");
      punct("=");
      *slot = char_expr();
      punct(";");
    }
    take();
    doc.setting = s;
  }

  EpsilonItem epsilon_item() {
    EpsilonItem it;
    if (at_word("char")) {
      take();
      it.is_character = true;
      it.twist = char_expr();
      return it;
    }
    it.label = ident("'char' or atom label").text;
    if (at_punct("~")) {
      take();
      it.dual_mark = true;
    }
    if (at_punct("*")) {
      take();
      it.twist = char_expr();
    }
    return it;
  }

  void epsilon(Document& doc) {
    take();
    punct("{");
    while (!at_punct("}")) {
      EpsilonEntry e;
      e.pos = punct("(").pos;
      e.left = epsilon_item();
      punct(",");
      e.right = epsilon_item();
      punct(";");
      if (peek().kind != Tok::Ident || !parse_psi_tag(peek().text)) fail({"'psiE'", "'psi2E'", "'psiNeg2E'"});
      e.psi = *parse_psi_tag(take().text);
      punct(")");
      punct("=");
      e.value = sign_value();
      punct(";");
      doc.epsilon.push_back(std::move(e));
    }
    take();
  }

  void task(Document& doc) {
    take();
    TaskDecl t;
    t.pos = peek().pos;
    if (at_word("packet")) {
      t.kind = take().text;
      t.args.push_back(ident("parameter name").text);
    } else if (at_word("theta")) {
      t.kind = take().text;
      if (!at_word("up1") && !at_word("up2")) fail({"'up1'", "'up2'"});
      t.args.push_back(take().text);
      t.args.push_back(ident("parameter name").text);
    } else if (at_word("ggp")) {
      t.kind = take().text;
      t.args.push_back(ident("parameter name").text);
      t.args.push_back(ident("parameter name").text);
    } else if (at_word("verify")) {
      t.kind = take().text;
      while (at_word("seeds") || at_word("max_rank") || at_word("backend")) {
        const Token& key = take();
        if (t.options.count(key.text)) throw SemanticError(key.pos, key.text + " given twice");
        if (key.text == "backend") {
          if (peek().kind != Tok::Ident) fail({"backend name"});
          const Token& v = take();
          if (v.text != "one" && v.text != "hashed" && v.text != "table") {
            throw SemanticError(v.pos, "unknown backend " + v.text);
          }
          t.options[key.text] = v.text;
        } else {
          t.options[key.text] = std::to_string(integer(key.text));
        }
      }
    } else {
      fail({"'packet'", "'theta'", "'ggp'", "'verify'"});
    }
    punct(";");
    doc.tasks.push_back(std::move(t));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::map<std::string, Grade> grades_;
};

// ---------------------------------------------------------------- printer

std::string sign_text(Sign s) { return s.is_plus() ? "+" : "-"; }

std::string duality_text(Duality d) {
  switch (d) {
    case Duality::Plus: return "+";
    case Duality::Minus: return "-";
    case Duality::None: return "none";
  }
  return "none";
}

std::string spec_text(const AtomSpec& s) {
  std::string out = "dim " + std::to_string(s.dim) + " sign " + duality_text(s.duality);
  if (s.tempered) out += " tempered";
  if (s.sl2_trivial) out += " sl2triv";
  return out;
}

std::string item_text(const EpsilonItem& it) {
  if (it.is_character) return "char " + it.twist.to_string();
  std::string out = it.label;
  if (it.dual_mark) out += "~";
  if (!it.twist.is_trivial()) out += "*" + it.twist.to_string();
  return out;
}

// ---------------------------------------------------------------- resolution

struct Resolver {
  const Document& doc;
  Model model;
  std::map<std::string, AtomSpec> atoms;

  void define_atom(const std::string& label, const AtomSpec& spec, const SourcePos& at) {
    if (model.characters.count(label)) throw SemanticError(at, label + " is already a character name");
    const auto it = atoms.find(label);
    if (it == atoms.end()) {
      atoms[label] = spec;
    } else if (!(it->second == spec)) {
      throw SemanticError(at, "conflicting definitions of atom " + label);
    }
  }

  Summand summand(const EntryDecl& e) {
    if (e.kind == EntryDecl::Kind::Character) return Summand::character(e.twist);
    const auto it = atoms.find(e.label);
    if (it == atoms.end()) throw SemanticError(e.pos, "unknown atom " + e.label);
    const AtomSpec& s = it->second;
    return twist(Summand::atom(e.label, s.dim, s.duality, s.tempered, s.sl2_trivial), e.twist);
  }

  LParameter param(const ParamDecl& p) {
    std::vector<Block> blocks;
    std::vector<DualPairBlock> pairs;
    std::set<std::pair<bool, Summand>> seen;
    for (const auto& e : p.entries) {
      try {
        if (e.inline_spec) define_atom(e.label, *e.inline_spec, e.pos);
        const Summand s = summand(e);
        if (!seen.insert({e.dual_pair, s}).second) {
          throw SemanticError(e.pos, "duplicate summand " + s.to_string() + " in " + p.name + "; use mult");
        }
        if (e.dual_pair) {
          pairs.push_back({s, e.multiplicity});
        } else {
          blocks.push_back({s, e.multiplicity});
        }
      } catch (const Error& err) {
        throw SemanticError(e.pos, err.what(), err.kind());
      }
    }
    const UnitaryGroup group{p.form, p.rank};
    if (group.required_sign() != p.sign) {
      throw SemanticError(p.pos,
                          "declared sign " + p.sign.to_string() + " but " + group.to_string() + " requires " +
                              group.required_sign().to_string(),
                          ErrorKind::WrongDualitySign);
    }
    ParameterFlags flags;
    flags.tempered = p.flags.tempered;
    flags.discrete = p.flags.discrete;
    flags.supercuspidal_packet = p.flags.supercuspidal;
    flags.generic = p.flags.generic;
    try {
      return LParameter::make(std::move(blocks), std::move(pairs), group, flags);
    } catch (const Error& err) {
      throw SemanticError(p.pos, "parameter " + p.name + ": " + err.what(), err.kind());
    }
  }

  void epsilon_labels(const EpsilonItem& it, std::vector<std::string>& labels, CharE& twist, const SourcePos& at) {
    if (!it.is_character) {
      const auto a = atoms.find(it.label);
      if (a == atoms.end()) throw SemanticError(at, "unknown atom " + it.label);
      if (it.dual_mark && a->second.duality != Duality::None) {
        throw SemanticError(at, "atom " + it.label + " is conjugate self-dual; '~' applies to atoms of sign none");
      }
      labels.push_back(it.dual_mark ? it.label + "~" : it.label);
    }
    try {
      twist *= it.twist;
    } catch (const Error& err) {
      throw SemanticError(at, err.what(), err.kind());
    }
  }

  Model run() {
    model.base.omega_at_minus_one = doc.omega_minus_one.value_or(Sign::plus());
    for (const auto& c : doc.characters) model.characters[c.name] = c.grade;
    for (const auto& a : doc.atoms) define_atom(a.label, a.spec, {});
    for (const auto& p : doc.params) model.params.emplace(p.name, param(p));
    if (doc.setting) model.setting = *doc.setting;

    std::set<std::pair<AtomKey, PsiTag>> keys;
    for (const auto& e : doc.epsilon) {
      std::vector<std::string> labels;
      CharE tw;
      epsilon_labels(e.left, labels, tw, e.pos);
      epsilon_labels(e.right, labels, tw, e.pos);
      const AtomKey key = AtomKey::from_parts(labels, tw);
      if (!keys.insert({key, e.psi}).second) {
        throw SemanticError(e.pos, "epsilon entry for " + key.to_string() + " given twice");
      }
      model.table.set(key, e.psi, e.value);
      model.has_table = true;
    }

    for (const auto& t : doc.tasks) {
      const std::size_t first = t.kind == "theta" ? 1 : 0;
      for (std::size_t i = first; i < t.args.size(); ++i) {
        if (!model.params.count(t.args[i])) throw SemanticError(t.pos, "unknown parameter " + t.args[i]);
      }
    }
    model.tasks = doc.tasks;
    return model;
  }
};

}  // namespace

Document parse(std::string_view text) {
  Document doc = Parser(text).run();
  build_model(doc);
  return doc;
}

Model build_model(const Document& doc) { return Resolver{doc, {}, {}}.run(); }

std::string print(const Document& doc) {
  std::ostringstream out;
  bool gap = false;
  auto section = [&] {
    if (gap) out << "\n";
    gap = true;
  };

  if (doc.omega_minus_one) {
    section();
    out << "base { omega_minus_one = " << doc.omega_minus_one->to_string() << "; }\n";
  }
  if (!doc.characters.empty()) {
    section();
    for (const auto& c : doc.characters) {
      out << "character " << c.name << (c.grade == Grade::Omega ? " omega" : " trivial") << ";\n";
    }
  }
  if (!doc.atoms.empty()) {
    section();
    for (const auto& a : doc.atoms) out << "atom " << a.label << " " << spec_text(a.spec) << ";\n";
  }
  for (const auto& p : doc.params) {
    section();
    out << "param " << p.name << " on U(" << (p.form == FormKind::Hermitian ? "V" : "W") << "," << p.rank << ","
        << sign_text(p.sign) << ")";
    std::vector<std::string> flags;
    if (p.flags.tempered) flags.push_back(*p.flags.tempered ? "tempered" : "nontempered");
    if (p.flags.discrete) flags.push_back(*p.flags.discrete ? "discrete" : "nondiscrete");
    if (p.flags.supercuspidal) flags.push_back("supercuspidal");
    if (p.flags.generic) flags.push_back("generic");
    if (!flags.empty()) out << " [" << join(flags, ", ") << "]";
    out << " {\n";
    for (const auto& e : p.entries) {
      out << "  ";
      if (e.dual_pair) out << "pair ";
      if (e.kind == EntryDecl::Kind::Character) {
        out << "char " << e.twist.to_string();
      } else {
        out << e.label;
        if (e.inline_spec) out << " " << spec_text(*e.inline_spec);
        if (!e.twist.is_trivial()) out << " twist " << e.twist.to_string();
      }
      if (e.multiplicity != 1) out << " mult " << e.multiplicity;
      out << ";\n";
    }
    out << "}\n";
  }
  if (doc.setting) {
    section();
    out << "setting {\n";
    if (doc.setting->chi) out << "  chi = " << doc.setting->chi->to_string() << ";\n";
    if (doc.setting->chi_v) out << "  chi_v = " << doc.setting->chi_v->to_string() << ";\n";
    if (doc.setting->chi_w) out << "  chi_w = " << doc.setting->chi_w->to_string() << ";\n";
    out << "}\n";
  }
  if (!doc.epsilon.empty()) {
    section();
    out << "epsilon {\n";
    for (const auto& e : doc.epsilon) {
      out << "  (" << item_text(e.left) << ", " << item_text(e.right) << "; " << to_string(e.psi)
          << ") = " << e.value.to_string() << ";\n";
    }
    out << "}\n";
  }
  if (!doc.tasks.empty()) {
    section();
    for (const auto& t : doc.tasks) {
      out << "task " << t.kind;
      for (const auto& a : t.args) out << " " << a;
      for (const auto& [k, v] : t.options) out << " " << k << " " << v;
      out << ";\n";
    }
  }
  return out.str();
}

}  // namespace ggp::dsl
