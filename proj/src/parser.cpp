#include "typik/parser.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "typik/validate.hpp"

namespace typik {

ParseError::ParseError(Kind kind, SourceSpan span, const std::string& message)
    : Error(span.label + ":" + std::to_string(span.line) + ":" + std::to_string(span.column) +
            ": " + to_string(kind) + ": " + message),
      kind_(kind),
      span_(std::move(span)),
      detail_(message) {}

std::string to_string(ParseError::Kind k) {
  switch (k) {
    case ParseError::Kind::SyntaxError:
      return "syntax error";
    case ParseError::Kind::UnknownName:
      return "unknown name";
    case ParseError::Kind::NestedTypicality:
      return "nested typicality";
    case ParseError::Kind::ComplexQueryConcept:
      return "complex query concept";
    case ParseError::Kind::ExtendedConceptInProduct:
      return "typicality in concept product";
  }
  return "error";
}

namespace {

enum class Tok { Ident, Subsume, Amp, Dot, Comma, LParen, RParen, LBrace, RBrace, Colon, End };

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
};

const std::set<std::string>& keywords() {
  static const std::set<std::string> k = {"class", "role", "individual", "tbox", "rbox", "abox",
                                          "query", "Top",  "Bot",        "T",    "Ex",   "Self",
                                          "o",     "x"};
  return k;
}

bool ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9') || c == '\''; }

std::vector<Token> tokenize(std::string_view text, const std::string& label) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  size_t i = 0;
  auto span = [&](int c0, int c1) { return SourceSpan{label, line, c0, c1}; };
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++col;
      ++i;
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (ident_start(c)) {
      size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      int len = static_cast<int>(j - i);
      out.push_back({Tok::Ident, std::string(text.substr(i, j - i)), span(col, col + len)});
      col += len;
      i = j;
      continue;
    }
    if (c == '[' && i + 1 < text.size() && text[i + 1] == '=') {
      out.push_back({Tok::Subsume, "[=", span(col, col + 2)});
      col += 2;
      i += 2;
      continue;
    }
    Tok k;
    switch (c) {
      case '&': k = Tok::Amp; break;
      case '.': k = Tok::Dot; break;
      case ',': k = Tok::Comma; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case '{': k = Tok::LBrace; break;
      case '}': k = Tok::RBrace; break;
      case ':': k = Tok::Colon; break;
      default:
        throw ParseError(ParseError::Kind::SyntaxError, span(col, col + 1),
                         "unexpected character '" + std::string(1, c) + "'");
    }
    out.push_back({k, std::string(1, c), span(col, col + 1)});
    ++col;
    ++i;
  }
  out.push_back({Tok::End, "", span(col, col)});
  return out;
}

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + t.text + "'";
}

enum class Section { None, TBox, RBox, ABox, Query };

class Parser {
 public:
  Parser(std::vector<Token> tokens, Signature sig)
      : toks_(std::move(tokens)), sig_(std::move(sig)) {}

  Document document() {
    Document doc;
    while (peek().kind != Tok::End) {
      const Token& t = peek();
      if (t.kind == Tok::Ident && (t.text == "class" || t.text == "role" || t.text == "individual")) {
        declaration();
        continue;
      }
      if (t.kind == Tok::Ident && peek(1).kind == Tok::Colon &&
          (t.text == "tbox" || t.text == "rbox" || t.text == "abox" || t.text == "query")) {
        section_ = t.text == "tbox"   ? Section::TBox
                   : t.text == "rbox" ? Section::RBox
                   : t.text == "abox" ? Section::ABox
                                      : Section::Query;
        pos_ += 2;
        continue;
      }
      switch (section_) {
        case Section::None:
          fail(t, "statement outside of a tbox:, rbox:, abox: or query: section");
        case Section::TBox:
          doc.kb.tbox.push_back(inclusion());
          break;
        case Section::RBox:
          doc.kb.rbox.push_back(role_axiom());
          break;
        case Section::ABox:
          doc.kb.abox.push_back(assertion());
          expect(Tok::Dot, "'.'");
          break;
        case Section::Query:
          doc.queries.push_back(query());
          expect(Tok::Dot, "'.'");
          break;
      }
    }
    doc.kb.signature = sig_;
    return doc;
  }

  Query standalone_query() {
    if (peek().kind == Tok::Ident && peek().text == "query" && peek(1).kind == Tok::Colon) pos_ += 2;
    Query q = query();
    if (peek().kind == Tok::Dot) ++pos_;
    if (peek().kind != Tok::End) fail(peek(), "unexpected " + describe(peek()) + " after query");
    return q;
  }

 private:
  const Token& peek(size_t ahead = 0) const {
    size_t i = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[i];
  }

  const Token& next() {
    const Token& t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }

  [[noreturn]] void fail(const Token& t, const std::string& msg,
                         ParseError::Kind kind = ParseError::Kind::SyntaxError) const {
    throw ParseError(kind, t.span, msg);
  }

  const Token& expect(Tok kind, const std::string& what) {
    if (peek().kind != kind) fail(peek(), "expected " + what + ", found " + describe(peek()));
    return next();
  }

  bool is_keyword(const Token& t, const char* kw) const {
    return t.kind == Tok::Ident && t.text == kw;
  }

  const Token& name_token(const std::string& what) {
    const Token& t = expect(Tok::Ident, what);
    if (keywords().count(t.text)) fail(t, "reserved word '" + t.text + "' used as " + what);
    return t;
  }

  void declaration() {
    std::string kind = next().text;
    do {
      const Token& t = name_token(kind + " name");
      bool clash = false;
      if (kind == "class") {
        clash = sig_.contains(RoleName(t.text)) || sig_.contains(IndividualName(t.text));
        if (!clash) sig_.add(ConceptName(t.text));
      } else if (kind == "role") {
        clash = sig_.contains(ConceptName(t.text)) || sig_.contains(IndividualName(t.text));
        if (!clash) sig_.add(RoleName(t.text));
      } else {
        clash = sig_.contains(ConceptName(t.text)) || sig_.contains(RoleName(t.text));
        if (!clash) sig_.add(IndividualName(t.text));
      }
      if (clash) fail(t, "'" + t.text + "' is already declared with a different kind");
    } while (peek().kind == Tok::Comma && (next(), true));
    expect(Tok::Dot, "'.'");
  }

  bool is_role(const Token& t) const { return t.kind == Tok::Ident && sig_.contains(RoleName(t.text)); }

  RoleName role_name() {
    const Token& t = name_token("role name");
    if (!sig_.contains(RoleName(t.text))) {
      fail(t, "'" + t.text + "' is not a declared role", ParseError::Kind::UnknownName);
    }
    return RoleName(t.text);
  }

  IndividualName individual_name() {
    const Token& t = name_token("individual name");
    if (!sig_.contains(IndividualName(t.text))) {
      fail(t, "'" + t.text + "' is not a declared individual", ParseError::Kind::UnknownName);
    }
    return IndividualName(t.text);
  }

  Concept parse_concept() {
    Concept c = unary();
    while (peek().kind == Tok::Amp) {
      next();
      c = Concept::conj(c, unary());
    }
    return c;
  }

  Concept unary() {
    const Token& t = peek();
    if (t.kind == Tok::LParen) {
      next();
      Concept c = parse_concept();
      expect(Tok::RParen, "')'");
      return c;
    }
    if (t.kind == Tok::LBrace) {
      next();
      IndividualName a = individual_name();
      expect(Tok::RBrace, "'}'");
      return Concept::nominal(a);
    }
    if (t.kind != Tok::Ident) fail(t, "expected a concept, found " + describe(t));
    if (t.text == "Top") {
      next();
      return Concept::top();
    }
    if (t.text == "Bot") {
      next();
      return Concept::bot();
    }
    if (t.text == "T") {
      next();
      if (typ_depth_ > 0) {
        fail(t, "typicality operator nested inside another one",
             ParseError::Kind::NestedTypicality);
      }
      expect(Tok::LParen, "'(' after T");
      ++typ_depth_;
      Concept arg = parse_concept();
      --typ_depth_;
      expect(Tok::RParen, "')'");
      return Concept::typ(arg);
    }
    if (t.text == "Ex") {
      next();
      RoleName r = role_name();
      expect(Tok::Dot, "'.' after role in existential");
      if (is_keyword(peek(), "Self")) {
        next();
        return Concept::self(r);
      }
      return Concept::exists(r, unary());
    }
    if (keywords().count(t.text)) fail(t, "unexpected reserved word '" + t.text + "'");
    next();
    if (!sig_.contains(ConceptName(t.text))) {
      fail(t, "'" + t.text + "' is not a declared class", ParseError::Kind::UnknownName);
    }
    return Concept::atom(ConceptName(t.text));
  }

  ConceptInclusion inclusion() {
    Concept lhs = parse_concept();
    expect(Tok::Subsume, "'[='");
    Concept rhs = parse_concept();
    expect(Tok::Dot, "'.'");
    return {lhs, rhs};
  }

  Concept product_operand() {
    const Token& t = peek();
    Concept c = unary();
    if (c.is_extended()) {
      fail(t, "concept products take concepts without typicality",
           ParseError::Kind::ExtendedConceptInProduct);
    }
    return c;
  }

  RoleAxiom role_axiom() {
    RoleAxiom out;
    if (is_role(peek())) {
      RoleName r = role_name();
      if (peek().kind == Tok::Subsume) {
        next();
        if (is_role(peek())) {
          out = RoleInclusion{r, role_name()};
        } else {
          Concept a = product_operand();
          expect_keyword("x");
          Concept b = product_operand();
          out = ConceptProductRhs{r, a, b};
        }
      } else if (is_keyword(peek(), "o")) {
        next();
        RoleName s = role_name();
        expect(Tok::Subsume, "'[='");
        out = RoleChain{r, s, role_name()};
      } else if (peek().kind == Tok::Amp) {
        next();
        RoleName s = role_name();
        expect(Tok::Subsume, "'[='");
        out = RoleConj{r, s, role_name()};
      } else {
        fail(peek(), "expected '[=', 'o' or '&' after role, found " + describe(peek()));
      }
    } else {
      Concept a = product_operand();
      expect_keyword("x");
      Concept b = product_operand();
      expect(Tok::Subsume, "'[='");
      out = ConceptProductLhs{a, b, role_name()};
    }
    expect(Tok::Dot, "'.'");
    return out;
  }

  void expect_keyword(const char* kw) {
    if (!is_keyword(peek(), kw)) {
      fail(peek(), std::string("expected '") + kw + "', found " + describe(peek()));
    }
    next();
  }

  Assertion assertion() {
    if (is_role(peek()) && peek(1).kind == Tok::LParen) {
      RoleName r = role_name();
      next();
      IndividualName a = individual_name();
      expect(Tok::Comma, "','");
      IndividualName b = individual_name();
      expect(Tok::RParen, "')'");
      return RoleAssertion{r, a, b};
    }
    Concept c = parse_concept();
    expect(Tok::LParen, "'(' before individual");
    IndividualName a = individual_name();
    expect(Tok::RParen, "')'");
    return ConceptAssertion{c, a};
  }

  Query query() {
    const Token& start = peek();
    Concept c = parse_concept();
    expect(Tok::LParen, "'(' before individual");
    IndividualName a = individual_name();
    expect(Tok::RParen, "')'");
    if (c.is_named()) return Query::inst(a, c.name());
    if (c.kind() == Concept::Kind::Typ && c.argument().is_named()) {
      return Query::typ(a, c.argument().name());
    }
    fail(start, "query concept must be a concept name or T of a concept name",
         ParseError::Kind::ComplexQueryConcept);
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
  Signature sig_;
  Section section_ = Section::None;
  int typ_depth_ = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Document parse_document(std::string_view text, const std::string& label) {
  Parser p(tokenize(text, label), Signature{});
  return p.document();
}

KnowledgeBase parse_kb(std::string_view text, const std::string& label) {
  return parse_document(text, label).kb;
}

Query parse_query(std::string_view text, const KnowledgeBase& kb, const std::string& label) {
  Parser p(tokenize(text, label), kb.signature);
  return p.standalone_query();
}

namespace {

void decl_line(std::string& out, const char* kw, const std::vector<std::string>& names) {
  if (names.empty()) return;
  out += kw;
  out += " ";
  for (size_t i = 0; i < names.size(); ++i) {
    if (i) out += ", ";
    out += names[i];
  }
  out += ".\n";
}

template <class N>
std::vector<std::string> spellings(const std::vector<N>& names) {
  std::vector<std::string> out;
  for (const auto& n : names) out.push_back(n.str());
  return out;
}

}  // namespace

std::string print_kb(const KnowledgeBase& kb) {
  std::string out = "# typik knowledge base\n";
  decl_line(out, "class", spellings(kb.signature.concepts()));
  decl_line(out, "role", spellings(kb.signature.roles()));
  decl_line(out, "individual", spellings(kb.signature.individuals()));
  if (!kb.tbox.empty()) {
    out += "\ntbox:\n";
    for (const auto& a : kb.tbox) out += "  " + to_string(Axiom(a)) + ".\n";
  }
  if (!kb.rbox.empty()) {
    out += "\nrbox:\n";
    for (const auto& a : kb.rbox) out += "  " + to_string(to_axiom(a)) + ".\n";
  }
  if (!kb.abox.empty()) {
    out += "\nabox:\n";
    for (const auto& a : kb.abox) out += "  " + to_string(to_axiom(a)) + ".\n";
  }
  return out;
}

KnowledgeBase read_kb_file(const std::string& path) { return parse_kb(read_file(path), path); }

Document read_document_file(const std::string& path) {
  return parse_document(read_file(path), path);
}

}  // namespace typik
