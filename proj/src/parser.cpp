#include "mitl/parser.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace mitl {
namespace {

enum class Tok {
  Ident, Number, LParen, RParen, LBracket, RBracket, Comma,
  Not, And, Or, Implies, Eventually, Always, True, False, Cmp, End
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      if (pos_ >= src_.size()) {
        out.push_back({Tok::End, "", line_, col_});
        return out;
      }
      out.push_back(next());
    }
  }

 private:
  void skip_space() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance(1);
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance(1);
      } else {
        return;
      }
    }
  }

  void advance(std::size_t n) {
    for (std::size_t i = 0; i < n && pos_ < src_.size(); ++i) {
      if (src_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else if ((static_cast<unsigned char>(src_[pos_]) & 0xC0) != 0x80) {
        ++col_;
      }
      ++pos_;
    }
  }

  bool starts(std::string_view s) const { return src_.substr(pos_, s.size()) == s; }

  Token take(Tok kind, std::size_t len) {
    Token t{kind, std::string(src_.substr(pos_, len)), line_, col_};
    advance(len);
    return t;
  }

  Token next() {
    static const std::vector<std::pair<std::string_view, Tok>> symbols = {
        {"&&", Tok::And}, {"||", Tok::Or}, {"->", Tok::Implies}, {"=>", Tok::Implies},
        {"<=", Tok::Cmp}, {">=", Tok::Cmp}, {"<", Tok::Cmp}, {">", Tok::Cmp},
        {"&", Tok::And}, {"|", Tok::Or}, {"!", Tok::Not}, {"~", Tok::Not},
        {"(", Tok::LParen}, {")", Tok::RParen}, {"[", Tok::LBracket}, {"]", Tok::RBracket}, {",", Tok::Comma},
        {"\xC2\xAC", Tok::Not}, {"\xE2\x88\xA7", Tok::And}, {"\xE2\x88\xA8", Tok::Or},
        {"\xE2\x87\x92", Tok::Implies}, {"\xE2\x86\x92", Tok::Implies},
        {"\xE2\x97\x87", Tok::Eventually}, {"\xE2\x96\xA1", Tok::Always},
        {"\xE2\x8A\xA4", Tok::True}, {"\xE2\x8A\xA5", Tok::False},
    };
    char c = src_[pos_];
    bool digit_next = pos_ + 1 < src_.size() && (std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])) || src_[pos_ + 1] == '.');
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.' || (c == '-' && digit_next)) return number();
    for (const auto& [sym, kind] : symbols) {
      if (starts(sym)) return take(kind, sym.size());
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t len = 0;
      while (pos_ + len < src_.size()) {
        char d = src_[pos_ + len];
        if (!std::isalnum(static_cast<unsigned char>(d)) && d != '_') break;
        ++len;
      }
      Token t = take(Tok::Ident, len);
      if (t.text == "true") t.kind = Tok::True;
      if (t.text == "false") t.kind = Tok::False;
      return t;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
  }

  Token number() {
    std::size_t len = (src_[pos_] == '-') ? 1 : 0;
    auto digits = [&] {
      while (pos_ + len < src_.size() &&
             (std::isdigit(static_cast<unsigned char>(src_[pos_ + len])) || src_[pos_ + len] == '.'))
        ++len;
    };
    digits();
    if (pos_ + len + 1 < src_.size() && src_[pos_ + len] == '/' &&
        std::isdigit(static_cast<unsigned char>(src_[pos_ + len + 1]))) {
      ++len;
      digits();
    }
    return take(Tok::Number, len);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Formula parse() {
    Formula f = implication();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    return f;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& peek2() const { return toks_[std::min(pos_ + 1, toks_.size() - 1)]; }
  Token advance() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(peek(), msg); }
  [[noreturn]] static void fail_at(const Token& t, const std::string& msg) { throw ParseError(msg, t.line, t.column); }

  Token expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(std::string("expected ") + what);
    return advance();
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (peek().kind == Tok::Implies) {
      advance();
      return Formula::implication(lhs, implication());
    }
    return lhs;
  }

  Formula disjunction() {
    Formula acc = conjunction();
    while (peek().kind == Tok::Or) {
      advance();
      acc = Formula::disjunction(acc, conjunction());
    }
    return acc;
  }

  Formula conjunction() {
    Formula acc = unary();
    while (peek().kind == Tok::And) {
      advance();
      acc = Formula::conjunction(acc, unary());
    }
    return acc;
  }

  bool temporal_keyword() const {
    const Token& t = peek();
    if (t.kind == Tok::Eventually || t.kind == Tok::Always) return true;
    return t.kind == Tok::Ident && (t.text == "F" || t.text == "G") &&
           (peek2().kind == Tok::LBracket || peek2().kind == Tok::LParen);
  }

  Formula unary() {
    if (peek().kind == Tok::Not) {
      advance();
      return Formula::negation(unary());
    }
    if (temporal_keyword()) {
      Token op = advance();
      bool always = op.kind == Tok::Always || op.text == "G";
      Interval i = interval();
      Formula body = unary();
      return always ? Formula::always(i, body) : Formula::eventually(i, body);
    }
    return primary();
  }

  Rational number() {
    Token t = expect(Tok::Number, "number");
    try {
      return Rational::parse(t.text);
    } catch (const std::exception& e) {
      fail_at(t, e.what());
    }
  }

  Interval interval() {
    const Token& open = peek();
    if (open.kind != Tok::LBracket && open.kind != Tok::LParen) fail("expected interval after temporal operator");
    Token start = advance();
    Interval i;
    i.lower_closed = start.kind == Tok::LBracket;
    i.lower = number();
    expect(Tok::Comma, "','");
    i.upper = number();
    if (peek().kind != Tok::RBracket && peek().kind != Tok::RParen) fail("expected ']' or ')'");
    i.upper_closed = advance().kind == Tok::RBracket;
    try {
      validate_operator_interval(i);
    } catch (const Error& e) {
      fail_at(start, e.what());
    }
    return i;
  }

  Formula primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::True: advance(); return Formula::truth();
      case Tok::False: advance(); return Formula::falsity();
      case Tok::LParen: {
        advance();
        Formula f = implication();
        expect(Tok::RParen, "')'");
        return f;
      }
      case Tok::Ident: {
        Token id = advance();
        if (peek().kind != Tok::Cmp) return Formula::atom(id.text);
        Token cmp = advance();
        PredicateExpr p;
        p.variable = id.text;
        p.comparison = cmp.text == "<"    ? Comparison::Less
                       : cmp.text == "<=" ? Comparison::LessEqual
                       : cmp.text == ">"  ? Comparison::Greater
                                          : Comparison::GreaterEqual;
        p.threshold = number();
        return Formula::predicate(std::move(p));
      }
      case Tok::End: fail("unexpected end of input");
      default: fail("unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(Lexer(text).run()).parse(); }

}  // namespace mitl
