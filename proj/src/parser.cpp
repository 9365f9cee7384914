#include <map>
#include <set>

#include "folsem/syntax.hpp"

namespace folsem {

namespace {

enum class Tok {
  ident,
  numeral,
  lparen,
  rparen,
  lbrace,
  rbrace,
  comma,
  slash,
  equals,
  amp,
  bar,
  tilde,
  plus,
  minus,
  star,
  kw_exists,
  kw_true,
  kw_false,
  end
};

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::end) return "end of input";
  return "'" + t.text + "'";
}

bool ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool ident_char(char c) {
  return ident_start(c) || (c >= '0' && c <= '9') || c == '_' || c == '\'';
}

std::vector<Token> lex(std::string_view s) {
  static const std::pair<std::string_view, Tok> utf8[] = {
      {"∧", Tok::amp},   {"∨", Tok::bar},   {"¬", Tok::tilde},
      {"∃", Tok::kw_exists}, {"·", Tok::star}, {"−", Tok::minus},
  };
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (ident_start(c) || c == '_') {
      while (i < s.size() && ident_char(s[i])) ++i;
      std::string word(s.substr(start, i - start));
      if (c == '_')
        throw ParseError("identifier '" + word +
                             "' uses the '_' prefix reserved for generated "
                             "variables",
                         {start, i});
      Tok kind = Tok::ident;
      if (word == "exists") kind = Tok::kw_exists;
      if (word == "true") kind = Tok::kw_true;
      if (word == "false") kind = Tok::kw_false;
      out.push_back({kind, std::move(word), {start, i}});
      continue;
    }
    if (c >= '0' && c <= '9') {
      while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
      if (i < s.size() && ident_char(s[i]))
        throw ParseError("malformed numeral", {start, i + 1});
      out.push_back({Tok::numeral, std::string(s.substr(start, i - start)),
                     {start, i}});
      continue;
    }
    Tok kind;
    switch (c) {
      case '(': kind = Tok::lparen; break;
      case ')': kind = Tok::rparen; break;
      case '{': kind = Tok::lbrace; break;
      case '}': kind = Tok::rbrace; break;
      case ',': kind = Tok::comma; break;
      case '/': kind = Tok::slash; break;
      case '=': kind = Tok::equals; break;
      case '&': kind = Tok::amp; break;
      case '|': kind = Tok::bar; break;
      case '~': kind = Tok::tilde; break;
      case '+': kind = Tok::plus; break;
      case '-': kind = Tok::minus; break;
      case '*': kind = Tok::star; break;
      default: {
        bool matched = false;
        for (const auto& [text, k] : utf8) {
          if (s.substr(i, text.size()) == text) {
            i += text.size();
            out.push_back({k, std::string(text), {start, i}});
            matched = true;
            break;
          }
        }
        if (matched) continue;
        std::size_t len = 1;
        auto lead = static_cast<unsigned char>(c);
        if (lead >= 0xF0) len = 4;
        else if (lead >= 0xE0) len = 3;
        else if (lead >= 0xC0) len = 2;
        len = std::min(len, s.size() - i);
        throw ParseError("unexpected character '" +
                             std::string(s.substr(i, len)) + "'",
                         {i, i + len});
      }
    }
    ++i;
    out.push_back({kind, std::string(1, c), {start, i}});
  }
  out.push_back({Tok::end, "", {s.size(), s.size()}});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const SyntaxContext& ctx)
      : tokens_(lex(text)), ctx_(ctx) {}

  Formula whole_formula() {
    Formula f = formula();
    expect(Tok::end, "end of input");
    if (!ctx_.signature) check_open_usage(f);
    return f;
  }

  Term whole_term() {
    Term t = term();
    expect(Tok::end, "end of input");
    if (!ctx_.signature) {
      Usage u;
      collect(t, u);
      u.verify();
    }
    return t;
  }

  Substitution whole_subst() {
    expect(Tok::lbrace, "'{'");
    Substitution out;
    std::set<Variable> seen;
    Usage usage;
    if (peek().kind != Tok::rbrace) {
      do {
        const Token& name = next();
        if (name.kind != Tok::ident)
          throw ParseError("expected a variable, found " + describe(name),
                           name.span);
        if (ctx_.signature && (ctx_.signature->function_arity(name.text) ||
                               ctx_.signature->predicate_arity(name.text)))
          throw ParseError("'" + name.text + "' is a symbol, not a variable",
                           name.span);
        Variable x{name.text};
        if (!seen.insert(x).second)
          throw ParseError("variable '" + name.text + "' bound twice",
                           name.span);
        expect(Tok::slash, "'/'");
        Term t = term();
        if (t.is_variable() && t.variable() == x)
          throw ParseError("binding maps '" + name.text + "' to itself",
                           {name.span.start, last_end_});
        usage.variables.emplace(name.text, name.span);
        collect(t, usage);
        out.bind(x, ctx_.algebra ? evaluate(t, *ctx_.algebra) : t);
      } while (accept(Tok::comma));
    }
    expect(Tok::rbrace, "'}' or ','");
    expect(Tok::end, "end of input");
    if (!ctx_.signature) usage.verify();
    return out;
  }

 private:
  // Symbol usage in open mode, checked for self-consistency after parsing.
  struct Usage {
    std::map<std::string, std::pair<std::size_t, SourceSpan>> functions;
    std::map<std::string, std::pair<std::size_t, SourceSpan>> predicates;
    std::map<std::string, SourceSpan> variables;

    void use(std::map<std::string, std::pair<std::size_t, SourceSpan>>& table,
             const std::string& name, std::size_t arity, SourceSpan span) {
      auto [it, inserted] = table.emplace(name, std::make_pair(arity, span));
      if (!inserted && it->second.first != arity)
        throw ParseError("'" + name + "' used with arities " +
                             std::to_string(it->second.first) + " and " +
                             std::to_string(arity),
                         span);
    }

    void verify() const {
      for (const auto& [name, entry] : predicates)
        if (functions.count(name))
          throw ParseError("'" + name + "' used as both function and predicate",
                           entry.second);
      for (const auto& [name, span] : variables) {
        if (functions.count(name))
          throw ParseError("'" + name + "' used as both variable and function",
                           span);
        if (predicates.count(name))
          throw ParseError("'" + name + "' used as both variable and predicate",
                           span);
      }
    }
  };

  static SourceSpan span_or(const std::optional<SourceSpan>& s) {
    return s.value_or(SourceSpan{});
  }

  void collect(const Term& t, Usage& u) {
    if (t.is_variable()) {
      u.variables.emplace(t.variable().name, span_or(t.span()));
    } else if (t.is_application()) {
      if (!is_numeral(t.functor()))
        u.use(u.functions, t.functor(), t.args().size(), span_or(t.span()));
      for (const auto& a : t.args()) collect(a, u);
    }
  }

  void collect(const Formula& f, Usage& u) {
    switch (f.kind()) {
      case Formula::Kind::truth:
      case Formula::Kind::falsity:
        return;
      case Formula::Kind::equation:
        collect(f.lhs(), u);
        collect(f.rhs(), u);
        return;
      case Formula::Kind::atom:
        u.use(u.predicates, f.predicate(), f.args().size(), span_or(f.span()));
        for (const auto& a : f.args()) collect(a, u);
        return;
      case Formula::Kind::conjunction:
      case Formula::Kind::disjunction:
        collect(f.left(), u);
        collect(f.right(), u);
        return;
      case Formula::Kind::negation:
        collect(f.body(), u);
        return;
      case Formula::Kind::exists:
        collect(f.body(), u);
        return;
    }
  }

  void check_open_usage(const Formula& f) {
    Usage u;
    collect(f, u);
    for (const auto& [name, span] : bound_names_)
      if (u.functions.count(name) || u.predicates.count(name))
        throw ParseError("'" + name + "' is bound but used as a symbol", span);
    u.verify();
  }

  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }

  const Token& next() {
    const Token& t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    last_end_ = t.span.end;
    return t;
  }

  bool accept(Tok k) {
    if (peek().kind != k) return false;
    next();
    return true;
  }

  const Token& expect(Tok k, const std::string& what) {
    if (peek().kind != k)
      throw ParseError("expected " + what + ", found " + describe(peek()),
                       peek().span);
    return next();
  }

  // ---- formulas

  Formula formula() {
    Formula f = conjunction();
    while (accept(Tok::bar)) f = Formula::disj(f, conjunction());
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (accept(Tok::amp)) f = Formula::conj(f, unary());
    return f;
  }

  Formula unary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::tilde:
        next();
        return Formula::negation(unary());
      case Tok::kw_exists: {
        next();
        const Token& v = next();
        if (v.kind != Tok::ident)
          throw ParseError("expected a variable after 'exists', found " +
                               describe(v),
                           v.span);
        if (ctx_.signature && (ctx_.signature->function_arity(v.text) ||
                               ctx_.signature->predicate_arity(v.text)))
          throw ParseError("cannot quantify over symbol '" + v.text + "'",
                           v.span);
        bound_names_.emplace(v.text, v.span);
        return Formula::exists(Variable{v.text}, formula());
      }
      case Tok::kw_true:
        next();
        return Formula::top();
      case Tok::kw_false:
        next();
        return Formula::bottom();
      case Tok::lparen: {
        // Either a parenthesized formula or a term that starts with '('.
        std::size_t save = pos_;
        std::optional<ParseError> group_error;
        try {
          next();
          Formula f = formula();
          expect(Tok::rparen, "')'");
          Tok k = peek().kind;
          if (k != Tok::equals && k != Tok::plus && k != Tok::minus &&
              k != Tok::star)
            return f;
        } catch (const ParseError& e) {
          group_error = e;
        }
        pos_ = save;
        try {
          return atomic();
        } catch (const ParseError& e) {
          if (group_error && group_error->span()->start > e.span()->start)
            throw *group_error;
          throw;
        }
      }
      default:
        return atomic();
    }
  }

  Formula atomic() {
    const Token& head = peek();
    std::size_t start = head.span.start;
    if (head.kind == Tok::ident && ctx_.signature &&
        ctx_.signature->predicate_arity(head.text)) {
      next();
      std::vector<Term> args;
      if (accept(Tok::lparen)) args = arguments();
      SourceSpan span{start, last_end_};
      std::size_t arity = *ctx_.signature->predicate_arity(head.text);
      if (arity != args.size())
        throw ParseError("predicate '" + head.text + "' expects " +
                             std::to_string(arity) + " argument(s), got " +
                             std::to_string(args.size()),
                         span);
      return Formula::atom(head.text, std::move(args), span);
    }
    if (head.kind == Tok::ident && ctx_.signature &&
        peek(1).kind == Tok::lparen &&
        !ctx_.signature->function_arity(head.text))
      throw ParseError("unknown predicate '" + head.text + "'", head.span);
    Term lhs = term();
    if (accept(Tok::equals)) {
      Term rhs = term();
      return Formula::equation(lhs, rhs, SourceSpan{start, last_end_});
    }
    SourceSpan span{start, last_end_};
    bool bare_head = head.kind == Tok::ident &&
                     (lhs.is_variable() || (lhs.is_application() &&
                                            lhs.functor() == head.text));
    if (!ctx_.signature && bare_head) {
      std::vector<Term> args;
      if (lhs.is_application()) args.assign(lhs.args().begin(), lhs.args().end());
      return Formula::atom(head.text, std::move(args), span);
    }
    if (ctx_.signature && lhs.is_variable() && head.kind == Tok::ident)
      throw ParseError(
          "unknown predicate '" + head.text + "' (or missing '=')", span);
    throw ParseError("expected '=', found " + describe(peek()), peek().span);
  }

  std::vector<Term> arguments() {
    std::vector<Term> args;
    do {
      args.push_back(term());
    } while (accept(Tok::comma));
    expect(Tok::rparen, "')' or ','");
    return args;
  }

  // ---- terms

  Term operator_app(const std::string& f, std::vector<Term> args,
                    SourceSpan span) {
    if (ctx_.signature) {
      auto arity = ctx_.signature->function_arity(f);
      if (!arity || *arity != args.size()) {
        std::string shown = f == "neg" ? "unary -" : f;
        throw ParseError("operator '" + shown +
                             "' is not part of the active signature",
                         span);
      }
    }
    return Term::app(f, std::move(args), span);
  }

  Term term() {
    std::size_t start = peek().span.start;
    Term t = product();
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      std::string op = next().text == "+" ? "+" : "-";
      Term rhs = product();
      t = operator_app(op, {t, rhs}, {start, last_end_});
    }
    return t;
  }

  Term product() {
    std::size_t start = peek().span.start;
    Term t = negated();
    while (accept(Tok::star)) {
      Term rhs = negated();
      t = operator_app("*", {t, rhs}, {start, last_end_});
    }
    return t;
  }

  Term negated() {
    std::size_t start = peek().span.start;
    if (accept(Tok::minus)) {
      Term t = negated();
      return operator_app("neg", {t}, {start, last_end_});
    }
    return primary();
  }

  Term primary() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::numeral:
        if (ctx_.signature && !ctx_.signature->integer_literals())
          throw ParseError(
              "integer literal '" + t.text +
                  "' needs the integer algebra",
              t.span);
        return Term::app(t.text, {}, t.span);
      case Tok::lparen: {
        Term inner = term();
        expect(Tok::rparen, "')'");
        return inner;
      }
      case Tok::ident: {
        std::size_t start = t.span.start;
        if (peek().kind == Tok::lparen) {
          next();
          std::vector<Term> args = arguments();
          SourceSpan span{start, last_end_};
          if (ctx_.signature) check_function(t.text, args.size(), span);
          return Term::app(t.text, std::move(args), span);
        }
        if (ctx_.signature) {
          if (auto arity = ctx_.signature->function_arity(t.text)) {
            if (*arity != 0)
              throw ParseError("function symbol '" + t.text + "' expects " +
                                   std::to_string(*arity) + " argument(s)",
                               t.span);
            return Term::app(t.text, {}, t.span);
          }
          if (ctx_.signature->predicate_arity(t.text))
            throw ParseError("predicate '" + t.text + "' used as a term",
                             t.span);
        }
        return Term::var(Variable{t.text}, t.span);
      }
      default:
        throw ParseError("expected a term, found " + describe(t), t.span);
    }
  }

  void check_function(const std::string& f, std::size_t n, SourceSpan span) {
    auto arity = ctx_.signature->function_arity(f);
    if (!arity) {
      if (ctx_.signature->predicate_arity(f))
        throw ParseError("predicate '" + f + "' used as a term", span);
      throw ParseError("unknown function symbol '" + f + "'", span);
    }
    if (*arity != n)
      throw ParseError("function symbol '" + f + "' expects " +
                           std::to_string(*arity) + " argument(s), got " +
                           std::to_string(n),
                       span);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t last_end_ = 0;
  const SyntaxContext& ctx_;
  std::map<std::string, SourceSpan> bound_names_;
};

}  // namespace

Term parse_term(std::string_view text, const SyntaxContext& ctx) {
  return Parser(text, ctx).whole_term();
}

Formula parse_formula(std::string_view text, const SyntaxContext& ctx) {
  return Parser(text, ctx).whole_formula();
}

Substitution parse_subst(std::string_view text, const SyntaxContext& ctx) {
  return Parser(text, ctx).whole_subst();
}

}  // namespace folsem
