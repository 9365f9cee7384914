#include "folsem/syntax.hpp"

namespace folsem {

namespace {

// Term precedence levels.
constexpr int kSum = 1;
constexpr int kProduct = 2;
constexpr int kNegation = 3;
constexpr int kPrimary = 4;

bool is_binary_operator(const Term& t) {
  return t.args().size() == 2 &&
         (t.functor() == "+" || t.functor() == "-" || t.functor() == "*");
}

bool is_unary_minus(const Term& t) {
  return t.args().size() == 1 && t.functor() == "neg";
}

void print_term(const Term& t, int min_prec, std::string& out);

void print_ground(const GroundTerm& g, int min_prec, std::string& out) {
  // Herbrand values print as the ground term they are.
  print_term(unfold_ground_values(Term::val(Value::ground(g))), min_prec, out);
}

void print_value(const Value& v, int min_prec, std::string& out) {
  std::visit(
      [&](const auto& p) {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, BigInt>) {
          bool wrap = p < 0 && min_prec > kNegation;
          if (wrap) out += '(';
          out += p.str();
          if (wrap) out += ')';
        } else if constexpr (std::is_same_v<P, Element>) {
          out += p.name;
        } else {
          print_ground(p, min_prec, out);
        }
      },
      v.payload);
}

void print_term(const Term& t, int min_prec, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::variable:
      out += t.variable().name;
      return;
    case Term::Kind::value:
      print_value(t.value(), min_prec, out);
      return;
    case Term::Kind::application:
      break;
  }
  if (is_binary_operator(t)) {
    int prec = t.functor() == "*" ? kProduct : kSum;
    bool wrap = prec < min_prec;
    if (wrap) out += '(';
    print_term(t.args()[0], prec, out);
    out += ' ';
    out += t.functor();
    out += ' ';
    print_term(t.args()[1], prec + 1, out);
    if (wrap) out += ')';
    return;
  }
  if (is_unary_minus(t)) {
    bool wrap = kNegation < min_prec;
    if (wrap) out += '(';
    out += '-';
    print_term(t.args()[0], kNegation, out);
    if (wrap) out += ')';
    return;
  }
  out += t.functor();
  if (t.args().empty()) return;
  out += '(';
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    if (i) out += ", ";
    print_term(t.args()[i], 0, out);
  }
  out += ')';
}

// Formula precedence levels.
constexpr int kOr = 1;
constexpr int kAnd = 2;
constexpr int kUnary = 3;

// `tail`: nothing follows this formula inside its enclosing group, so an
// exists may extend to the end without parentheses.
void print_formula(const Formula& f, int min_prec, bool tail,
                   std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::truth:
      out += "true";
      return;
    case Formula::Kind::falsity:
      out += "false";
      return;
    case Formula::Kind::equation:
      print_term(f.lhs(), 0, out);
      out += " = ";
      print_term(f.rhs(), 0, out);
      return;
    case Formula::Kind::atom:
      out += f.predicate();
      if (f.args().empty()) return;
      out += '(';
      for (std::size_t i = 0; i < f.args().size(); ++i) {
        if (i) out += ", ";
        print_term(f.args()[i], 0, out);
      }
      out += ')';
      return;
    case Formula::Kind::conjunction:
    case Formula::Kind::disjunction: {
      bool is_and = f.kind() == Formula::Kind::conjunction;
      int prec = is_and ? kAnd : kOr;
      bool wrap = prec < min_prec;
      if (wrap) out += '(';
      print_formula(f.left(), prec, false, out);
      out += is_and ? " & " : " | ";
      print_formula(f.right(), prec + 1, wrap || tail, out);
      if (wrap) out += ')';
      return;
    }
    case Formula::Kind::negation:
      out += '~';
      print_formula(f.body(), kUnary, tail, out);
      return;
    case Formula::Kind::exists: {
      bool wrap = !tail;
      if (wrap) out += '(';
      out += "exists ";
      out += f.bound().name;
      out += ' ';
      auto k = f.body().kind();
      bool group = k == Formula::Kind::conjunction ||
                   k == Formula::Kind::disjunction ||
                   k == Formula::Kind::equation;
      if (group) out += '(';
      print_formula(f.body(), group ? 0 : kUnary, true, out);
      if (group) out += ')';
      if (wrap) out += ')';
      return;
    }
  }
}

void sexp_term(const Term& t, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::variable:
      out += t.variable().name;
      return;
    case Term::Kind::value:
      out += "#";
      print_value(t.value(), kPrimary, out);
      return;
    case Term::Kind::application:
      if (t.args().empty()) {
        out += t.functor();
        return;
      }
      out += '(';
      out += t.functor();
      for (const auto& a : t.args()) {
        out += ' ';
        sexp_term(a, out);
      }
      out += ')';
  }
}

void sexp_formula(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::truth:
      out += "true";
      return;
    case Formula::Kind::falsity:
      out += "false";
      return;
    case Formula::Kind::equation:
      out += "(= ";
      sexp_term(f.lhs(), out);
      out += ' ';
      sexp_term(f.rhs(), out);
      out += ')';
      return;
    case Formula::Kind::atom:
      if (f.args().empty()) {
        out += f.predicate();
        return;
      }
      out += "(";
      out += f.predicate();
      for (const auto& a : f.args()) {
        out += ' ';
        sexp_term(a, out);
      }
      out += ')';
      return;
    case Formula::Kind::conjunction:
    case Formula::Kind::disjunction:
      out += f.kind() == Formula::Kind::conjunction ? "(and " : "(or ";
      sexp_formula(f.left(), out);
      out += ' ';
      sexp_formula(f.right(), out);
      out += ')';
      return;
    case Formula::Kind::negation:
      out += "(not ";
      sexp_formula(f.body(), out);
      out += ')';
      return;
    case Formula::Kind::exists:
      out += "(exists ";
      out += f.bound().name;
      out += ' ';
      sexp_formula(f.body(), out);
      out += ')';
      return;
  }
}

}  // namespace

std::string print(const Value& v) {
  std::string out;
  print_value(v, 0, out);
  return out;
}

std::string print(const Term& t) {
  std::string out;
  print_term(t, 0, out);
  return out;
}

std::string print(const Formula& phi) {
  std::string out;
  print_formula(phi, 0, true, out);
  return out;
}

std::string print(const Substitution& theta) {
  std::string out = "{";
  bool first = true;
  for (const auto& [x, t] : theta) {
    if (!first) out += ", ";
    first = false;
    out += x.name;
    out += '/';
    print_term(t, 0, out);
  }
  out += '}';
  return out;
}

std::string print(const Outcome& outcome) {
  if (outcome.empty()) return "fail";
  std::string out;
  for (const auto& a : outcome.answers()) {
    if (!out.empty()) out += " | ";
    out += print(a.full);
  }
  if (outcome.has_error()) {
    if (!out.empty()) out += " | ";
    out += "error";
  }
  return out;
}

std::string to_sexp(const Term& t) {
  std::string out;
  sexp_term(t, out);
  return out;
}

std::string to_sexp(const Formula& phi) {
  std::string out;
  sexp_formula(phi, out);
  return out;
}

}  // namespace folsem
