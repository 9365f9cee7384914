#include "folsem/interpretation.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "folsem/syntax.hpp"

namespace folsem {

namespace {

bool valid_symbol_name(const std::string& name) {
  if (name == "+" || name == "-" || name == "*") return true;
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0])))
    return false;
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '\'')
      return false;
  return name != "exists" && name != "true" && name != "false";
}

void check_operator_arity(const std::string& name, std::size_t arity) {
  if ((name == "+" || name == "-" || name == "*") && arity != 2)
    throw MalformedInput("operator '" + name + "' must have arity 2");
}

const std::string& element_name(const Value& v) {
  if (auto* e = std::get_if<Element>(&v.payload)) return e->name;
  throw MalformedInput("value " + print(v) + " is not a finite-domain element");
}

}  // namespace

HerbrandAlgebra::HerbrandAlgebra(Signature functions)
    : sig_(std::move(functions)) {
  if (!sig_.predicates().empty())
    throw MalformedInput("a Herbrand algebra has no predicates");
  bool has_constant = false;
  for (const auto& [name, arity] : sig_.functions()) {
    if (!valid_symbol_name(name) || (name == "neg" && arity != 1))
      throw MalformedInput("invalid function symbol name '" + name + "'");
    check_operator_arity(name, arity);
    has_constant = has_constant || arity == 0;
  }
  if (!has_constant)
    throw MalformedInput(
        "Herbrand signature needs at least one constant (empty universe)");
}

Value HerbrandAlgebra::apply(const std::string& f,
                             std::span<const Value> args) const {
  auto arity = sig_.function_arity(f);
  if (!arity || *arity != args.size())
    throw MalformedInput("unknown function symbol '" + f + "/" +
                         std::to_string(args.size()) + "'");
  GroundTerm g{f, {}};
  for (const auto& a : args) {
    auto* sub = std::get_if<GroundTerm>(&a.payload);
    if (!sub) throw MalformedInput("non-Herbrand value given to '" + f + "'");
    g.args.push_back(*sub);
  }
  return Value::ground(std::move(g));
}

std::optional<std::vector<Value>> HerbrandAlgebra::enumerate() const {
  std::vector<Value> out;
  for (const auto& [name, arity] : sig_.functions()) {
    if (arity != 0) return std::nullopt;
    out.push_back(Value::ground({name, {}}));
  }
  return out;
}

IntegerAlgebra::IntegerAlgebra() {
  sig_.add_function("+", 2);
  sig_.add_function("-", 2);
  sig_.add_function("*", 2);
  sig_.add_function("neg", 1);
  sig_.set_integer_literals(true);
}

Value IntegerAlgebra::apply(const std::string& f,
                            std::span<const Value> args) const {
  auto num = [&](std::size_t i) -> const BigInt& {
    auto* v = std::get_if<BigInt>(&args[i].payload);
    if (!v) throw MalformedInput("non-integer value given to '" + f + "'");
    return *v;
  };
  if (args.empty() && is_numeral(f)) return Value::integer(BigInt(f));
  if (args.size() == 2) {
    if (f == "+") return Value::integer(num(0) + num(1));
    if (f == "-") return Value::integer(num(0) - num(1));
    if (f == "*") return Value::integer(num(0) * num(1));
  }
  if (args.size() == 1 && f == "neg") return Value::integer(-num(0));
  throw MalformedInput("unknown integer function symbol '" + f + "/" +
                       std::to_string(args.size()) + "'");
}

FiniteAlgebra::FiniteAlgebra(std::vector<std::string> elements)
    : elements_(std::move(elements)) {
  if (elements_.empty()) throw MalformedInput("finite domain must be non-empty");
  std::set<std::string> seen;
  for (const auto& e : elements_) {
    if (!valid_symbol_name(e) || e == "+" || e == "-" || e == "*")
      throw MalformedInput("invalid element name '" + e + "'");
    if (!seen.insert(e).second)
      throw MalformedInput("duplicate domain element '" + e + "'");
    sig_.add_function(e, 0);
  }
}

void FiniteAlgebra::add_function(const std::string& name, std::size_t arity,
                                 Table table) {
  if (!valid_symbol_name(name))
    throw MalformedInput("invalid function symbol name '" + name + "'");
  check_operator_arity(name, arity);
  if (sig_.function_arity(name))
    throw MalformedInput("function symbol '" + name + "' declared twice");
  std::set<std::string> elems(elements_.begin(), elements_.end());
  for (const auto& [args, result] : table) {
    if (args.size() != arity)
      throw MalformedInput("table of '" + name + "' has a row of wrong width");
    for (const auto& a : args)
      if (!elems.count(a))
        throw MalformedInput("table of '" + name +
                             "' mentions undeclared element '" + a + "'");
    if (!elems.count(result))
      throw MalformedInput("table of '" + name +
                           "' maps to undeclared element '" + result + "'");
  }
  std::size_t expected = 1;
  for (std::size_t i = 0; i < arity; ++i) expected *= elements_.size();
  if (table.size() != expected)
    throw MalformedInput("table of '" + name + "' is partial: " +
                         std::to_string(table.size()) + " of " +
                         std::to_string(expected) + " rows");
  sig_.add_function(name, arity);
  tables_.emplace(name, std::make_pair(arity, std::move(table)));
}

Value FiniteAlgebra::apply(const std::string& f,
                           std::span<const Value> args) const {
  auto it = tables_.find(f);
  if (it == tables_.end()) {
    if (args.empty() && sig_.function_arity(f)) return Value::element(f);
    throw MalformedInput("unknown function symbol '" + f + "'");
  }
  const auto& [arity, table] = it->second;
  if (arity != args.size())
    throw MalformedInput("function symbol '" + f + "' expects " +
                         std::to_string(arity) + " argument(s)");
  std::vector<std::string> key;
  for (const auto& a : args) key.push_back(element_name(a));
  return Value::element(table.at(key));
}

std::optional<std::vector<Value>> FiniteAlgebra::enumerate() const {
  std::vector<Value> out;
  for (const auto& e : elements_) out.push_back(Value::element(e));
  return out;
}

Interpretation::Interpretation(std::shared_ptr<const Algebra> algebra)
    : algebra_(std::move(algebra)), sig_(algebra_->signature()) {}

void Interpretation::add_predicate(const std::string& name, std::size_t arity,
                                   std::vector<std::vector<Value>> tuples) {
  if (!valid_symbol_name(name) || name == "+" || name == "-" || name == "*")
    throw MalformedInput("invalid predicate name '" + name + "'");
  if (relations_.count(name))
    throw MalformedInput("predicate '" + name + "' declared twice");
  sig_.add_predicate(name, arity);
  for (const auto& t : tuples)
    if (t.size() != arity)
      throw MalformedInput("tuple of wrong width for predicate '" + name + "'");
  relations_.emplace(name, std::move(tuples));
}

bool Interpretation::contains(const std::string& predicate,
                              std::span<const Value> tuple) const {
  auto it = relations_.find(predicate);
  if (it == relations_.end())
    throw MalformedInput("unknown predicate '" + predicate + "'");
  for (const auto& row : it->second) {
    if (row.size() != tuple.size()) continue;
    bool same = true;
    for (std::size_t i = 0; same && i < row.size(); ++i)
      same = algebra_->equal(row[i], tuple[i]);
    if (same) return true;
  }
  return false;
}

Interpretation make_integer_interpretation() {
  return Interpretation(std::make_shared<IntegerAlgebra>());
}

AtomStatus atom_status(const std::string& predicate,
                       const std::vector<Term>& args,
                       const Substitution& theta,
                       const Interpretation& interp) {
  auto arity = interp.signature().predicate_arity(predicate);
  if (!arity) throw MalformedInput("unknown predicate '" + predicate + "'");
  if (*arity != args.size())
    throw MalformedInput("predicate '" + predicate + "' expects " +
                         std::to_string(*arity) + " argument(s), got " +
                         std::to_string(args.size()));
  std::vector<Value> tuple;
  for (const auto& a : args) {
    Term t = apply(a, theta);
    if (!t.ground()) return AtomStatus::nonground;
    tuple.push_back(evaluate(t, interp.algebra()).value());
  }
  return interp.contains(predicate, tuple) ? AtomStatus::holds
                                           : AtomStatus::fails;
}

std::optional<std::vector<Value>> enumerate_domain(
    const Interpretation& interp) {
  return interp.algebra().enumerate();
}

namespace {

using nlohmann::json;

std::size_t read_arity(const json& spec, const std::string& name) {
  if (!spec.is_object() || !spec.contains("arity") ||
      !spec["arity"].is_number_unsigned())
    throw MalformedInput("'" + name + "' needs a non-negative integer arity");
  return spec["arity"].get<std::size_t>();
}

std::vector<std::string> split_key(const std::string& key) {
  std::vector<std::string> out;
  if (key.empty()) return out;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, ',')) {
    auto b = part.find_first_not_of(' ');
    auto e = part.find_last_not_of(' ');
    out.push_back(b == std::string::npos ? "" : part.substr(b, e - b + 1));
  }
  if (key.back() == ',') out.push_back("");
  return out;
}

Value read_value(const json& j, const Interpretation& interp,
                 const std::string& kind) {
  if (kind == "int") {
    if (j.is_number_integer()) return Value::integer(BigInt(j.get<long long>()));
    if (j.is_string()) {
      Term t = evaluate(parse_term(j.get<std::string>(), SyntaxContext::of(interp)),
                        interp.algebra());
      if (t.is_value()) return t.value();
    }
    throw MalformedInput("expected an integer in tuple, got " + j.dump());
  }
  if (!j.is_string())
    throw MalformedInput("expected a string in tuple, got " + j.dump());
  Term t = parse_term(j.get<std::string>(), SyntaxContext::of(interp));
  if (!t.ground())
    throw MalformedInput("tuple entry '" + j.get<std::string>() +
                         "' is not ground");
  validate(t, interp.algebra().signature());
  return evaluate(t, interp.algebra()).value();
}

}  // namespace

Interpretation load_interpretation(const json& doc) {
  if (!doc.is_object() || !doc.contains("domain"))
    throw MalformedInput("interpretation document needs a 'domain'");
  const json& domain = doc["domain"];
  const json functions = doc.value("functions", json::object());
  const json predicates = doc.value("predicates", json::object());
  if (!functions.is_object() || !predicates.is_object())
    throw MalformedInput("'functions' and 'predicates' must be objects");

  std::shared_ptr<const Algebra> algebra;
  std::string kind;
  if (domain.is_string() && domain == "int") {
    kind = "int";
    if (!functions.empty())
      throw MalformedInput("the integer algebra takes no extra functions");
    algebra = std::make_shared<IntegerAlgebra>();
  } else if (domain.is_string() && domain == "herbrand") {
    kind = "herbrand";
    Signature sig;
    for (const auto& [name, spec] : functions.items()) {
      if (spec.contains("table"))
        throw MalformedInput("Herbrand function '" + name + "' takes no table");
      sig.add_function(name, read_arity(spec, name));
    }
    algebra = std::make_shared<HerbrandAlgebra>(std::move(sig));
  } else if (domain.is_array()) {
    kind = "finite";
    std::vector<std::string> elements;
    for (const auto& e : domain) {
      if (!e.is_string()) throw MalformedInput("domain elements must be strings");
      elements.push_back(e.get<std::string>());
    }
    auto finite = std::make_shared<FiniteAlgebra>(std::move(elements));
    for (const auto& [name, spec] : functions.items()) {
      std::size_t arity = read_arity(spec, name);
      if (!spec.contains("table") || !spec["table"].is_object())
        throw MalformedInput("finite function '" + name + "' needs a table");
      FiniteAlgebra::Table table;
      for (const auto& [key, result] : spec["table"].items()) {
        if (!result.is_string())
          throw MalformedInput("table of '" + name + "' must map to names");
        auto row = split_key(key);
        if (!table.emplace(row, result.get<std::string>()).second)
          throw MalformedInput("table of '" + name + "' repeats row '" + key +
                               "'");
      }
      finite->add_function(name, arity, std::move(table));
    }
    algebra = std::move(finite);
  } else {
    throw MalformedInput(
        "'domain' must be \"int\", \"herbrand\" or a list of element names");
  }

  Interpretation interp(std::move(algebra));
  for (const auto& [name, spec] : predicates.items()) {
    std::size_t arity = read_arity(spec, name);
    std::vector<std::vector<Value>> tuples;
    const json rows = spec.value("tuples", json::array());
    if (!rows.is_array())
      throw MalformedInput("tuples of '" + name + "' must be a list");
    for (const auto& row : rows) {
      if (!row.is_array())
        throw MalformedInput("each tuple of '" + name + "' must be a list");
      std::vector<Value> tuple;
      for (const auto& v : row) tuple.push_back(read_value(v, interp, kind));
      tuples.push_back(std::move(tuple));
    }
    interp.add_predicate(name, arity, std::move(tuples));
  }
  return interp;
}

Interpretation load_interpretation_file(const std::string& path) {
  if (path == "int") return make_integer_interpretation();
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open interpretation file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw MalformedInput("interpretation file '" + path +
                         "' is not valid JSON: " + e.what());
  }
  return load_interpretation(doc);
}

nlohmann::ordered_json to_json(const Interpretation& interp) {
  using oj = nlohmann::ordered_json;
  oj doc;
  const Algebra& alg = interp.algebra();
  oj functions = oj::object();
  if (auto* fin = dynamic_cast<const FiniteAlgebra*>(&alg)) {
    doc["domain"] = fin->elements();
    for (const auto& [name, entry] : fin->tables()) {
      oj table = oj::object();
      for (const auto& [args, result] : entry.second) {
        std::string key;
        for (std::size_t i = 0; i < args.size(); ++i)
          key += (i ? "," : "") + args[i];
        table[key] = result;
      }
      functions[name] = {{"arity", entry.first}, {"table", table}};
    }
  } else if (dynamic_cast<const HerbrandAlgebra*>(&alg)) {
    doc["domain"] = "herbrand";
    for (const auto& [name, arity] : alg.signature().functions())
      functions[name] = {{"arity", arity}};
  } else {
    doc["domain"] = "int";
  }
  doc["functions"] = functions;
  oj predicates = oj::object();
  for (const auto& [name, rows] : interp.relations()) {
    oj tuples = oj::array();
    for (const auto& row : rows) {
      oj r = oj::array();
      for (const auto& v : row) r.push_back(print(v));
      tuples.push_back(r);
    }
    predicates[name] = {{"arity", *interp.signature().predicate_arity(name)},
                        {"tuples", tuples}};
  }
  doc["predicates"] = predicates;
  return doc;
}

}  // namespace folsem
