#include "multitype/io.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "multitype/errors.hpp"
#include "multitype/weight.hpp"

namespace multitype {

namespace {

constexpr unsigned long kMaxExponent = 100000;

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> lex(std::string_view s, std::size_t line, std::size_t column_offset) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    const std::size_t col = column_offset + i + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Number, std::string(s.substr(i, j - i)), col});
      i = j;
    } else if (ident_start(c)) {
      std::size_t j = i;
      while (j < s.size() && ident_char(s[j])) ++j;
      out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), col});
      i = j;
    } else {
      Tok kind;
      switch (c) {
        case '+': kind = Tok::Plus; break;
        case '-': kind = Tok::Minus; break;
        case '*': kind = Tok::Star; break;
        case '/': kind = Tok::Slash; break;
        case '^': kind = Tok::Caret; break;
        case '(': kind = Tok::LParen; break;
        case ')': kind = Tok::RParen; break;
        default:
          throw ParseError(std::string("unexpected character '") + c + "'", line, col);
      }
      out.push_back({kind, std::string(1, c), col});
      ++i;
    }
  }
  out.push_back({Tok::End, "", column_offset + s.size() + 1});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, const std::vector<std::string>& names, std::size_t line)
      : tokens_(std::move(tokens)), names_(names), line_(line) {}

  Polynomial parse() {
    Polynomial p = expr();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    return p;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }
  [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, peek().column); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t col) const {
    throw ParseError(msg, line_, col);
  }

  std::size_t n() const { return names_.size(); }

  Polynomial expr() {
    Polynomial acc(n());
    bool first = true;
    while (true) {
      bool negate = false;
      if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
        negate = next().kind == Tok::Minus;
      } else if (!first) {
        return acc;
      }
      Polynomial t = term();
      acc += negate ? -t : t;
      first = false;
    }
  }

  static bool starts_factor(Tok k) { return k == Tok::Number || k == Tok::Ident || k == Tok::LParen; }

  Polynomial term() {
    Polynomial acc = factor();
    while (true) {
      const Tok k = peek().kind;
      if (k == Tok::Star) {
        next();
        acc = acc * factor();
      } else if (k == Tok::Slash) {
        const std::size_t col = next().column;
        const Polynomial divisor = factor();
        if (divisor.is_zero()) fail_at("division by zero", col);
        if (divisor.size() != 1 || !divisor.has_constant_term()) {
          fail_at("division by a non-constant expression", col);
        }
        acc = acc.scaled(divisor.leading_term().second.inverse());
      } else if (starts_factor(k)) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  Polynomial factor() {
    if (peek().kind == Tok::Minus) {
      next();
      return -factor();
    }
    if (peek().kind == Tok::Plus) {
      next();
      return factor();
    }
    // In "z2z3^2" the exponent binds to the last juxtaposed name only.
    Polynomial prefix = Polynomial::constant(n(), Coefficient(1));
    Polynomial base(n());
    if (peek().kind == Tok::Ident) {
      const Token& t = next();
      auto pieces = identifier(t);
      base = pieces.back();
      pieces.pop_back();
      for (const auto& p : pieces) prefix = prefix * p;
    } else {
      base = primary();
    }
    if (peek().kind == Tok::Caret) {
      next();
      const Token& e = peek();
      if (e.kind != Tok::Number) fail("exponent must be a nonnegative integer");
      next();
      if (e.text.size() > 6 || std::stoul(e.text) > kMaxExponent) fail_at("exponent too large", e.column);
      base = base.pow(static_cast<unsigned>(std::stoul(e.text)));
    }
    return prefix * base;
  }

  Polynomial primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number: {
        next();
        return Polynomial::constant(n(), Coefficient(Rational(mpz_class(t.text, 10))));
      }
      case Tok::LParen: {
        next();
        Polynomial inner = expr();
        if (peek().kind != Tok::RParen) fail("expected ')'");
        next();
        return inner;
      }
      case Tok::End:
        fail("unexpected end of expression");
      default:
        fail("unexpected '" + t.text + "'");
    }
  }

  // Declared names and `i`; juxtaposed names such as "z2z3" are split.
  std::vector<Polynomial> identifier(const Token& t) {
    const std::string& s = t.text;
    std::vector<std::optional<std::vector<std::string>>> split(s.size() + 1);
    split[s.size()] = std::vector<std::string>{};
    for (std::size_t i = s.size(); i-- > 0;) {
      std::size_t best_len = 0;
      auto consider = [&](const std::string& piece) {
        if (piece.size() > best_len && s.compare(i, piece.size(), piece) == 0 &&
            split[i + piece.size()]) {
          best_len = piece.size();
        }
      };
      for (const auto& name : names_) consider(name);
      consider("i");
      if (best_len > 0) {
        std::vector<std::string> pieces{s.substr(i, best_len)};
        const auto& rest = *split[i + best_len];
        pieces.insert(pieces.end(), rest.begin(), rest.end());
        split[i] = std::move(pieces);
      }
    }
    if (!split[0]) fail_at("undeclared variable '" + s + "'", t.column);

    std::vector<Polynomial> out;
    for (const auto& piece : *split[0]) {
      std::size_t var = n();
      for (std::size_t v = 0; v < n(); ++v) {
        if (names_[v] == piece) var = v;
      }
      out.push_back(var < n() ? Polynomial::variable(n(), var)
                              : Polynomial::constant(n(), Coefficient::imaginary_unit()));
    }
    return out;
  }

  std::vector<Token> tokens_;
  const std::vector<std::string>& names_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

Polynomial parse_line(std::string_view text, const std::vector<std::string>& names, std::size_t line,
                      std::size_t column_offset) {
  return Parser(lex(text, line, column_offset), names, line).parse();
}

std::string_view trim(std::string_view s, std::size_t& offset) {
  std::size_t b = 0;
  while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  std::size_t e = s.size();
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  offset += b;
  return s.substr(b, e - b);
}

unsigned long parse_positive(std::string_view value, std::size_t line, std::size_t col,
                             const std::string& key) {
  if (value.empty() || value.size() > 9) throw ParseError(key + " expects a positive integer", line, col);
  for (char c : value) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError(key + " expects a positive integer", line, col);
    }
  }
  const unsigned long v = std::stoul(std::string(value));
  if (v == 0) throw ParseError(key + " must be at least 1", line, col);
  return v;
}

bool valid_name(const std::string& s) {
  if (s.empty() || !ident_start(s[0])) return false;
  for (char c : s) {
    if (!ident_char(c)) return false;
  }
  return true;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& names) {
  return parse_line(text, names, 1, 0);
}

InputSpec parse_input(std::string_view text) {
  InputSpec spec;
  bool have_vars = false;
  bool in_gens = false;
  std::size_t line_no = 0;
  std::size_t start = 0;

  auto add_generator = [&](std::string_view body, std::size_t col) {
    Polynomial g = parse_line(body, spec.variable_names, line_no, col - 1);
    if (g.has_constant_term()) {
      throw ParseError("generator has a constant term; it must vanish at the origin", line_no, col);
    }
    spec.generators.push_back(std::move(g));
  };

  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++line_no;

    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::size_t offset = 0;
    std::string_view line = trim(raw, offset);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }

    if (in_gens) {
      add_generator(line, offset + 1);
      continue;
    }

    const auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError("expected 'key: value' before 'gens:'", line_no, offset + 1);
    }
    std::size_t key_offset = offset;
    const std::string key(trim(line.substr(0, colon), key_offset));
    std::size_t value_offset = offset + colon + 1;
    const std::string_view value = trim(line.substr(colon + 1), value_offset);
    const std::size_t value_col = value_offset + 1;

    if (key == "vars") {
      if (have_vars) throw ParseError("duplicate 'vars:' line", line_no, key_offset + 1);
      std::string names(value);
      for (auto& c : names) {
        if (c == ',') c = ' ';
      }
      std::istringstream in(names);
      std::string name;
      while (in >> name) {
        if (!valid_name(name)) throw ParseError("invalid variable name '" + name + "'", line_no, value_col);
        if (name == "i") throw ParseError("'i' is reserved for the imaginary unit", line_no, value_col);
        for (const auto& existing : spec.variable_names) {
          if (existing == name) {
            throw ParseError("duplicate variable '" + name + "'", line_no, value_col);
          }
        }
        spec.variable_names.push_back(name);
      }
      if (spec.variable_names.empty()) throw ParseError("no variables declared", line_no, value_col);
      have_vars = true;
    } else if (key == "beta") {
      spec.config.truncation_order = static_cast<unsigned>(parse_positive(value, line_no, value_col, key));
    } else if (key == "max_steps") {
      spec.config.max_steps = parse_positive(value, line_no, value_col, key);
    } else if (key == "strategy") {
      if (value == "greedy") {
        spec.config.strategy = Strategy::Greedy;
      } else if (value == "exhaustive") {
        spec.config.strategy = Strategy::Exhaustive;
      } else {
        throw ParseError("strategy must be 'greedy' or 'exhaustive'", line_no, value_col);
      }
    } else if (key == "gens") {
      if (!have_vars) throw ParseError("'gens:' before 'vars:'", line_no, key_offset + 1);
      in_gens = true;
      if (!value.empty()) add_generator(value, value_col);
    } else {
      throw ParseError("unknown directive '" + key + "'", line_no, key_offset + 1);
    }
    if (end == text.size()) break;
  }

  if (!have_vars) throw ParseError("missing 'vars:' line", line_no == 0 ? 1 : line_no, 1);
  if (!in_gens) throw ParseError("missing 'gens:' section", line_no == 0 ? 1 : line_no, 1);
  if (spec.generators.empty()) throw ParseError("no generators given", line_no, 1);
  return spec;
}

namespace {

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::string paren_if_fraction(const Rational& q) {
  return is_integer(q) ? q.get_str() : "(" + q.get_str() + ")";
}

// Positive-leaning rendering of a coefficient factor (no leading sign handling).
std::string coefficient_factor(const Coefficient& c) {
  const Rational& re = c.real();
  const Rational& im = c.imag();
  if (sgn(im) == 0) return paren_if_fraction(re);
  const Rational abs_im = abs(im);
  const std::string imag = (abs_im == 1 ? std::string() : paren_if_fraction(abs_im)) + "i";
  if (sgn(re) == 0) return imag;
  return "(" + re.get_str() + (sgn(im) > 0 ? "+" : "-") + imag + ")";
}

bool leads_negative(const Coefficient& c) {
  if (sgn(c.real()) != 0) return sgn(c.real()) < 0 && sgn(c.imag()) == 0;
  return sgn(c.imag()) < 0;
}

std::string monomial_string(const MultiIndex& m, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t v = 0; v < m.size(); ++v) {
    if (m[v] == 0) continue;
    if (!out.empty()) out += "*";
    out += names.at(v);
    if (m[v] > 1) out += "^" + std::to_string(m[v]);
  }
  return out;
}

std::string term_string(const MultiIndex& m, const Coefficient& c, const std::vector<std::string>& names) {
  const bool negative = leads_negative(c);
  const Coefficient mag = negative ? -c : c;
  const std::string mono = monomial_string(m, names);
  std::string body;
  if (mono.empty()) {
    body = sgn(mag.imag()) == 0 ? mag.real().get_str() : coefficient_factor(mag);
  } else if (mag.is_one()) {
    body = mono;
  } else {
    body = coefficient_factor(mag) + "*" + mono;
  }
  return negative ? "-" + body : body;
}

std::string rational_text(const Rational& q) { return q.get_str(); }

nlohmann::ordered_json rational_json(const Rational& q) {
  return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

nlohmann::ordered_json tuple_json(const std::vector<Rational>& t) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& q : t) out.push_back(rational_json(q));
  return out;
}

std::string per_variable_text(const Weight& w, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t v = 0; v < w.size(); ++v) {
    if (v > 0) out += ", ";
    out += names.at(v) + " = " + rational_text(w[v]);
  }
  return out;
}

std::string ideal_text(const std::vector<Polynomial>& gens, const std::vector<std::string>& names) {
  if (gens.empty()) return "(none)";
  std::string out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_polynomial(gens[i], names);
  }
  return out;
}

nlohmann::ordered_json substitution_json(const Substitution& s, const std::vector<std::string>& names) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& step : s.steps()) {
    out.push_back({{"target", names.at(step.target)}, {"shift", format_polynomial(step.shift, names)}});
  }
  return out;
}

std::string emit_text(const MultitypeReport& r, const std::vector<std::string>& names, bool trace) {
  std::ostringstream out;
  out << "multitype: " << to_string(r.multitype) << "\n";
  out << "bloom-graham type: " << r.bloom_graham_type << "\n";
  out << "final weight: " << to_string(r.final_weight.sorted()) << "\n";
  out << "final weight per variable: " << per_variable_text(r.final_weight, names) << "\n";
  out << "model ideal: " << ideal_text(r.model_ideal, names) << "\n";
  if (!r.total_substitution.empty()) {
    out << "coordinate changes:\n";
    for (const auto& step : r.total_substitution.steps()) {
      out << "  " << format_substitution_step(step, names) << "\n";
    }
  }
  if (trace) {
    for (const auto& t : r.traces) {
      out << "step " << t.step << ": weight " << to_string(t.weight.sorted()) << " ["
          << per_variable_text(t.weight, names) << "]\n";
      for (const auto& step : t.substitution.steps()) {
        out << "  change: " << format_substitution_step(step, names) << "\n";
      }
      out << "  leading ideal: " << ideal_text(t.leading_ideal, names) << "\n";
      out << "  d = " << t.d;
      if (t.fast_path) out << " (nonzero Levi determinant)";
      out << "\n";
      if (t.w_max) out << "  max W = " << rational_text(*t.w_max) << " over " << t.theta_size << " monomials\n";
    }
  }
  for (const auto& w : r.warnings) out << "warning: " << w << "\n";
  return out.str();
}

std::string emit_json(const MultitypeReport& r, const std::vector<std::string>& names) {
  nlohmann::ordered_json j;
  j["variables"] = names;
  j["multitype"] = tuple_json(r.multitype.entries);
  j["bloom_graham_type"] = r.bloom_graham_type;
  j["final_weight"] = {{"sorted", tuple_json(r.final_weight.sorted())},
                       {"per_variable", tuple_json(r.final_weight.per_variable())}};
  auto model = nlohmann::ordered_json::array();
  for (const auto& g : r.model_ideal) model.push_back(format_polynomial(g, names));
  j["model_ideal"] = model;
  auto steps = nlohmann::ordered_json::array();
  for (const auto& t : r.traces) {
    nlohmann::ordered_json s;
    s["step"] = t.step;
    s["weight"] = {{"sorted", tuple_json(t.weight.sorted())},
                   {"per_variable", tuple_json(t.weight.per_variable())}};
    auto lead = nlohmann::ordered_json::array();
    for (const auto& g : t.leading_ideal) lead.push_back(format_polynomial(g, names));
    s["leading_ideal"] = lead;
    s["substitution"] = substitution_json(t.substitution, names);
    s["d"] = t.d;
    s["w_max"] = t.w_max ? rational_json(*t.w_max) : nlohmann::ordered_json(nullptr);
    s["theta_size"] = t.theta_size;
    s["fast_path"] = t.fast_path;
    steps.push_back(std::move(s));
  }
  j["steps"] = steps;
  j["total_substitution"] = substitution_json(r.total_substitution, names);
  j["warnings"] = r.warnings;
  return j.dump(2) + "\n";
}

}  // namespace

std::string format_polynomial(const Polynomial& p, const std::vector<std::string>& names) {
  if (names.size() != p.num_vars()) throw DimensionError("variable names do not match the ring");
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    std::string t = term_string(m, c, names);
    if (out.empty()) {
      out = std::move(t);
    } else if (t.front() == '-') {
      out += " - " + t.substr(1);
    } else {
      out += " + " + t;
    }
  }
  return out;
}

std::string format_substitution_step(const SubstitutionStep& step, const std::vector<std::string>& names) {
  const std::string shift = format_polynomial(step.shift, names);
  const std::string& target = names.at(step.target);
  if (shift.front() == '-') return target + "' = " + target + " - " + shift.substr(1);
  return target + "' = " + target + " + " + shift;
}

std::string emit_report(const MultitypeReport& report, const std::vector<std::string>& names,
                        const EmitOptions& options) {
  if (options.format == OutputFormat::Json) return emit_json(report, names);
  return emit_text(report, names, options.trace);
}

}  // namespace multitype
