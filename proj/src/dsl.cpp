#include "trilie/dsl.hpp"

#include <cctype>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "trilie/errors.hpp"

namespace trilie {

namespace {

using nlohmann::json;

enum class Tok { Int, X, Der, Sym, Omega, Punct, End };

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
  char punct = 0;
  std::size_t index = 0;  // for x<k> / d<k>
};

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < s.size() && is_digit(s[j])) ++j;
    return j;
  };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (is_digit(c)) {
      i = digits(i);
      out.push_back({Tok::Int, std::string(s.substr(start, i - start)), {start, i}});
    } else if (c == 'x' || c == 'd') {
      const std::size_t j = digits(i + 1);
      if (j == i + 1 || j - i - 1 > 4)
        throw ParseError({start, std::max(j, i + 1)}, c == 'x' ? "variable index" : "derivation index",
                         std::string(s.substr(start, std::max(j, i + 1) - start)));
      Token t{c == 'x' ? Tok::X : Tok::Der, std::string(s.substr(start, j - start)), {start, j}};
      t.index = std::stoul(std::string(s.substr(i + 1, j - i - 1)));
      out.push_back(t);
      i = j;
    } else if (c == 'D') {
      out.push_back({Tok::Sym, "D", {start, ++i}});
    } else if (c == 'w') {
      out.push_back({Tok::Omega, "w", {start, ++i}});
    } else if (std::string_view("+-*/^()[],;").find(c) != std::string_view::npos) {
      Token t{Tok::Punct, std::string(1, c), {start, ++i}};
      t.punct = c;
      out.push_back(t);
    } else {
      std::size_t j = i + 1;
      // Keep multi-byte UTF-8 sequences whole in the report.
      while (j < s.size() && (static_cast<unsigned char>(s[j]) & 0xC0) == 0x80) ++j;
      throw ParseError({start, j}, "token", std::string(s.substr(start, j - start)));
    }
  }
  out.push_back({Tok::End, "", {s.size(), s.size()}});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, std::size_t nvars, bool series = false)
      : text_(text), toks_(lex(text)), nvars_(nvars), series_(series) {}

  const Token& peek() const { return toks_[pos_]; }
  bool at_punct(char c) const { return peek().kind == Tok::Punct && peek().punct == c; }
  bool at_end() const { return peek().kind == Tok::End; }
  const Token& advance() { return toks_[pos_++]; }

  [[noreturn]] void fail(const std::string& expected) const {
    const Token& t = peek();
    throw ParseError(t.span, expected, t.kind == Tok::End ? "end of input" : t.text);
  }
  [[noreturn]] void semantic(SourceSpan span, const std::string& what) const {
    throw ParseError(span, what, std::string(text_.substr(span.start, span.end - span.start)),
                     true);
  }

  void expect_punct(char c) {
    if (!at_punct(c)) fail(std::string("'") + c + "'");
    advance();
  }
  void expect_end() {
    if (!at_end()) fail("end of input");
  }

  unsigned small_int(unsigned limit, const char* what) {
    if (peek().kind != Tok::Int) fail(what);
    const Token& t = advance();
    if (t.text.size() > 9 || std::stoul(t.text) > limit)
      semantic(t.span, std::string(what) + " must be at most " + std::to_string(limit));
    return static_cast<unsigned>(std::stoul(t.text));
  }

  Rat rational() {
    if (peek().kind != Tok::Int) fail("integer");
    const Token& num = advance();
    mpz_class p(num.text);
    if (!at_punct('/')) return Rat(p);
    advance();
    if (peek().kind != Tok::Int) fail("denominator");
    const Token& den = advance();
    mpz_class q(den.text);
    if (q == 0) semantic({num.span.start, den.span.end}, "denominator must be positive");
    Rat r(p, q);
    r.canonicalize();
    return r;
  }

  Rat signed_rational() {
    bool neg = false;
    if (at_punct('-') || at_punct('+')) neg = advance().punct == '-';
    Rat r = rational();
    return neg ? Rat(-r) : r;
  }

  std::size_t var_index(const Token& t) const {
    if (t.index < 1 || t.index > nvars_)
      semantic(t.span, "index must lie in 1.." + std::to_string(nvars_));
    return t.index;
  }

  Poly power_suffix(Poly base, std::size_t start) {
    if (!at_punct('^')) return base;
    advance();
    const unsigned e = small_int(255, "exponent");
    try {
      return base.pow(e);
    } catch (const DomainError& err) {
      semantic({start, toks_[pos_ - 1].span.end}, err.what());
    }
  }

  Poly factor() {
    const Token& t = peek();
    if (t.kind == Tok::Int) return Poly::constant(nvars_, rational());
    if ((!series_ && t.kind == Tok::X) || (series_ && t.kind == Tok::Sym)) {
      advance();
      return power_suffix(Poly::variable(nvars_, series_ ? 1 : var_index(t)), t.span.start);
    }
    if (at_punct('(')) {
      const std::size_t start = t.span.start;
      advance();
      Poly inner = sum();
      expect_punct(')');
      return power_suffix(std::move(inner), start);
    }
    fail(series_ ? "number, D or '('" : "number, variable or '('");
  }

  Poly product(std::size_t start) {
    Poly p = factor();
    while (at_punct('*')) {
      advance();
      p = checked_mul(p, factor(), start);
    }
    return p;
  }

  Poly checked_mul(const Poly& a, const Poly& b, std::size_t start) {
    try {
      return a * b;
    } catch (const DomainError& err) {
      semantic({start, toks_[pos_ - 1].span.end}, err.what());
    }
  }

  Poly sum() {
    Poly p(nvars_);
    bool first = true;
    while (true) {
      bool neg = false;
      if (at_punct('+') || at_punct('-')) {
        neg = advance().punct == '-';
      } else if (!first) {
        break;
      }
      Poly term = product(peek().span.start);
      if (neg) term = -term;
      p += term;
      first = false;
    }
    return p;
  }

  LieElem lie_sum() {
    std::vector<Poly> coeffs(nvars_, Poly(nvars_));
    bool first = true;
    while (true) {
      bool neg = false;
      const std::size_t start = peek().span.start;
      if (at_punct('+') || at_punct('-')) {
        neg = advance().punct == '-';
      } else if (!first) {
        break;
      }
      Poly c = Poly::constant(nvars_, neg ? -1 : 1);
      const std::size_t term_start = peek().span.start;
      while (peek().kind != Tok::Der) {
        if (peek().kind == Tok::End) fail("d<index>");
        c = checked_mul(c, factor(), term_start);
        if (!at_punct('*')) fail("'*' followed by d<index>");
        advance();
      }
      const Token& d = advance();
      const std::size_t i = var_index(d);
      if (!c.uses_only_first(i - 1))
        semantic({start, d.span.end},
                 "coefficient of d" + std::to_string(i) + " must lie in P" + std::to_string(i - 1));
      coeffs[i - 1] += c;
      first = false;
    }
    return LieElem::from_coefficients(std::move(coeffs));
  }

 private:
  std::string_view text_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t nvars_;
  bool series_;
};

std::size_t lie_rank(std::string_view text, std::size_t n) {
  if (n != 0) return n;
  return std::max<std::size_t>(2, infer_rank(text));
}

std::string monomial_text(const Monomial& m, const char* sym, bool indexed) {
  std::string out;
  for (std::size_t k = 0; k < kMaxVars; ++k) {
    if (m[k] == 0) continue;
    if (!out.empty()) out += "*";
    out += sym;
    if (indexed) out += std::to_string(k + 1);
    if (m[k] > 1) out += "^" + std::to_string(m[k]);
  }
  return out;
}

// Joins signed terms as "a + b - c".
void append_term(std::string& out, const Rat& c, const std::string& body) {
  const bool neg = c < 0;
  const Rat a = neg ? Rat(-c) : c;
  if (out.empty()) {
    if (neg) out += "-";
  } else {
    out += neg ? " - " : " + ";
  }
  if (body.empty()) {
    out += to_string(a);
  } else if (a == 1) {
    out += body;
  } else {
    out += to_string(a) + "*" + body;
  }
}

[[noreturn]] void schema_error(std::string_view text, const std::string& what) {
  throw ParseError({0, text.size()}, what, std::string(text.substr(0, std::min<std::size_t>(text.size(), 40))),
                   true);
}

Rat json_rational(std::string_view text, const json& j, const char* field) {
  if (j.is_number_integer()) return Rat(std::to_string(j.get<long long>()));
  if (!j.is_string()) schema_error(text, std::string(field) + " must be a rational string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const ParseError&) {
    schema_error(text, std::string(field) + " must be a rational string");
  }
}

std::vector<Rat> json_rationals(std::string_view text, const json& j, const char* field) {
  if (!j.is_array()) schema_error(text, std::string(field) + " must be an array");
  std::vector<Rat> out;
  for (const auto& v : j) out.push_back(json_rational(text, v, field));
  return out;
}

unsigned json_uint(std::string_view text, const json& j, const char* field, unsigned limit) {
  if (!j.is_number_unsigned() || j.get<unsigned long long>() > limit)
    schema_error(text, std::string(field) + " must be an integer in 0.." + std::to_string(limit));
  return j.get<unsigned>();
}

OpSeries json_series(std::string_view text, const json& j, std::size_t var, SeriesKind kind,
                     const char* field) {
  if (!j.is_object() || !j.contains("order") || !j.contains("coeffs") || !j["coeffs"].is_object())
    schema_error(text, std::string(field) + " needs \"order\" and \"coeffs\"");
  const unsigned order = json_uint(text, j["order"], "order", 4096);
  std::map<unsigned, Rat> coeffs;
  if (kind != SeriesKind::E) coeffs[0] = 1;
  for (const auto& [key, v] : j["coeffs"].items()) {
    if (key.empty() || key.size() > 6 || !std::all_of(key.begin(), key.end(), is_digit))
      schema_error(text, std::string(field) + " degrees must be non-negative integers");
    coeffs[static_cast<unsigned>(std::stoul(key))] = json_rational(text, v, field);
  }
  try {
    return OpSeries(var, kind, order, std::move(coeffs));
  } catch (const DomainError& e) {
    schema_error(text, std::string(field) + ": " + e.what());
  }
}

json series_json(const OpSeries& s) {
  json coeffs = json::object();
  for (const auto& [k, c] : s.coeffs()) coeffs[std::to_string(k)] = to_string(c);
  return {{"order", s.order()}, {"coeffs", coeffs}};
}

json rationals_json(const std::vector<Rat>& v) {
  json out = json::array();
  for (const auto& r : v) out.push_back(to_string(r));
  return out;
}

}  // namespace

std::size_t infer_rank(std::string_view text) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != 'x' && text[i] != 'd') continue;
    std::size_t j = i + 1;
    while (j < text.size() && is_digit(text[j]) && j - i <= 5) ++j;
    if (j > i + 1) best = std::max<std::size_t>(best, std::stoul(std::string(text.substr(i + 1, j - i - 1))));
  }
  return best;
}

Rat parse_rational(std::string_view text) {
  Parser p(text, 1);
  Rat r = p.signed_rational();
  p.expect_end();
  return r;
}

Poly parse_poly(std::string_view text, std::size_t n) {
  if (n == 0) n = std::max<std::size_t>(1, infer_rank(text));
  if (n > kMaxVars) throw ParseError({0, text.size()}, "rank at most 16", std::string(text), true);
  Parser p(text, n);
  Poly out = p.sum();
  p.expect_end();
  return out;
}

LieElem parse_lie(std::string_view text, std::size_t n) {
  n = lie_rank(text, n);
  if (n > kMaxVars) throw ParseError({0, text.size()}, "rank at most 16", std::string(text), true);
  Parser p(text, n);
  if (p.peek().kind == Tok::Int && p.peek().text == "0") {
    p.advance();
    p.expect_end();
    return LieElem(n);
  }
  LieElem out = p.lie_sum();
  p.expect_end();
  return out;
}

TriAut parse_triaut(std::string_view text, std::size_t n) {
  // Count the polynomials first so that every entry is read in the full rank.
  std::size_t count = 1;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ';') break;
    if (c == ',' && depth == 0) ++count;
  }
  const std::size_t rank = n != 0 ? n : count;
  if (rank > kMaxVars) throw ParseError({0, text.size()}, "rank at most 16", std::string(text), true);
  Parser p(text, rank);
  const std::size_t open = p.peek().span.start;
  p.expect_punct('[');
  std::vector<Poly> a;
  std::vector<SourceSpan> spans;
  while (true) {
    const std::size_t start = p.peek().span.start;
    a.push_back(p.sum());
    spans.push_back({start, p.peek().span.start});
    if (!p.at_punct(',')) break;
    p.advance();
  }
  std::vector<Rat> lambda;
  std::vector<SourceSpan> lspans;
  if (p.at_punct(';')) {
    p.advance();
    while (true) {
      const std::size_t start = p.peek().span.start;
      lambda.push_back(p.signed_rational());
      lspans.push_back({start, p.peek().span.start});
      if (!p.at_punct(',')) break;
      p.advance();
    }
  }
  const std::size_t close_end = p.peek().span.end;
  p.expect_punct(']');
  p.expect_end();
  if (a.size() != rank)
    p.semantic({open, close_end}, "automorphism of rank " + std::to_string(rank) + " needs " +
                                      std::to_string(rank) + " polynomials");
  if (lambda.empty()) lambda.assign(rank, Rat(1));
  if (lambda.size() != rank)
    p.semantic({open, close_end}, "expected " + std::to_string(rank) + " scalars");
  for (std::size_t i = 0; i < rank; ++i) {
    if (!a[i].uses_only_first(i))
      p.semantic(spans[i], "a" + std::to_string(i + 1) + " must lie in P" + std::to_string(i));
    if (lambda[i] == 0 && !lspans.empty()) p.semantic(lspans[i], "scalars must be nonzero");
  }
  return TriAut(std::move(a), std::move(lambda));
}

OrdinalCNF parse_ordinal(std::string_view text) {
  Parser p(text, 1);
  OrdinalCNF out;
  std::optional<unsigned> last;
  while (true) {
    const std::size_t start = p.peek().span.start;
    unsigned k = 0;
    std::uint64_t c = 0;
    if (p.peek().kind == Tok::Omega) {
      p.advance();
      k = 1;
      if (p.at_punct('^')) {
        p.advance();
        k = p.small_int(kMaxVars - 1, "ordinal exponent");
      }
      c = 1;
      if (p.at_punct('*')) {
        p.advance();
        if (p.peek().kind != Tok::Int) p.fail("coefficient");
        const Token& t = p.advance();
        if (t.text.size() > 18) p.semantic(t.span, "coefficient too large");
        c = std::stoull(t.text);
      }
    } else if (p.peek().kind == Tok::Int) {
      const Token& t = p.advance();
      if (t.text.size() > 18) p.semantic(t.span, "coefficient too large");
      c = std::stoull(t.text);
    } else {
      p.fail("'w' or integer");
    }
    const SourceSpan span{start, p.peek().span.start};
    if (last && *last <= k) p.semantic(span, "exponents must strictly decrease");
    if (c == 0 && !(k == 0 && !last && p.at_end())) p.semantic(span, "coefficients must be positive");
    last = k;
    out.add_term(k, c);
    if (!p.at_punct('+')) break;
    p.advance();
  }
  p.expect_end();
  return out;
}

OpSeries parse_series(std::string_view text, std::size_t var, SeriesKind kind, unsigned order) {
  Parser p(text, 1, true);
  const Poly poly = p.sum();
  p.expect_end();
  std::map<unsigned, Rat> coeffs;
  for (const auto& [m, c] : poly.terms()) {
    if (m[0] > order)
      throw ParseError({0, text.size()}, "degree at most the series order " + std::to_string(order),
                       std::string(text), true);
    coeffs.emplace(m[0], c);
  }
  try {
    return OpSeries(var, kind, order, std::move(coeffs));
  } catch (const DomainError& e) {
    throw ParseError({0, text.size()}, e.what(), std::string(text), true);
  }
}

GnElem parse_gnelem_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t at = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    throw ParseError({at, std::min(at + 1, text.size())}, "valid JSON",
                     at < text.size() ? std::string(1, text[at]) : "end of input");
  }
  if (!j.is_object()) schema_error(text, "a JSON object");
  for (const char* key : {"n", "form", "t", "tau", "f"})
    if (!j.contains(key)) schema_error(text, std::string("field \"") + key + "\"");
  const std::size_t n = json_uint(text, j["n"], "n", kMaxVars);
  if (n < 2) schema_error(text, "n must be at least 2");
  if (!j["form"].is_string() || (j["form"] != "A" && j["form"] != "B"))
    schema_error(text, "form must be \"A\" or \"B\"");
  const GnForm form = j["form"] == "A" ? GnForm::A : GnForm::B;

  const std::vector<Rat> t = json_rationals(text, j["t"], "t");
  const json& jt = j["tau"];
  if (!jt.is_object() || !jt.contains("a") || !jt["a"].is_array())
    schema_error(text, "tau needs an \"a\" array");
  std::vector<Poly> a;
  for (const auto& p : jt["a"]) {
    if (!p.is_string()) schema_error(text, "tau.a entries must be polynomial strings");
    try {
      a.push_back(parse_poly(p.get<std::string>(), n));
    } catch (const ParseError& e) {
      schema_error(text, std::string("tau.a entry: ") + e.what());
    }
  }
  std::vector<Rat> lambda = jt.contains("lambda") ? json_rationals(text, jt["lambda"], "tau.lambda")
                                                  : std::vector<Rat>(a.size(), Rat(1));
  std::vector<Rat> s = j.contains("s") ? json_rationals(text, j["s"], "s") : std::vector<Rat>{};
  if (form == GnForm::A && s.empty()) s.assign(n - 2, Rat(0));

  const SeriesKind fk = form == GnForm::A ? SeriesKind::F : SeriesKind::FPrime;
  const OpSeries f = json_series(text, j["f"], n - 1, fk, "f");

  std::vector<std::optional<OpSeries>> e(n >= 2 ? n - 2 : 0);
  if (j.contains("e")) {
    if (!j["e"].is_array()) schema_error(text, "e must be an array");
    for (const auto& entry : j["e"]) {
      if (!entry.is_object() || !entry.contains("i")) schema_error(text, "e entries need \"i\"");
      const unsigned i = json_uint(text, entry["i"], "e.i", kMaxVars);
      if (i < 2 || i + 1 > n) schema_error(text, "e.i must lie in 2..n-1");
      if (e[i - 2]) schema_error(text, "e.i repeated");
      e[i - 2] = json_series(text, entry, i - 1, SeriesKind::E, "e");
    }
  }
  std::vector<OpSeries> es;
  for (std::size_t k = 0; k < e.size(); ++k)
    es.push_back(e[k] ? *e[k] : OpSeries::zero(k + 1, f.order()));

  try {
    return GnElem(form, t, TriAut(std::move(a), std::move(lambda)), std::move(s), f, std::move(es));
  } catch (const DomainError& err) {
    schema_error(text, err.what());
  }
}

std::string print(const Rat& r) { return to_string(r); }

std::string print(const Poly& p) {
  std::string out;
  for (const auto& [m, c] : p.terms()) append_term(out, c, monomial_text(m, "x", true));
  return out.empty() ? "0" : out;
}

std::string print(const LieElem& u) {
  std::string out;
  for (const auto& [key, c] : u.terms()) {
    std::string body = monomial_text(monomial_of(key), "x", true);
    body += (body.empty() ? "d" : "*d") + std::to_string(key.index);
    append_term(out, c, body);
  }
  return out.empty() ? "0" : out;
}

std::string print(const TriAut& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.rank(); ++i) out += (i ? ", " : "") + print(s.a()[i]);
  if (!s.is_unipotent()) {
    out += "; ";
    for (std::size_t i = 0; i < s.rank(); ++i) out += (i ? ", " : "") + print(s.lambda()[i]);
  }
  return out + "]";
}

std::string print(const OrdinalCNF& o) { return to_string(o); }

std::string print(const OpSeries& s) {
  std::string out;
  for (const auto& [k, c] : s.coeffs()) {
    std::string body = k == 0 ? "" : (k == 1 ? "D" : "D^" + std::to_string(k));
    append_term(out, c, body);
  }
  return out.empty() ? "0" : out;
}

std::string print_gnelem_json(const GnElem& g, int indent) {
  json a = json::array();
  for (const auto& p : g.tau().a()) a.push_back(print(p));
  json e = json::array();
  for (std::size_t k = 0; k < g.e().size(); ++k) {
    json entry = series_json(g.e()[k]);
    entry["i"] = k + 2;
    e.push_back(entry);
  }
  const json j = {{"n", g.rank()},
                  {"form", g.form() == GnForm::A ? "A" : "B"},
                  {"t", rationals_json(g.t())},
                  {"tau", {{"a", a}, {"lambda", rationals_json(g.tau().lambda())}}},
                  {"s", rationals_json(g.s())},
                  {"f", series_json(g.f())},
                  {"e", e}};
  return j.dump(indent);
}

}  // namespace trilie
