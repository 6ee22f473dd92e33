#include "superdim/textio.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

namespace superdim {

ParseError::ParseError(const std::string& message, SourceSpan span)
    : std::runtime_error(std::to_string(span.line) + ":" + std::to_string(span.column) + ": " + message),
      message_(message),
      span_(span) {}

namespace {

enum class Tok { ident, number, quoted, symbol, end };

struct Token {
  Tok kind = Tok::end;
  std::string text;
  SourceSpan span;
};

struct Line {
  int number = 0;
  std::vector<Token> tokens;  // terminated by Tok::end
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> tokenize(const std::string& s, int line) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto span = [&](std::size_t start, std::size_t len) {
    return SourceSpan{line, static_cast<int>(start) + 1, static_cast<int>(std::max<std::size_t>(len, 1))};
  };
  while (i < s.size()) {
    const char c = s[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (ident_start(c)) {
      while (i < s.size() && ident_char(s[i])) ++i;
      out.push_back({Tok::ident, s.substr(start, i - start), span(start, i - start)});
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i < s.size() && ident_start(s[i])) {
        while (i < s.size() && ident_char(s[i])) ++i;
        throw ParseError("malformed token '" + s.substr(start, i - start) + "'", span(start, i - start));
      }
      out.push_back({Tok::number, s.substr(start, i - start), span(start, i - start)});
    } else if (c == '"') {
      ++i;
      while (i < s.size() && s[i] != '"') ++i;
      if (i == s.size()) throw ParseError("unterminated quoted name", span(start, i - start));
      out.push_back({Tok::quoted, s.substr(start + 1, i - start - 1), span(start, i - start + 1)});
      ++i;
    } else if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') {
      out.push_back({Tok::symbol, "->", span(start, 2)});
      i += 2;
    } else if (std::string("+-*^()/,:").find(c) != std::string::npos) {
      out.push_back({Tok::symbol, std::string(1, c), span(start, 1)});
      ++i;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", span(start, 1));
    }
  }
  out.push_back({Tok::end, "", span(s.size(), 1)});
  return out;
}

std::vector<Line> split_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string s;
  int n = 0;
  while (std::getline(in, s)) {
    ++n;
    if (!s.empty() && s.back() == '\r') s.pop_back();
    auto toks = tokenize(s, n);
    if (toks.size() > 1) out.push_back({n, std::move(toks)});
  }
  return out;
}

SourceSpan end_of_input(const std::string& text) {
  int lines = 1;
  for (char c : text) lines += c == '\n';
  return {lines, 1, 1};
}

class Cursor {
 public:
  explicit Cursor(const Line& line) : toks_(line.tokens) {}

  const Token& peek() const { return toks_[pos_]; }
  bool at_end() const { return peek().kind == Tok::end; }
  bool is(const std::string& symbol) const { return peek().kind == Tok::symbol && peek().text == symbol; }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (t.kind != Tok::end) ++pos_;
    return t;
  }
  const Token& expect(Tok kind, const std::string& what) {
    if (peek().kind != kind) throw ParseError("expected " + what, peek().span);
    return next();
  }
  void expect_symbol(const std::string& s) {
    if (!is(s)) throw ParseError("expected '" + s + "'", peek().span);
    next();
  }
  void expect_end() {
    if (!at_end()) throw ParseError("unexpected '" + peek().text + "'", peek().span);
  }
  int expect_int(const std::string& what) {
    const Token& t = expect(Tok::number, what);
    try {
      return std::stoi(t.text);
    } catch (const std::out_of_range&) {
      throw ParseError(what + " out of range", t.span);
    }
  }
  /// NUMBER ['/' NUMBER]
  mpq_class number() {
    const Token& t = expect(Tok::number, "number");
    mpq_class q(mpz_class(t.text));
    if (is("/")) {
      next();
      const Token& d = expect(Tok::number, "denominator");
      const mpz_class den(d.text);
      if (den == 0) throw ParseError("division by zero", d.span);
      q /= den;
    }
    q.canonicalize();
    return q;
  }

 private:
  const std::vector<Token>& toks_;
  std::size_t pos_ = 0;
};

// expr := ['+'|'-'] term (('+'|'-') term)*; term := factor ('*' factor)*;
// factor := primary ['^' NUMBER]; primary := number | ident | '(' expr ')'.
class PolynomialParser {
 public:
  PolynomialParser(Cursor& c, const Presentation& p) : c_(c), p_(p) {}

  SuperPolynomial expr() {
    SuperPolynomial out = p_.zero();
    bool negative = false;
    if (c_.is("+") || c_.is("-")) negative = c_.next().text == "-";
    for (;;) {
      SuperPolynomial t = term();
      if (negative) t = -t;
      out += t;
      if (!c_.is("+") && !c_.is("-")) break;
      negative = c_.next().text == "-";
    }
    return out;
  }

 private:
  SuperPolynomial term() {
    SuperPolynomial out = factor();
    while (c_.is("*")) {
      c_.next();
      out = multiply(out, factor());
    }
    return out;
  }

  SuperPolynomial factor() {
    SuperPolynomial base = primary();
    if (!c_.is("^")) return base;
    c_.next();
    const int e = c_.expect_int("exponent");
    SuperPolynomial out = p_.constant(1);
    for (int i = 0; i < e; ++i) out = multiply(out, base);
    return out;
  }

  SuperPolynomial primary() {
    const Token& t = c_.peek();
    if (t.kind == Tok::number) return p_.constant(p_.field.element(c_.number()));
    if (t.kind == Tok::ident) {
      c_.next();
      if (p_.generator_index(t.text) < 0) throw ParseError("unknown identifier '" + t.text + "'", t.span);
      return p_.gen(t.text);
    }
    if (c_.is("(")) {
      c_.next();
      SuperPolynomial inner = expr();
      c_.expect_symbol(")");
      return inner;
    }
    if (t.kind == Tok::end) throw ParseError("expected a term", t.span);
    throw ParseError("unexpected '" + t.text + "'", t.span);
  }

  Cursor& c_;
  const Presentation& p_;
};

SourceSpan line_span(const Line& l) {
  const auto& first = l.tokens.front().span;
  const auto& last = l.tokens.back().span;
  return {l.number, first.column, std::max(1, last.column - first.column)};
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !ident_start(s[0])) return false;
  for (char c : s) {
    if (!ident_char(c)) return false;
  }
  return true;
}

std::string symbol_text(const std::string& name) { return is_identifier(name) ? name : "\"" + name + "\""; }

// Sign and magnitude of a term; residues print as nonnegative numbers.
std::string coefficient_prefix(const Scalar& c, bool first) {
  const bool negative = c.modulus() == 0 && sgn(c.value()) < 0;
  const Scalar mag = negative ? -c : c;
  std::string s = first ? (negative ? "-" : "") : (negative ? " - " : " + ");
  if (!mag.is_one()) s += mag.to_string() + "*";
  return s;
}

std::string header_word(const Line& l) {
  const Token& t = l.tokens.front();
  return t.kind == Tok::ident ? t.text : "";
}

}  // namespace

SuperPolynomial parse_polynomial(const std::string& text, const Presentation& p) {
  const auto toks = tokenize(text, 1);
  Line line{1, toks};
  Cursor c(line);
  SuperPolynomial out = PolynomialParser(c, p).expr();
  c.expect_end();
  return out.bound_to(p.field);
}

Presentation parse_presentation(const std::string& text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError("expected 'algebra NAME over FIELD'", end_of_input(text));

  Cursor head(lines[0]);
  const Token& kw = head.expect(Tok::ident, "'algebra'");
  if (kw.text != "algebra") throw ParseError("expected 'algebra'", kw.span);
  const std::string name = head.expect(Tok::ident, "algebra name").text;
  const Token& over = head.expect(Tok::ident, "'over'");
  if (over.text != "over") throw ParseError("expected 'over'", over.span);
  const Token& ft = head.expect(Tok::ident, "field (Q or F<p>)");
  Field field;
  try {
    field = Field::parse(ft.text);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), ft.span);
  }
  head.expect_end();

  Flavor flavor = Flavor::supercommutative;
  GeneratorList gens;
  std::set<std::string> seen;
  std::optional<int> cap;
  std::vector<std::pair<const Line*, std::size_t>> relation_lines;
  bool in_relations = false, saw_relations = false, closed = false;

  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& l = lines[li];
    Cursor c(l);
    const std::string word = header_word(l);
    if (closed) throw ParseError("text after 'end'", l.tokens.front().span);
    if (in_relations) {
      if (word == "end" && l.tokens.size() == 2) {
        in_relations = false;
        closed = true;
        continue;
      }
      relation_lines.emplace_back(&l, li);
      continue;
    }
    if (word == "flavor") {
      c.next();
      const Token& f = c.expect(Tok::ident, "flavor");
      if (f.text == "supercommutative") {
        flavor = Flavor::supercommutative;
      } else if (f.text == "associative") {
        flavor = Flavor::associative;
      } else {
        throw ParseError("unknown flavor '" + f.text + "'", f.span);
      }
      c.expect_end();
    } else if (word == "even" || word == "odd") {
      c.next();
      const Parity parity = word == "odd" ? Parity::odd : Parity::even;
      if (c.at_end()) throw ParseError("expected generator names", c.peek().span);
      while (!c.at_end()) {
        const Token& g = c.expect(Tok::ident, "generator name");
        std::optional<Bidegree> bd;
        if (c.is("(")) {
          c.next();
          const int k = c.expect_int("k");
          c.expect_symbol(",");
          const int lv = c.expect_int("l");
          c.expect_symbol(")");
          bd = Bidegree{k, lv};
        }
        if (!seen.insert(g.text).second) throw ParseError("duplicate generator '" + g.text + "'", g.span);
        try {
          gens.push_back(GeneratorSpec::make(g.text, parity, bd));
        } catch (const std::invalid_argument& e) {
          throw ParseError(e.what(), g.span);
        }
      }
    } else if (word == "cap") {
      c.next();
      const int v = c.expect_int("cap");
      c.expect_end();
      cap = v;
    } else if (word == "relations") {
      c.next();
      c.expect_end();
      if (saw_relations) throw ParseError("second 'relations' block", l.tokens.front().span);
      in_relations = saw_relations = true;
    } else {
      throw ParseError("unexpected '" + l.tokens.front().text + "'", l.tokens.front().span);
    }
  }
  if (in_relations) throw ParseError("missing 'end' after relations", end_of_input(text));

  Presentation p(name, field, flavor, gens, cap);
  for (const auto& [l, li] : relation_lines) {
    Cursor c(*l);
    SuperPolynomial r = PolynomialParser(c, p).expr().bound_to(field);
    c.expect_end();
    if (!r.homogeneous_parity()) throw ParseError("relation is not parity-homogeneous", line_span(*l));
    if (!r.homogeneous_degree()) throw ParseError("relation is not homogeneous", line_span(*l));
    p.relations.push_back(std::move(r));
  }
  return p;
}

std::string print_presentation(const Presentation& p) {
  std::ostringstream os;
  os << "algebra " << p.name << " over " << p.field.name() << "\n";
  os << "flavor " << to_string(p.flavor) << "\n";
  // One line per run of equal parity keeps the generator order.
  const GeneratorList& gens = *p.generators;
  for (std::size_t i = 0; i < gens.size();) {
    const Parity parity = gens[i].parity;
    os << to_string(parity);
    for (; i < gens.size() && gens[i].parity == parity; ++i) {
      const auto& g = gens[i];
      os << " " << g.name;
      const Bidegree def = parity == Parity::odd ? Bidegree{0, 1} : Bidegree{1, 0};
      if (g.bidegree != def) os << "(" << g.bidegree.k << "," << g.bidegree.l << ")";
    }
    os << "\n";
  }
  if (p.cap) os << "cap " << *p.cap << "\n";
  os << "relations\n";
  for (const auto& r : p.relations) os << r.bound_to(p.field).to_string() << "\n";
  os << "end\n";
  return os.str();
}

namespace {

Vector parse_combination(Cursor& c, const std::map<std::string, Index>& basis, const Field& field, Index dim) {
  Vector v = Vector::Zero(dim);
  bool negative = false;
  if (c.is("+") || c.is("-")) negative = c.next().text == "-";
  for (;;) {
    Scalar coeff = field(1);
    std::optional<Index> target;
    if (c.peek().kind == Tok::number) {
      const SourceSpan s = c.peek().span;
      coeff = field.element(c.number());
      if (c.is("*")) {
        c.next();
      } else if (coeff.is_zero()) {
        target = -1;
      } else {
        throw ParseError("a constant needs a basis symbol", s);
      }
    }
    if (!target) {
      const Token& t = c.peek();
      if (t.kind != Tok::ident && t.kind != Tok::quoted) throw ParseError("expected a basis symbol", t.span);
      c.next();
      auto it = basis.find(t.text);
      if (it == basis.end()) throw ParseError("unknown basis symbol '" + t.text + "'", t.span);
      target = it->second;
    }
    if (*target >= 0) v(*target) += negative ? -coeff : coeff;
    if (!c.is("+") && !c.is("-")) break;
    negative = c.next().text == "-";
  }
  return v;
}

}  // namespace

SuperModule parse_module(const std::string& text, const AlgebraPtr& a) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError("expected 'module NAME'", end_of_input(text));
  {
    Cursor head(lines[0]);
    const Token& kw = head.expect(Tok::ident, "'module'");
    if (kw.text != "module") throw ParseError("expected 'module'", kw.span);
    const Token& name = head.expect(Tok::ident, "module name");
    head.expect_end();
    if (name.text == "regular") {
      if (lines.size() > 1) throw ParseError("text after 'module regular'", lines[1].tokens.front().span);
      return SuperModule::regular(a);
    }
  }

  std::vector<std::string> names;
  std::vector<Parity> parities;
  std::map<std::string, Index> index;
  std::size_t li = 1;
  auto block_start = [&](const std::string& word) {
    if (li >= lines.size()) throw ParseError("expected '" + word + "'", end_of_input(text));
    Cursor c(lines[li]);
    const Token& t = c.expect(Tok::ident, "'" + word + "'");
    if (t.text != word) throw ParseError("expected '" + word + "'", t.span);
    c.expect_end();
    ++li;
  };
  auto is_end = [&](const Line& l) { return header_word(l) == "end" && l.tokens.size() == 2; };

  block_start("basis");
  for (;; ++li) {
    if (li >= lines.size()) throw ParseError("missing 'end' after basis", end_of_input(text));
    if (is_end(lines[li])) {
      ++li;
      break;
    }
    Cursor c(lines[li]);
    const Token& t = c.peek();
    if (t.kind != Tok::ident && t.kind != Tok::quoted) throw ParseError("expected a basis symbol", t.span);
    c.next();
    c.expect_symbol(":");
    const Token& p = c.expect(Tok::ident, "parity");
    if (p.text != "even" && p.text != "odd") throw ParseError("parity must be even or odd", p.span);
    c.expect_end();
    if (!index.emplace(t.text, static_cast<Index>(names.size())).second) {
      throw ParseError("duplicate basis symbol '" + t.text + "'", t.span);
    }
    names.push_back(t.text);
    parities.push_back(p.text == "odd" ? Parity::odd : Parity::even);
  }

  const Index n = static_cast<Index>(names.size());
  const Field& field = a->field();
  std::vector<Matrix> action(a->generators().size(), Matrix::Zero(n, n));
  if (li < lines.size()) {
    block_start("action");
    for (;; ++li) {
      if (li >= lines.size()) throw ParseError("missing 'end' after action", end_of_input(text));
      if (is_end(lines[li])) {
        ++li;
        break;
      }
      Cursor c(lines[li]);
      const Token& g = c.expect(Tok::ident, "generator name");
      std::size_t gi = 0;
      while (gi < a->generators().size() && a->generators()[gi].name != g.text) ++gi;
      if (gi == a->generators().size()) throw ParseError("unknown generator '" + g.text + "'", g.span);
      const Token& src = c.peek();
      if (src.kind != Tok::ident && src.kind != Tok::quoted) throw ParseError("expected a basis symbol", src.span);
      c.next();
      auto it = index.find(src.text);
      if (it == index.end()) throw ParseError("unknown basis symbol '" + src.text + "'", src.span);
      c.expect_symbol("->");
      const SourceSpan image_span = c.peek().span;
      const Vector v = parse_combination(c, index, field, n);
      c.expect_end();
      const Parity want = a->generators()[gi].parity + parities[static_cast<std::size_t>(it->second)];
      for (Index j = 0; j < n; ++j) {
        if (!is_zero(v(j)) && parities[static_cast<std::size_t>(j)] != want) {
          throw ParseError("image of " + src.text + " under " + g.text + " must be " + to_string(want), image_span);
        }
      }
      action[gi].col(it->second) = v;
    }
  }
  if (li < lines.size()) throw ParseError("text after the module", lines[li].tokens.front().span);
  if (!a->has_presentation()) {
    throw ParseError("module files need an algebra with a presentation", lines[0].tokens.front().span);
  }
  SuperModule m = SuperModule::from_generator_actions(a, std::move(names), std::move(parities), action);
  if (const auto defect = module_defect(m)) throw ParseError("not a module: " + *defect, lines[0].tokens.front().span);
  return m;
}

std::string print_module(const SuperModule& m, const std::string& name) {
  const Algebra& a = m.algebra();
  if (!a.has_presentation()) throw std::logic_error("print_module needs an algebra with a presentation");
  std::ostringstream os;
  // Repeated names (direct sums, quotients) get a "#k" suffix.
  std::vector<std::string> symbols;
  std::set<std::string> used(m.names().begin(), m.names().end());
  std::set<std::string> taken;
  for (const auto& n : m.names()) {
    std::string sym = n;
    for (int k = 2; !taken.insert(sym).second; ++k) {
      sym = n + "#" + std::to_string(k);
      if (used.count(sym)) taken.insert(sym);
    }
    symbols.push_back(symbol_text(sym));
  }
  os << "module " << name << "\nbasis\n";
  for (Index i = 0; i < m.dim(); ++i) os << symbols[static_cast<std::size_t>(i)] << " : " << to_string(m.parity(i)) << "\n";
  os << "end\naction\n";
  for (const auto& g : a.generators()) {
    const Matrix act = m.action_of(g.value);
    for (Index j = 0; j < m.dim(); ++j) {
      std::string line;
      for (Index i = 0; i < m.dim(); ++i) {
        if (is_zero(act(i, j))) continue;
        line += coefficient_prefix(act(i, j), line.empty()) + symbols[static_cast<std::size_t>(i)];
      }
      if (!line.empty()) os << g.name << " " << symbols[static_cast<std::size_t>(j)] << " -> " << line << "\n";
    }
  }
  os << "end\n";
  return os.str();
}

Cochain parse_cochain(const std::string& text, const Algebra& a) {
  if (!a.has_presentation()) throw std::logic_error("cochain files need an algebra with a presentation");
  const Presentation& p = a.presentation();
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError("expected 'cochain NAME'", end_of_input(text));
  Cursor head(lines[0]);
  const Token& kw = head.expect(Tok::ident, "'cochain'");
  if (kw.text != "cochain") throw ParseError("expected 'cochain'", kw.span);
  head.expect(Tok::ident, "cochain name");
  head.expect_end();

  std::optional<int> n;
  std::optional<Parity> parity;
  bool skew = false;
  std::size_t li = 1;
  for (; li < lines.size(); ++li) {
    Cursor c(lines[li]);
    const std::string word = header_word(lines[li]);
    if (word == "n" && lines[li].tokens.size() == 3 && lines[li].tokens[1].kind == Tok::number) {
      c.next();
      n = c.expect_int("n");
    } else if (word == "parity" && lines[li].tokens.size() == 3) {
      c.next();
      const Token& t = c.expect(Tok::ident, "parity");
      if (t.text != "even" && t.text != "odd") throw ParseError("parity must be even or odd", t.span);
      parity = t.text == "odd" ? Parity::odd : Parity::even;
    } else if (word == "skew" && lines[li].tokens.size() == 2) {
      skew = true;
    } else {
      break;
    }
  }
  if (!n) throw ParseError("missing 'n'", li < lines.size() ? lines[li].tokens.front().span : end_of_input(text));
  if (!parity) throw ParseError("missing 'parity'", li < lines.size() ? lines[li].tokens.front().span : end_of_input(text));
  if (skew && *n != 1) throw ParseError("'skew' needs n = 1", lines[0].tokens.front().span);

  Cochain f = Cochain::zero(*n, *parity, a.dim(), a.dim());
  bool closed = false;
  for (; li < lines.size(); ++li) {
    const Line& l = lines[li];
    if (header_word(l) == "end" && l.tokens.size() == 2) {
      closed = true;
      ++li;
      break;
    }
    Cursor c(l);
    std::vector<Index> args;
    for (;;) {
      const SourceSpan s = c.peek().span;
      const Vector v = a.reduce(PolynomialParser(c, p).expr().bound_to(p.field));
      Index hit = -1;
      int nonzero = 0;
      for (Index b = 0; b < v.size(); ++b) {
        if (is_zero(v(b))) continue;
        ++nonzero;
        hit = b;
      }
      if (nonzero != 1 || !v(hit).is_one()) throw ParseError("argument must be a basis element", s);
      args.push_back(hit);
      if (c.is("->")) break;
      c.expect_symbol(",");
    }
    if (static_cast<int>(args.size()) != f.arity()) {
      throw ParseError("expected " + std::to_string(f.arity()) + " arguments", l.tokens.front().span);
    }
    c.expect_symbol("->");
    const SourceSpan vs = c.peek().span;
    const Vector value = a.reduce(PolynomialParser(c, p).expr().bound_to(p.field));
    c.expect_end();
    Parity want = *parity;
    for (Index b : args) want = want + a.parity(b);
    if (auto vp = a.parity_of(value); !vp || (!is_zero(value) && *vp != want)) {
      throw ParseError("value must be " + to_string(want), vs);
    }
    f.set(args, value);
    if (skew) f.set({args[1], args[0]}, koszul(a.parity(args[0]), a.parity(args[1])) * value);
  }
  if (!closed) throw ParseError("missing 'end'", end_of_input(text));
  if (li < lines.size()) throw ParseError("text after 'end'", lines[li].tokens.front().span);
  return f;
}

std::string print_cochain(const Cochain& f, const Algebra& a, const std::string& name) {
  std::ostringstream os;
  os << "cochain " << name << "\nn " << f.n << "\nparity " << to_string(f.parity) << "\n";
  for (Index col = 0; col < f.tuple_count(); ++col) {
    std::string value;
    for (Index i = 0; i < f.dim_m; ++i) {
      if (is_zero(f.table(i, col))) continue;
      value += coefficient_prefix(f.table(i, col), value.empty()) + a.basis(i).name;
    }
    if (value.empty()) continue;
    std::string args;
    for (Index b : f.tuple(col)) args += (args.empty() ? "" : ", ") + a.basis(b).name;
    os << args << " -> " << value << "\n";
  }
  os << "end\n";
  return os.str();
}

std::string emit_report(const Json& value) { return value.dump(2) + "\n"; }

}  // namespace superdim
