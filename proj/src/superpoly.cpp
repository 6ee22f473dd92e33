#include "superdim/superpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace superdim {

std::string to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

std::string to_string(Flavor f) { return f == Flavor::supercommutative ? "supercommutative" : "associative"; }

GeneratorSpec GeneratorSpec::make(std::string name, Parity parity, std::optional<Bidegree> bidegree) {
  GeneratorSpec g;
  g.name = std::move(name);
  g.parity = parity;
  g.bidegree = bidegree.value_or(parity == Parity::even ? Bidegree{1, 0} : Bidegree{0, 1});
  if (g.bidegree.k < 0 || g.bidegree.l < 0 || g.bidegree.total() == 0) {
    throw std::invalid_argument("generator " + g.name + ": bidegree must be nonnegative and nonzero");
  }
  if (g.bidegree.l > 0 && parity_of_bit(g.bidegree.l) != parity) {
    throw std::invalid_argument("generator " + g.name + ": parity disagrees with odd degree " +
                                std::to_string(g.bidegree.l));
  }
  return g;
}

namespace {

const GeneratorSpec& spec(const GeneratorList& ctx, int index) {
  if (index < 0 || static_cast<std::size_t>(index) >= ctx.size()) {
    throw std::out_of_range("unknown generator index " + std::to_string(index));
  }
  return ctx[static_cast<std::size_t>(index)];
}

// Sorting key: even generators first, then odd, ascending index within each.
int key(const GeneratorList& ctx, int index) {
  return bit(spec(ctx, index).parity) * static_cast<int>(ctx.size()) + index;
}

bool same_context(const Context& a, const Context& b) { return a == b || *a == *b; }

}  // namespace

std::vector<int> Monomial::even_exponents(const GeneratorList& ctx) const {
  std::vector<int> e(ctx.size(), 0);
  for (int g : letters_) {
    if (spec(ctx, g).parity == Parity::even) ++e[static_cast<std::size_t>(g)];
  }
  return e;
}

std::vector<int> Monomial::odd_indices(const GeneratorList& ctx) const {
  std::vector<int> out;
  for (int g : letters_) {
    if (spec(ctx, g).parity == Parity::odd) out.push_back(g);
  }
  return out;
}

Parity parity(const Monomial& m, const GeneratorList& ctx) {
  int b = 0;
  for (int g : m.letters()) b ^= bit(spec(ctx, g).parity);
  return parity_of_bit(b);
}

Bidegree bidegree(const Monomial& m, const GeneratorList& ctx) {
  Bidegree d;
  for (int g : m.letters()) d = d + spec(ctx, g).bidegree;
  return d;
}

int degree(const Monomial& m, const GeneratorList& ctx) { return bidegree(m, ctx).total(); }

std::string to_string(const Monomial& m, const GeneratorList& ctx) {
  if (m.is_unit()) return "1";
  std::string out;
  const auto& w = m.letters();
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    // Exponent notation only for commuting letters.
    if (m.flavor() == Flavor::supercommutative) {
      while (j < w.size() && w[j] == w[i]) ++j;
    } else {
      j = i + 1;
    }
    if (!out.empty()) out += "*";
    out += spec(ctx, w[i]).name;
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  const int da = degree(a, *ctx);
  const int db = degree(b, *ctx);
  if (da != db) return da < db;
  if (a.letters().size() != b.letters().size()) return a.letters().size() < b.letters().size();
  for (std::size_t i = 0; i < a.letters().size(); ++i) {
    const int ka = key(*ctx, a.letters()[i]);
    const int kb = key(*ctx, b.letters()[i]);
    if (ka != kb) return ka < kb;
  }
  return false;
}

std::optional<SignedMonomial> normalize(Flavor flavor, const std::vector<int>& word, const GeneratorList& ctx) {
  for (int g : word) spec(ctx, g);
  if (flavor == Flavor::associative) return SignedMonomial{Scalar(1), Monomial(flavor, word)};
  // Insertion sort, counting transpositions of two odd letters.
  std::vector<int> letters = word;
  int swaps = 0;
  for (std::size_t i = 1; i < letters.size(); ++i) {
    for (std::size_t j = i; j > 0 && key(ctx, letters[j - 1]) > key(ctx, letters[j]); --j) {
      if (spec(ctx, letters[j - 1]).parity == Parity::odd && spec(ctx, letters[j]).parity == Parity::odd) ++swaps;
      std::swap(letters[j - 1], letters[j]);
    }
  }
  for (std::size_t i = 1; i < letters.size(); ++i) {
    if (letters[i] == letters[i - 1] && spec(ctx, letters[i]).parity == Parity::odd) return std::nullopt;
  }
  return SignedMonomial{sign(swaps), Monomial(flavor, std::move(letters))};
}

SuperPolynomial::SuperPolynomial(Flavor flavor, Context ctx)
    : flavor_(flavor), ctx_(std::move(ctx)), terms_(MonomialOrder{ctx_}) {
  if (!ctx_) throw std::invalid_argument("polynomial needs a generator context");
}

SuperPolynomial SuperPolynomial::constant(Flavor flavor, Context ctx, const Scalar& c) {
  SuperPolynomial p(flavor, std::move(ctx));
  p.add_term(Monomial(flavor, {}), c);
  return p;
}

SuperPolynomial SuperPolynomial::generator(Flavor flavor, Context ctx, int index) {
  spec(*ctx, index);
  SuperPolynomial p(flavor, std::move(ctx));
  p.add_term(Monomial(flavor, {index}), Scalar(1));
  return p;
}

SuperPolynomial SuperPolynomial::monomial(Context ctx, const Monomial& m, const Scalar& c) {
  SuperPolynomial p(m.flavor(), std::move(ctx));
  p.add_term(m, c);
  return p;
}

void SuperPolynomial::add_term(const Monomial& m, const Scalar& c) {
  if (m.flavor() != flavor_) throw std::invalid_argument("monomial flavor mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void SuperPolynomial::check_compatible(const SuperPolynomial& other) const {
  if (flavor_ != other.flavor_) throw std::invalid_argument("polynomial flavor mismatch");
  if (!same_context(ctx_, other.ctx_)) throw std::invalid_argument("polynomial generator context mismatch");
}

SuperPolynomial& SuperPolynomial::operator+=(const SuperPolynomial& other) {
  check_compatible(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

SuperPolynomial& SuperPolynomial::operator-=(const SuperPolynomial& other) {
  check_compatible(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

SuperPolynomial& SuperPolynomial::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

SuperPolynomial SuperPolynomial::operator-() const {
  SuperPolynomial p = *this;
  p *= Scalar(-1);
  return p;
}

SuperPolynomial SuperPolynomial::bound_to(const Field& field) const {
  SuperPolynomial p(flavor_, ctx_);
  for (const auto& [m, c] : terms_) p.add_term(m, field.bind(c));
  return p;
}

std::optional<Parity> SuperPolynomial::homogeneous_parity() const {
  std::optional<Parity> out;
  for (const auto& [m, c] : terms_) {
    const Parity p = parity(m, *ctx_);
    if (out && *out != p) return std::nullopt;
    out = p;
  }
  return out.value_or(Parity::even);
}

std::optional<int> SuperPolynomial::homogeneous_degree() const {
  std::optional<int> out;
  for (const auto& [m, c] : terms_) {
    const int d = degree(m, *ctx_);
    if (out && *out != d) return std::nullopt;
    out = d;
  }
  return out.value_or(0);
}

std::optional<Bidegree> SuperPolynomial::homogeneous_bidegree() const {
  std::optional<Bidegree> out;
  for (const auto& [m, c] : terms_) {
    const Bidegree d = bidegree(m, *ctx_);
    if (out && *out != d) return std::nullopt;
    out = d;
  }
  return out.value_or(Bidegree{});
}

int SuperPolynomial::max_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, degree(m, *ctx_));
  return d;
}

std::string SuperPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Scalar coeff = c;
    // Residues print as plain nonnegative numbers; rationals carry a sign.
    const bool negative = c.modulus() == 0 && sgn(c.value()) < 0;
    if (negative) coeff = -c;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (m.is_unit()) {
      out << coeff;
    } else if (coeff.is_one()) {
      out << superdim::to_string(m, *ctx_);
    } else {
      out << coeff << "*" << superdim::to_string(m, *ctx_);
    }
  }
  return out.str();
}

bool operator==(const SuperPolynomial& a, const SuperPolynomial& b) {
  if (a.flavor_ != b.flavor_ || !same_context(a.ctx_, b.ctx_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end(); ++ia, ++ib) {
    if (!(ia->first == ib->first) || ia->second != ib->second) return false;
  }
  return true;
}

SuperPolynomial multiply(const SuperPolynomial& p, const SuperPolynomial& q) {
  if (p.flavor() != q.flavor()) throw std::invalid_argument("multiply: flavor mismatch");
  if (!same_context(p.context(), q.context())) throw std::invalid_argument("multiply: generator context mismatch");
  SuperPolynomial out(p.flavor(), p.context());
  std::vector<int> word;
  for (const auto& [mp, cp] : p.terms()) {
    for (const auto& [mq, cq] : q.terms()) {
      word = mp.letters();
      word.insert(word.end(), mq.letters().begin(), mq.letters().end());
      auto n = normalize(p.flavor(), word, p.generators());
      if (n) out.add_term(n->monomial, n->sign * cp * cq);
    }
  }
  return out;
}

}  // namespace superdim
