#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superdim/field.hpp"

namespace superdim {

enum class Parity : unsigned char { even = 0, odd = 1 };

inline int bit(Parity p) { return static_cast<int>(p); }
inline Parity parity_of_bit(int b) { return (b & 1) ? Parity::odd : Parity::even; }
inline Parity operator+(Parity a, Parity b) { return parity_of_bit(bit(a) ^ bit(b)); }
inline Parity flip(Parity p) { return parity_of_bit(bit(p) ^ 1); }
/// (-1)^{|a||b|}
inline Scalar koszul(Parity a, Parity b) { return sign(bit(a) & bit(b)); }
std::string to_string(Parity p);

struct Bidegree {
  int k = 0;
  int l = 0;
  int total() const { return k + l; }
  friend Bidegree operator+(Bidegree a, Bidegree b) { return {a.k + b.k, a.l + b.l}; }
  friend Bidegree operator-(Bidegree a, Bidegree b) { return {a.k - b.k, a.l - b.l}; }
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

enum class Flavor { supercommutative, associative };
std::string to_string(Flavor f);

struct GeneratorSpec {
  std::string name;
  Parity parity = Parity::even;
  Bidegree bidegree{1, 0};

  /// Default bidegrees: even (1,0), odd (0,1).  Throws std::invalid_argument
  /// for bidegree (0,0) or when l > 0 disagrees with the parity.
  static GeneratorSpec make(std::string name, Parity parity, std::optional<Bidegree> bidegree = {});

  friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;
};

using GeneratorList = std::vector<GeneratorSpec>;
using Context = std::shared_ptr<const GeneratorList>;

/// Normal monomial.  Letters are generator indices; in the supercommutative
/// flavor they are sorted with even generators first (ascending index,
/// repeated for exponents) followed by strictly ascending odd indices.  In the
/// associative flavor the letters form an arbitrary word.
class Monomial {
 public:
  Monomial() = default;
  Monomial(Flavor flavor, std::vector<int> letters) : flavor_(flavor), letters_(std::move(letters)) {}

  Flavor flavor() const { return flavor_; }
  const std::vector<int>& letters() const { return letters_; }
  bool is_unit() const { return letters_.empty(); }

  /// Exponents of the even generators (supercommutative flavor).
  std::vector<int> even_exponents(const GeneratorList& ctx) const;
  /// Ascending odd generator indices (supercommutative flavor).
  std::vector<int> odd_indices(const GeneratorList& ctx) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  Flavor flavor_ = Flavor::supercommutative;
  std::vector<int> letters_;
};

Parity parity(const Monomial& m, const GeneratorList& ctx);
Bidegree bidegree(const Monomial& m, const GeneratorList& ctx);
/// Weighted degree k + l summed over letters.
int degree(const Monomial& m, const GeneratorList& ctx);
/// "1", "x^2*Y1*Y3" or "phi1*psi2*phi3".
std::string to_string(const Monomial& m, const GeneratorList& ctx);

/// Degree-lexicographic order: weighted degree, then word length, then
/// letters compared by (parity, index) so even generators precede odd ones.
struct MonomialOrder {
  Context ctx;
  bool operator()(const Monomial& a, const Monomial& b) const;
};

struct SignedMonomial {
  Scalar sign;
  Monomial monomial;
};

/// Normal form of a product of generators.  std::nullopt means the word is
/// zero (a repeated odd letter in the supercommutative flavor).  Throws
/// std::out_of_range for an unknown generator index.
std::optional<SignedMonomial> normalize(Flavor flavor, const std::vector<int>& word,
                                        const GeneratorList& ctx);

class SuperPolynomial {
 public:
  using Terms = std::map<Monomial, Scalar, MonomialOrder>;

  SuperPolynomial(Flavor flavor, Context ctx);

  static SuperPolynomial constant(Flavor flavor, Context ctx, const Scalar& c);
  static SuperPolynomial generator(Flavor flavor, Context ctx, int index);
  static SuperPolynomial monomial(Context ctx, const Monomial& m, const Scalar& c = Scalar(1));

  Flavor flavor() const { return flavor_; }
  const GeneratorList& generators() const { return *ctx_; }
  const Context& context() const { return ctx_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& m, const Scalar& c);

  SuperPolynomial& operator+=(const SuperPolynomial& other);
  SuperPolynomial& operator-=(const SuperPolynomial& other);
  SuperPolynomial& operator*=(const Scalar& c);
  SuperPolynomial operator-() const;
  friend SuperPolynomial operator+(SuperPolynomial a, const SuperPolynomial& b) { return a += b; }
  friend SuperPolynomial operator-(SuperPolynomial a, const SuperPolynomial& b) { return a -= b; }
  friend SuperPolynomial operator*(const Scalar& c, SuperPolynomial p) { return p *= c; }

  /// Binds every coefficient to the field.
  SuperPolynomial bound_to(const Field& field) const;

  /// Parity if every term has the same parity; std::nullopt otherwise.
  /// The zero polynomial reports even.
  std::optional<Parity> homogeneous_parity() const;
  std::optional<int> homogeneous_degree() const;
  std::optional<Bidegree> homogeneous_bidegree() const;
  /// Largest weighted degree among terms (-1 for zero).
  int max_degree() const;

  std::string to_string() const;

  friend bool operator==(const SuperPolynomial& a, const SuperPolynomial& b);

 private:
  void check_compatible(const SuperPolynomial& other) const;

  Flavor flavor_;
  Context ctx_;
  Terms terms_;
};

/// Bilinear product; throws std::invalid_argument on flavor or context mismatch.
SuperPolynomial multiply(const SuperPolynomial& p, const SuperPolynomial& q);

}  // namespace superdim
