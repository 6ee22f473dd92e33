#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superdim/field.hpp"
#include "superdim/linalg.hpp"
#include "superdim/superpoly.hpp"

namespace superdim {

/// Generators, homogeneous relations and a degree cap.  Monomials of
/// weighted degree above the cap are zero in the compiled algebra.
struct Presentation {
  std::string name = "A";
  Field field;
  Flavor flavor = Flavor::supercommutative;
  Context generators = std::make_shared<const GeneratorList>();
  std::vector<SuperPolynomial> relations;
  std::optional<int> cap;

  Presentation() = default;
  Presentation(std::string name, Field field, Flavor flavor, GeneratorList gens, std::optional<int> cap = {});

  /// Index of a generator by name, or -1.
  int generator_index(const std::string& name) const;
  SuperPolynomial gen(const std::string& name) const;
  SuperPolynomial constant(const Scalar& c) const;
  SuperPolynomial zero() const;

  friend bool operator==(const Presentation& a, const Presentation& b);
};

using SparseVector = std::vector<std::pair<Index, Scalar>>;

struct BasisElement {
  std::string name;
  Parity parity = Parity::even;
  Bidegree bidegree;
};

struct NamedElement {
  std::string name;
  Parity parity = Parity::even;
  Vector value;
};

/// Finite-dimensional unital superalgebra given by structure constants on a
/// homogeneous basis.  Algebras compiled from a presentation additionally
/// know how to reduce polynomials and how each basis element factors into
/// generators.
class Algebra {
 public:
  Algebra(std::string name, Field field, Flavor flavor, std::vector<BasisElement> basis,
          std::vector<SparseVector> table, Vector unit, std::vector<NamedElement> generators);

  const std::string& name() const { return name_; }
  const Field& field() const { return field_; }
  Flavor flavor() const { return flavor_; }
  Index dim() const { return static_cast<Index>(basis_.size()); }
  const std::vector<BasisElement>& basis() const { return basis_; }
  const BasisElement& basis(Index i) const { return basis_[static_cast<std::size_t>(i)]; }
  Parity parity(Index i) const { return basis(i).parity; }
  const Vector& unit() const { return unit_; }
  const std::vector<NamedElement>& generators() const { return generators_; }

  /// Product of basis elements i and j.
  const SparseVector& product(Index i, Index j) const {
    return table_[static_cast<std::size_t>(i * dim() + j)];
  }
  Vector basis_vector(Index i) const;
  Vector zero() const;
  Vector mult(const Vector& a, const Vector& b) const;
  /// Matrix of x -> a x.
  Matrix left_multiplication(const Vector& a) const;
  /// Matrix of x -> x a.
  Matrix right_multiplication(const Vector& a) const;

  /// Parity of a homogeneous element (zero counts as even); nullopt if mixed.
  std::optional<Parity> parity_of(const Vector& v) const;
  /// Basis index whose name matches, or -1.
  Index basis_index(const std::string& name) const;
  /// Generator by name; throws std::out_of_range.
  const NamedElement& generator(const std::string& name) const;

  bool has_presentation() const { return static_cast<bool>(pres_); }
  /// Throws std::logic_error without presentation data.
  const Presentation& presentation() const;
  Vector reduce(const SuperPolynomial& p) const;
  /// Generator indices whose product, in order, equals basis element i.
  const std::vector<int>& word(Index i) const;

 private:
  struct PresentationData;
  friend Algebra compile(const Presentation& p);

  std::string name_;
  Field field_;
  Flavor flavor_;
  std::vector<BasisElement> basis_;
  std::vector<SparseVector> table_;
  Vector unit_;
  std::vector<NamedElement> generators_;
  std::shared_ptr<const PresentationData> pres_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Degree-truncated two-sided ideal closure.  Throws std::invalid_argument
/// for a missing cap, an inhomogeneous relation, a relation of degree 0 or a
/// relation above the cap.
Algebra compile(const Presentation& p);

/// R_1^l as a subspace of A; l = 0 gives A.
Subspace<Scalar> odd_power_span(const Algebra& a, int l);
bool is_supercommutative(const Algebra& a);
bool is_associative(const Algebra& a);
/// Unit is a two-sided identity on the basis.
bool unit_is_identity(const Algebra& a);

/// Two-sided ideal generated by the given elements.
Subspace<Scalar> ideal_generated(const Algebra& a, const std::vector<Vector>& elements);
bool is_two_sided_ideal(const Algebra& a, const Subspace<Scalar>& s);
/// Span of products x*y, x in S, y in T (no closure).
Subspace<Scalar> product_span(const Algebra& a, const Subspace<Scalar>& s, const Subspace<Scalar>& t);
/// Intersection of S with the even or odd coordinate part.
Subspace<Scalar> parity_part(const Algebra& a, const Subspace<Scalar>& s, Parity p);
/// Whether a subspace is spanned by homogeneous elements.
bool is_graded_subspace(const std::vector<Parity>& parities, const Subspace<Scalar>& s);

/// Checks that the generator images of a presented algebra extend to a
/// bijective unital homomorphism into `target`.  Requires word data on
/// `source`.
bool is_algebra_isomorphism(const Algebra& source, const Algebra& target, const std::vector<Vector>& images);

}  // namespace superdim
