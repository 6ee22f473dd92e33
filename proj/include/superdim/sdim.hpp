#pragma once

#include <string>
#include <vector>

#include "superdim/report.hpp"
#include "superdim/smodule.hpp"

namespace superdim {

/// n|l, or the distinguished value of the zero module.
struct SuperDimension {
  bool zero_module = false;
  int even = 0;
  int odd = 0;

  static SuperDimension empty() { return {true, 0, 0}; }
  std::string to_string() const;
  friend bool operator==(const SuperDimension&, const SuperDimension&) = default;
};

/// {"even": n, "odd": l}, or {"zero_module": true}.
Json to_json(const SuperDimension& s);

/// dim R_1^l M for l = 0, 1, ... up to and including the first zero.
/// Throws std::domain_error if the odd part does not act nilpotently.
std::vector<Index> odd_power_chain(const SuperModule& m);

/// Largest l with R_1^l M != 0, or -1 for the zero module.
int odd_dimension(const SuperModule& m);
SuperDimension sdim(const SuperModule& m);

struct OddParameterSystem {
  std::vector<std::string> names;
  std::vector<Vector> elements;
  /// Index of a module basis vector with y^L m != 0, and its image.
  Index witness_index = -1;
  Vector witness_image;
};

enum class OddCandidates { generators, basis };

/// Odd elements that subsets are drawn from: the odd algebra generators, or
/// all odd basis elements.
std::vector<NamedElement> odd_candidates(const Algebra& a, OddCandidates which = OddCandidates::generators);

/// All size-l subsets, in lexicographic order, whose product acts nonzero.
std::vector<OddParameterSystem> odd_parameter_systems(const SuperModule& m, int l,
                                                      OddCandidates which = OddCandidates::generators);
/// Largest l admitting a system among the candidates (-1 for the zero module).
int odd_dimension_by_subsets(const SuperModule& m, OddCandidates which = OddCandidates::generators);

/// Product y_1 ... y_t (unit for the empty list).
Vector product_of(const Algebra& a, const std::vector<Vector>& ys);

/// sdim_1(M/IM) = sdim_1(M) - t for I = sum R y_i.  Throws
/// std::invalid_argument when ys is not an odd regular sequence and
/// std::domain_error for a nonempty sequence on the zero module.
bool is_extendable_to_longest(const std::vector<Vector>& ys, const SuperModule& m);

/// Pass/fail clauses for the factoring statements about an odd regular
/// sequence, with the computed dimensions recorded as values.
Report verify_factoring(const SuperModule& m, const std::vector<Vector>& ys);

}  // namespace superdim
