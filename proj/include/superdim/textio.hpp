#pragma once

#include <stdexcept>
#include <string>

#include "superdim/hochschild.hpp"
#include "superdim/report.hpp"
#include "superdim/sdim.hpp"
#include "superdim/smodule.hpp"

namespace superdim {

/// 1-based position of a token in the input.
struct SourceSpan {
  int line = 1;
  int column = 1;
  int length = 1;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, SourceSpan span);
  const SourceSpan& span() const { return span_; }
  /// "line:column: message".
  const std::string& bare_message() const { return message_; }

 private:
  std::string message_;
  SourceSpan span_;
};

/// Line-oriented presentation format:
///
///   algebra NAME over Q | F<p>
///   flavor supercommutative | associative
///   even x y(2,0)
///   odd z1 z2
///   cap 3
///   relations
///   x^2 - 1/2*x*y
///   end
///
/// `#` starts a comment.  Omitted bidegrees are (1,0) for even and (0,1) for
/// odd generators.
Presentation parse_presentation(const std::string& text);
std::string print_presentation(const Presentation& p);

/// Polynomial over the generators of p.
SuperPolynomial parse_polynomial(const std::string& text, const Presentation& p);

/// Module format over a compiled algebra:
///
///   module NAME
///   basis
///   m1 : even
///   "Pi(x)" : odd
///   end
///   action
///   z1 m1 -> 2*m2 - "Pi(x)"
///   end
///
/// or the single line `module regular`.  Omitted images are zero.
SuperModule parse_module(const std::string& text, const AlgebraPtr& a);
/// Prints generator actions; requires word data on the algebra.
std::string print_module(const SuperModule& m, const std::string& name = "M");

/// Cochain A^{n+1} -> A with values given by polynomials:
///
///   cochain pi
///   n 1
///   parity odd
///   skew
///   Y1*Y2, Y3 -> t123
///   end
///
/// Arguments must reduce to basis elements.  `skew` (n = 1 only) fills in
/// f(c, b) = (-1)^{|b||c|} f(b, c) for every listed pair.
Cochain parse_cochain(const std::string& text, const Algebra& a);
std::string print_cochain(const Cochain& f, const Algebra& a, const std::string& name = "pi");

/// Pretty-printed JSON with keys in sorted order and a trailing newline.
std::string emit_report(const Json& value);

}  // namespace superdim
