#pragma once

#include <stdexcept>
#include <string>

#include "sfill/chain.hpp"

namespace sfill {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Text format:
//   field=<F2|Q> n=<n> d=<dim>
//   <coef> v0 ... vdim
// Blank lines and lines starting with '#' are ignored. Coefficients are
// integers or p/q; over F2 only odd integers are accepted. emit() writes the
// canonical form (colex order, F2 coefficient 1, Q coefficient p/q).
Chain parse_chain(const std::string& text);
std::string emit_chain(const Chain& c);

std::string format_rational(const Rational& q);  // always p/q

}  // namespace sfill
