#ifndef SEMIGRAPHS_CONSTRUCTORS_HPP
#define SEMIGRAPHS_CONSTRUCTORS_HPP

#include <string>
#include <vector>

#include "semigraphs/semigroup.hpp"

namespace semigraphs {

// M(m, r): the monogenic semigroup of index m and period r, on the m+r-1
// distinct powers of its generator.  Element id i is a^(i+1); products reduce
// by a^s = a^(m + (s-m) mod r) once s exceeds m+r-1.  Throws
// InvalidParameters unless m, r >= 1.
Semigroup make_monogenic(unsigned m, unsigned r);

// The cyclic group of order n, as M(1, n).
Semigroup make_cyclic_group(unsigned n);

// B(n): the Brandt semigroup over pairs (i, j) with 1 <= i, j <= n plus a
// zero.  Id 0 is the zero, pair (i, j) has id (i-1)*n + j, and
// (i, j)(k, l) = (i, l) when j = k, zero otherwise.
Semigroup make_brandt(unsigned n);

// Zmult(n): the residues 0..n-1 under multiplication mod n.
Semigroup make_zn_mult(unsigned n);

// The direct product A x B with componentwise products; pair (a, b) has id
// a*|B| + b.
Semigroup make_direct_product(const Semigroup& a, const Semigroup& b);

// The three-element semigroup {-1, 0, 1} under multiplication, ids 0, 1, 2
// in that value order.
Semigroup signs_semigroup();

// A parsed construct expression.  The grammar accepts a family name with
// parenthesized integer arguments, case-insensitively, combined with "x" for
// direct products: "M(3,2)", "B(2)", "Zmult(4)", "C(6)xC(2)", "signs".
class FamilySpec {
 public:
  // Throws InvalidParameters with a description of the first offending token.
  static FamilySpec parse(const std::string& text);

  Semigroup build() const;

  // Canonical rendering ("m(3,2) X c(2)" becomes "M(3,2)xC(2)").
  const std::string& str() const { return text_; }

 private:
  enum class Family { Monogenic, Cyclic, Brandt, ZnMult, Signs };
  struct Atom {
    Family family;
    std::vector<unsigned> args;
  };

  std::vector<Atom> factors_;
  std::string text_;
};

// Builds a semigroup from a construct expression, or, when the text is not a
// construct but names a readable file, from that Cayley-table JSON file.
Semigroup build_construct(const std::string& text);

}  // namespace semigraphs

#endif  // SEMIGRAPHS_CONSTRUCTORS_HPP
