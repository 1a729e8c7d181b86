#pragma once

#include <string>
#include <vector>

#include "conormal/groebner.hpp"

namespace conormal {

/// (HF(0), ..., HF(s)) with HF(s) > 0 and zero beyond.
struct HilbertFunction {
  std::vector<int> values;

  int at(int i) const { return i >= 0 && i < static_cast<int>(values.size()) ? values[i] : 0; }
  int length() const;
  int socle_degree() const { return static_cast<int>(values.size()) - 1; }
  friend bool operator==(const HilbertFunction&, const HilbertFunction&) = default;
};

struct SocleElement {
  Polynomial representative;  // normal form, a combination of standard monomials
  int degree;                 // initial degree w.r.t. the maximal-ideal filtration
};

struct InvariantReport {
  HilbertFunction hf;
  int length = 0;
  int embdim = 0;  // c = HF(1)
  int socle_degree = 0;
  int type = 0;
  bool gorenstein = false;
  bool level = false;
  bool stretched = false;
  bool short_algebra = false;
  std::vector<int> socle_degrees;  // sorted ascending
};

/// Hilbert function of the local Artinian quotient (graded case: standard
/// monomials per degree). Throws NotZeroDimensional, or Error when an
/// inhomogeneous quotient is not supported at the origin alone.
HilbertFunction hilbert_function(const GroebnerBasis& gb);
int length(const GroebnerBasis& gb);
/// Same, always through dim m^d A - dim m^{d+1} A on the multiplication matrices.
HilbertFunction hilbert_function_by_filtration(const GroebnerBasis& gb);

/// Socle basis adapted to the filtration by powers of the maximal ideal,
/// ordered by decreasing degree.
std::vector<SocleElement> socle(const GroebnerBasis& gb);

/// Flags that depend only on numbers.
InvariantReport classify(const HilbertFunction& hf, std::vector<int> socle_degrees);
InvariantReport invariant_report(const GroebnerBasis& gb);

/// Basis of (I + f) for a socle element f not in I; checks that the Hilbert
/// function drops by exactly one at the initial degree of f.
GroebnerBasis quotient_by_socle_element(const GroebnerBasis& gb, const Polynomial& f);

struct LinearElimination {
  RingPtr ring;                         // remaining variables
  std::vector<Polynomial> generators;  // nonzero images
  int eliminated = 0;                  // dimension of the space of linear forms in the ideal
  /// Throws when nothing nonzero is left.
  Ideal ideal() const { return Ideal(ring, generators); }
};

/// Removes the linear forms of a homogeneous ideal by substitution.
LinearElimination eliminate_linear_forms(const Ideal& ideal);

/// Stable "key: value" lines.
std::string to_key_value(const InvariantReport& report);

}  // namespace conormal
