#ifndef WLP_ALGEBRA_HPP
#define WLP_ALGEBRA_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "wlp/complex.hpp"
#include "wlp/matrix.hpp"

namespace wlp {

// The graded Artinian algebra K[x_1..x_n] / (squares of variables + the
// Stanley-Reisner ideal of the complex). The degree-i component has the
// (i-1)-faces as monomial basis, so dim A_i = f_{i-1}; degree 0 is K.
// Everything here is characteristic-independent: matrices carry exact
// integer entries and are reduced modulo p at rank time.
class GradedAlgebra {
public:
  explicit GradedAlgebra(SimplicialComplex complex);

  const SimplicialComplex& complex() const { return complex_; }
  int variable_count() const { return complex_.ground_set_size(); }

  /// t = dim(complex) + 1; A_t is the last nonzero component.
  int top_degree() const { return top_; }

  /// dim A_0 .. dim A_t.
  const std::vector<std::int64_t>& hilbert() const { return hilbert_; }

  /// Monomial basis of A_degree as faces, lex-sorted. basis(0) = {empty}.
  const std::vector<Face>& basis(int degree) const;

  /// Matrix of multiplication by the sum of variables, A_i -> A_{i+1}.
  /// Rows are indexed by the degree-(i+1) basis, columns by the degree-i
  /// basis; entries are 0/1 incidences. Requires 0 <= i < top_degree().
  IntegerMatrix mult_matrix(int i) const;

  /// Matrix of multiplication by (sum of variables)^r, A_i -> A_{i+r}.
  /// Entry r! where the column face extends to the row face by r vertices,
  /// else 0. Requires i >= 0, r >= 1, i + r <= top_degree(), and r <= 12
  /// (factorial must fit the int32 entry type).
  IntegerMatrix power_mult_matrix(int i, int r) const;

  /// Monomial label for a basis face under the graph's vertex names,
  /// e.g. "x1*y2"; degree 0 gives "1".
  std::string monomial_label(Face f, const std::vector<std::string>& names) const;

private:
  SimplicialComplex complex_;
  int top_ = 0;
  std::vector<std::vector<Face>> bases_;  // bases_[i] = degree-i basis
  std::vector<std::int64_t> hilbert_;
};

inline GradedAlgebra build_algebra(SimplicialComplex complex) {
  return GradedAlgebra(std::move(complex));
}

struct SocleReport {
  std::vector<std::int64_t> socle_dims;  // per degree 0..t
  bool is_level = false;                 // socle concentrated in degree t
  int socle_degree = 0;
};

// A monomial lies in the socle iff every one-vertex extension of its face
// is a non-face, so the socle of these algebras is combinatorial and does
// not depend on the characteristic.
SocleReport socle(const GradedAlgebra& algebra);

}  // namespace wlp

#endif  // WLP_ALGEBRA_HPP
