#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "fsing/fq.hpp"

namespace fsing {

using FqVector = std::vector<Fq::Elem>;
// Row-major square or rectangular matrix.
using FqMatrix = std::vector<FqVector>;

FqMatrix identity_matrix(std::size_t n);
FqMatrix mat_mul(const Fq& K, const FqMatrix& A, const FqMatrix& B);
FqVector mat_vec(const Fq& K, const FqMatrix& A, const FqVector& v);
// Entrywise a -> a^{p^k}.
FqMatrix mat_frob(const Fq& K, const FqMatrix& A, unsigned k = 1);
FqVector vec_frob(const Fq& K, const FqVector& v, unsigned k = 1);
Fq::Elem determinant(const Fq& K, FqMatrix A);
std::size_t rank(const Fq& K, FqMatrix A);
// A basis of the span of the given vectors (reduced echelon rows).
std::vector<FqVector> span_basis(const Fq& K, const std::vector<FqVector>& vectors);
// F_q-linear kernel of A.
std::vector<FqVector> kernel(const Fq& K, const FqMatrix& A);
// Coordinates of v in a basis (columns), or empty when v is outside the span.
std::optional<FqVector> coordinates(const Fq& K, const std::vector<FqVector>& basis, const FqVector& v);

// phi(v) = A v^{[p]}: column j of A is phi(e_j).
class PLinearMap {
 public:
  PLinearMap(FqPtr field, FqMatrix A);

  std::size_t dim() const { return A_.size(); }
  const FqPtr& field() const { return K_; }
  const FqMatrix& matrix() const { return A_; }
  FqVector apply(const FqVector& v) const;

 private:
  FqPtr K_;
  FqMatrix A_;
};

// Matrix of phi^m: A A^{[p]} ... A^{[p^{m-1}]}.
FqMatrix iterate(const PLinearMap& phi, unsigned m);

struct FittingDecomposition {
  std::vector<FqVector> ss_basis;
  std::vector<FqVector> nil_basis;
  std::size_t dim_ss() const { return ss_basis.size(); }
  std::size_t dim_nil() const { return nil_basis.size(); }
};

// V_ss is the column space of phi^n.  V_nil is the kernel of phi^n, taken as
// an F_p-linear map on F_p^{en}.
FittingDecomposition fitting(const PLinearMap& phi);

// V_nil computed the other way: Frobenius^{-n} applied to the F_q-kernel of
// the matrix of phi^n.
std::vector<FqVector> nil_part_via_frobenius(const PLinearMap& phi);

bool is_semisimple(const PLinearMap& phi);

struct FixedPoints {
  unsigned dim_fp = 0;  // dimension over F_p
  std::vector<FqVector> points;
};

// Enumerates F_q^n; throws TooLarge when q^n > 2^20.
FixedPoints fixed_points_bruteforce(const PLinearMap& phi);

// F_p-dimension of {v : phi(v) = v} from the F_p-linear kernel of phi - 1.
unsigned fixed_point_dimension(const PLinearMap& phi);

// Matrix of phi on a phi-stable subspace, in the given basis.
PLinearMap restrict_to(const PLinearMap& phi, const std::vector<FqVector>& basis);
// Induced map on V/W for a phi-stable W.
PLinearMap quotient_by(const PLinearMap& phi, const std::vector<FqVector>& basis);
PLinearMap direct_sum(const PLinearMap& a, const PLinearMap& b);
PLinearMap tensor_product(const PLinearMap& a, const PLinearMap& b);

// Root of the defining polynomial of `small` inside `big`, by enumeration.
Fq::Elem embedding_image_of_generator(const Fq& small, const Fq& big);
PLinearMap extend_scalars(const PLinearMap& phi, const FqPtr& big);

// s such that every fixed point of phi over the algebraic closure lies in
// F_{q^s}^n: the multiplicative order of phi^e on V_ss.
unsigned fixed_point_field_degree(const PLinearMap& phi);

// Text form: header "dim p e", then dim rows of dim entries; an entry is a
// comma-separated list of coefficients of 1, g, g^2, ...
PLinearMap parse_plinear(std::istream& in);

}  // namespace fsing
