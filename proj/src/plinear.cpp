#include "fsing/plinear.hpp"

#include <istream>
#include <optional>
#include <sstream>

namespace fsing {

FqMatrix identity_matrix(std::size_t n) {
  FqMatrix I(n, FqVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) I[i][i] = 1;
  return I;
}

FqMatrix mat_mul(const Fq& K, const FqMatrix& A, const FqMatrix& B) {
  if (A.empty()) return {};
  const std::size_t n = A.size(), m = B.size(), k = B.empty() ? 0 : B[0].size();
  if (A[0].size() != m) throw InvalidArgument("matrix shapes do not match");
  FqMatrix C(n, FqVector(k, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < m; ++l) {
      if (!A[i][l]) continue;
      for (std::size_t j = 0; j < k; ++j) C[i][j] = K.add(C[i][j], K.mul(A[i][l], B[l][j]));
    }
  return C;
}

FqVector mat_vec(const Fq& K, const FqMatrix& A, const FqVector& v) {
  FqVector r(A.size(), 0);
  for (std::size_t i = 0; i < A.size(); ++i) {
    if (A[i].size() != v.size()) throw InvalidArgument("matrix and vector shapes do not match");
    for (std::size_t j = 0; j < v.size(); ++j) r[i] = K.add(r[i], K.mul(A[i][j], v[j]));
  }
  return r;
}

FqVector vec_frob(const Fq& K, const FqVector& v, unsigned k) {
  FqVector r = v;
  for (auto& x : r)
    for (unsigned i = 0; i < k; ++i) x = K.frob(x);
  return r;
}

FqMatrix mat_frob(const Fq& K, const FqMatrix& A, unsigned k) {
  FqMatrix r = A;
  for (auto& row : r) row = vec_frob(K, row, k);
  return r;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(const Fq& K, FqMatrix& A) {
  std::vector<std::size_t> pivots;
  if (A.empty()) return pivots;
  const std::size_t rows = A.size(), cols = A[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && A[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(A[r], A[piv]);
    Fq::Elem inv = K.inv(A[r][c]);
    for (auto& x : A[r]) x = K.mul(x, inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || A[i][c] == 0) continue;
      Fq::Elem f = A[i][c];
      for (std::size_t j = 0; j < cols; ++j) A[i][j] = K.sub(A[i][j], K.mul(f, A[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// ---- F_p-linear views --------------------------------------------------

using FpMatrix = std::vector<std::vector<u64>>;

std::vector<u64> flatten(const Fq& K, const FqVector& v) {
  std::vector<u64> out;
  for (auto x : v) {
    auto c = K.coeffs(x);
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

FqVector unflatten(const Fq& K, const std::vector<u64>& w) {
  FqVector v(w.size() / K.e());
  for (std::size_t i = 0; i < v.size(); ++i) {
    upoly::UPoly c(w.begin() + static_cast<long>(i * K.e()), w.begin() + static_cast<long>((i + 1) * K.e()));
    v[i] = K.from_coeffs(c);
  }
  return v;
}

// Matrix over F_p of an additive map F_q^n -> F_q^n.
template <class Map>
FpMatrix fp_matrix(const Fq& K, std::size_t n, Map map) {
  const std::size_t N = n * K.e();
  FpMatrix M(N, std::vector<u64>(N, 0));
  for (std::size_t j = 0; j < n; ++j) {
    for (unsigned k = 0; k < K.e(); ++k) {
      FqVector v(n, 0);
      upoly::UPoly c(K.e(), 0);
      c[k] = 1;
      v[j] = K.from_coeffs(c);
      auto img = flatten(K, map(v));
      for (std::size_t i = 0; i < N; ++i) M[i][j * K.e() + k] = img[i];
    }
  }
  return M;
}

std::vector<std::vector<u64>> fp_kernel(const PrimeField& F, FpMatrix A) {
  if (A.empty()) return {};
  const std::size_t rows = A.size(), cols = A[0].size();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && A[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(A[r], A[piv]);
    u64 inv = F.inv(A[r][c]);
    for (auto& x : A[r]) x = F.mul(x, inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || A[i][c] == 0) continue;
      u64 f = A[i][c];
      for (std::size_t j = 0; j < cols; ++j) A[i][j] = F.sub(A[i][j], F.mul(f, A[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<u64>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<u64> v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = F.neg(A[i][free]);
    basis.push_back(v);
  }
  return basis;
}

std::vector<FqVector> columns(const FqMatrix& A) {
  std::vector<FqVector> cols;
  if (A.empty()) return cols;
  for (std::size_t j = 0; j < A[0].size(); ++j) {
    FqVector c(A.size());
    for (std::size_t i = 0; i < A.size(); ++i) c[i] = A[i][j];
    cols.push_back(c);
  }
  return cols;
}

FqMatrix from_columns(const std::vector<FqVector>& cols, std::size_t rows) {
  FqMatrix A(rows, FqVector(cols.size(), 0));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) A[i][j] = cols[j][i];
  return A;
}

}  // namespace

Fq::Elem determinant(const Fq& K, FqMatrix A) {
  const std::size_t n = A.size();
  Fq::Elem det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && A[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(A[piv], A[c]);
      det = K.neg(det);
    }
    det = K.mul(det, A[c][c]);
    Fq::Elem inv = K.inv(A[c][c]);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (A[i][c] == 0) continue;
      Fq::Elem f = K.mul(A[i][c], inv);
      for (std::size_t j = c; j < n; ++j) A[i][j] = K.sub(A[i][j], K.mul(f, A[c][j]));
    }
  }
  return det;
}

std::size_t rank(const Fq& K, FqMatrix A) { return rref(K, A).size(); }

std::vector<FqVector> span_basis(const Fq& K, const std::vector<FqVector>& vectors) {
  FqMatrix A = vectors;
  auto piv = rref(K, A);
  A.resize(piv.size());
  return A;
}

std::vector<FqVector> kernel(const Fq& K, const FqMatrix& A0) {
  FqMatrix A = A0;
  if (A.empty()) return {};
  const std::size_t cols = A[0].size();
  auto pivots = rref(K, A);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<FqVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    FqVector v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = K.neg(A[i][free]);
    basis.push_back(v);
  }
  return basis;
}

std::optional<FqVector> coordinates(const Fq& K, const std::vector<FqVector>& basis, const FqVector& v) {
  const std::size_t n = v.size(), d = basis.size();
  FqMatrix aug(n, FqVector(d + 1, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < d; ++j) aug[i][j] = basis[j][i];
    aug[i][d] = v[i];
  }
  auto piv = rref(K, aug);
  if (!piv.empty() && piv.back() == d) return std::nullopt;
  if (piv.size() != d) throw InvalidArgument("basis vectors are dependent");
  FqVector c(d, 0);
  for (std::size_t i = 0; i < piv.size(); ++i) c[piv[i]] = aug[i][d];
  return c;
}

PLinearMap::PLinearMap(FqPtr field, FqMatrix A) : K_(std::move(field)), A_(std::move(A)) {
  if (A_.empty()) throw InvalidArgument("p-linear map of dimension 0");
  for (const auto& row : A_) {
    if (row.size() != A_.size()) throw InvalidArgument("p-linear map matrix must be square");
    for (auto x : row)
      if (x >= K_->q()) throw InvalidArgument("matrix entry outside F_q");
  }
}

FqVector PLinearMap::apply(const FqVector& v) const { return mat_vec(*K_, A_, vec_frob(*K_, v)); }

FqMatrix iterate(const PLinearMap& phi, unsigned m) {
  if (m == 0) throw InvalidArgument("iterate needs m >= 1");
  const Fq& K = *phi.field();
  // phi^m(v) = A (A (...)^{[p]})^{[p]} = A A^{[p]} ... A^{[p^{m-1}]} v^{[p^m]}
  FqMatrix B = phi.matrix();
  FqMatrix twist = phi.matrix();
  for (unsigned k = 1; k < m; ++k) {
    twist = mat_frob(K, twist);
    B = mat_mul(K, B, twist);
  }
  return B;
}

FittingDecomposition fitting(const PLinearMap& phi) {
  const Fq& K = *phi.field();
  const std::size_t n = phi.dim();
  const unsigned steps = static_cast<unsigned>(n);
  FqMatrix B = iterate(phi, steps);
  FittingDecomposition out;
  out.ss_basis = span_basis(K, columns(B));
  auto M = fp_matrix(K, n, [&](const FqVector& v) { return mat_vec(K, B, vec_frob(K, v, steps)); });
  std::vector<FqVector> ker;
  for (const auto& w : fp_kernel(K.prime_field(), M)) ker.push_back(unflatten(K, w));
  out.nil_basis = span_basis(K, ker);
  return out;
}

std::vector<FqVector> nil_part_via_frobenius(const PLinearMap& phi) {
  const Fq& K = *phi.field();
  const unsigned steps = static_cast<unsigned>(phi.dim());
  std::vector<FqVector> pulled;
  for (const auto& v : kernel(K, iterate(phi, steps))) {
    FqVector w = v;
    for (auto& x : w) x = K.frob_inverse(x, steps);
    pulled.push_back(w);
  }
  return span_basis(K, pulled);
}

bool is_semisimple(const PLinearMap& phi) { return determinant(*phi.field(), phi.matrix()) != 0; }

FixedPoints fixed_points_bruteforce(const PLinearMap& phi) {
  const Fq& K = *phi.field();
  const std::size_t n = phi.dim();
  long double total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= static_cast<long double>(K.q());
  if (total > static_cast<long double>(1u << 20)) throw TooLarge("q^n exceeds 2^20");
  FixedPoints out;
  FqVector v(n, 0);
  while (true) {
    if (phi.apply(v) == v) out.points.push_back(v);
    std::size_t j = 0;
    while (j < n && ++v[j] == K.q()) v[j++] = 0;
    if (j == n) break;
  }
  std::size_t count = out.points.size();
  while (count > 1) {
    if (count % K.p() != 0) throw InvariantBreach("fixed set size is not a power of p");
    count /= K.p();
    ++out.dim_fp;
  }
  return out;
}

unsigned fixed_point_dimension(const PLinearMap& phi) {
  const Fq& K = *phi.field();
  auto M = fp_matrix(K, phi.dim(), [&](const FqVector& v) {
    FqVector w = phi.apply(v);
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = K.sub(w[i], v[i]);
    return w;
  });
  return static_cast<unsigned>(fp_kernel(K.prime_field(), M).size());
}

PLinearMap restrict_to(const PLinearMap& phi, const std::vector<FqVector>& basis) {
  const Fq& K = *phi.field();
  if (basis.empty()) throw InvalidArgument("restriction to the zero subspace");
  std::vector<FqVector> cols;
  for (const auto& w : basis) {
    auto c = coordinates(K, basis, phi.apply(w));
    if (!c) throw InvalidArgument("subspace is not phi-stable");
    cols.push_back(*c);
  }
  return PLinearMap(phi.field(), from_columns(cols, basis.size()));
}

PLinearMap quotient_by(const PLinearMap& phi, const std::vector<FqVector>& basis) {
  const Fq& K = *phi.field();
  const std::size_t n = phi.dim();
  std::vector<FqVector> full = basis;
  for (std::size_t i = 0; i < n && full.size() < n; ++i) {
    FqVector e(n, 0);
    e[i] = 1;
    auto trial = full;
    trial.push_back(e);
    if (span_basis(K, trial).size() == trial.size()) full = trial;
  }
  const std::size_t d = basis.size();
  if (d == n) throw InvalidArgument("quotient by the whole space");
  for (const auto& w : basis) {
    auto c = coordinates(K, basis, phi.apply(w));
    if (!c) throw InvalidArgument("subspace is not phi-stable");
  }
  std::vector<FqVector> cols;
  for (std::size_t j = d; j < n; ++j) {
    auto c = *coordinates(K, full, phi.apply(full[j]));
    cols.emplace_back(c.begin() + static_cast<long>(d), c.end());
  }
  return PLinearMap(phi.field(), from_columns(cols, n - d));
}

PLinearMap direct_sum(const PLinearMap& a, const PLinearMap& b) {
  if (!a.field()->same(*b.field())) throw DomainMismatch("direct sum over different fields");
  const std::size_t n = a.dim(), m = b.dim();
  FqMatrix C(n + m, FqVector(n + m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) C[i][j] = a.matrix()[i][j];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) C[n + i][n + j] = b.matrix()[i][j];
  return PLinearMap(a.field(), C);
}

PLinearMap tensor_product(const PLinearMap& a, const PLinearMap& b) {
  if (!a.field()->same(*b.field())) throw DomainMismatch("tensor product over different fields");
  const Fq& K = *a.field();
  const std::size_t n = a.dim(), m = b.dim();
  FqMatrix C(n * m, FqVector(n * m, 0));
  for (std::size_t i1 = 0; i1 < n; ++i1)
    for (std::size_t j1 = 0; j1 < n; ++j1)
      for (std::size_t i2 = 0; i2 < m; ++i2)
        for (std::size_t j2 = 0; j2 < m; ++j2)
          C[i1 * m + i2][j1 * m + j2] = K.mul(a.matrix()[i1][j1], b.matrix()[i2][j2]);
  return PLinearMap(a.field(), C);
}

Fq::Elem embedding_image_of_generator(const Fq& small, const Fq& big) {
  if (small.p() != big.p() || big.e() % small.e() != 0) throw InvalidArgument("no embedding between these fields");
  const auto& m = small.modulus();
  for (Fq::Elem beta = 0; beta < big.q(); ++beta) {
    Fq::Elem acc = 0;
    for (std::size_t k = m.size(); k-- > 0;) acc = big.add(big.mul(acc, beta), m[k]);
    if (acc == 0) return beta;
  }
  throw InvariantBreach("defining polynomial has no root in the extension");
}

PLinearMap extend_scalars(const PLinearMap& phi, const FqPtr& big) {
  const Fq& K = *phi.field();
  Fq::Elem beta = embedding_image_of_generator(K, *big);
  auto embed = [&](Fq::Elem a) {
    auto c = K.coeffs(a);
    Fq::Elem acc = 0;
    for (std::size_t k = c.size(); k-- > 0;) acc = big->add(big->mul(acc, beta), c[k]);
    return acc;
  };
  FqMatrix A = phi.matrix();
  for (auto& row : A)
    for (auto& x : row) x = embed(x);
  return PLinearMap(big, A);
}

unsigned fixed_point_field_degree(const PLinearMap& phi) {
  auto dec = fitting(phi);
  if (dec.ss_basis.empty()) return 1;
  const Fq& K = *phi.field();
  PLinearMap ss = restrict_to(phi, dec.ss_basis);
  FqMatrix B = iterate(ss, K.e());
  FqMatrix I = identity_matrix(ss.dim());
  FqMatrix X = B;
  for (unsigned s = 1; s < 1000000; ++s) {
    if (X == I) return s;
    X = mat_mul(K, X, B);
  }
  throw ResourceExceeded("order of the semisimple part is too large");
}

PLinearMap parse_plinear(std::istream& in) {
  std::size_t dim = 0;
  u64 p = 0;
  unsigned e = 0;
  if (!(in >> dim >> p >> e)) throw ParseError("expected header 'dim p e'", 0);
  auto K = Fq::make(p, e);
  FqMatrix A(dim, FqVector(dim, 0));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      std::string tok;
      if (!(in >> tok)) throw ParseError("matrix has too few entries", i * dim + j);
      upoly::UPoly c;
      std::istringstream ss(tok);
      for (std::string part; std::getline(ss, part, ',');) {
        try {
          long long v = std::stoll(part);
          c.push_back(K->prime_field().from_int(v));
        } catch (const std::exception&) {
          throw ParseError("bad coefficient '" + part + "'", i * dim + j);
        }
      }
      A[i][j] = K->from_coeffs(c);
    }
  }
  return PLinearMap(K, A);
}

}  // namespace fsing
