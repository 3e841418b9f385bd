#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace roa {

/// A point in state space. Dimension is fixed per system.
using StateVector = Eigen::VectorXd;

/// Throws std::domain_error if any entry of `x` is NaN or infinite.
void RequireFinite(const StateVector& x, const char* what);

/// Dense symmetric matrix stored as its packed upper triangle.
///
/// Storage is row-major over the upper triangle: (0,0), (0,1), ..., (0,n-1),
/// (1,1), ... Reads of (i, j) and (j, i) hit the same slot, so the matrix is
/// symmetric by construction.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(int dim);

  static SymmetricMatrix Zero(int dim) { return SymmetricMatrix(dim); }
  static SymmetricMatrix Identity(int dim);
  /// Takes the upper triangle of `m`; the strict lower triangle is ignored.
  static SymmetricMatrix FromUpper(const Eigen::MatrixXd& m);
  /// Takes the lower triangle of `m`; the strict upper triangle is ignored.
  static SymmetricMatrix FromLower(const Eigen::MatrixXd& m);
  /// Requires `m` square and symmetric to within `tol` (absolute).
  static SymmetricMatrix FromDense(const Eigen::MatrixXd& m, double tol = 0.0);

  int dim() const { return dim_; }
  double operator()(int i, int j) const { return data_[Index(i, j)]; }
  void set(int i, int j, double value) { data_[Index(i, j)] = value; }
  void add(int i, int j, double value) { data_[Index(i, j)] += value; }

  Eigen::MatrixXd ToDense() const;
  double Trace() const;
  double FrobeniusNorm() const;
  bool AllFinite() const;

  std::span<const double> packed() const { return data_; }

  friend bool operator==(const SymmetricMatrix&, const SymmetricMatrix&) =
      default;

 private:
  std::size_t Index(int i, int j) const;

  int dim_{0};
  std::vector<double> data_;
};

/// Exponent table for the vector of all monomials of total degree <= d in n
/// variables, in graded lexicographic order (x1 > x2 > ... within a degree).
class MonomialBasis {
 public:
  MonomialBasis(int n, int d);
  /// Rebuilds a basis from a serialized exponent table. The table must equal
  /// the canonical graded-lex table for (n, d).
  static MonomialBasis FromExponents(int n, int d,
                                     std::vector<std::vector<int>> exponents);

  int num_vars() const { return n_; }
  int degree() const { return d_; }
  int size() const { return static_cast<int>(exponents_.size()); }
  const std::vector<std::vector<int>>& exponents() const { return exponents_; }

  /// Z_d(x): entry i is prod_j x_j^exponents[i][j].
  Eigen::VectorXd Evaluate(const StateVector& x) const;

  friend bool operator==(const MonomialBasis&, const MonomialBasis&) = default;

 private:
  int n_{0};
  int d_{0};
  std::vector<std::vector<int>> exponents_;
};

/// Free-function form of MonomialBasis::Evaluate.
Eigen::VectorXd MonomialVector(const MonomialBasis& basis, const StateVector& x);

/// Returns z^T P z.
double EvalQuadraticForm(const SymmetricMatrix& p, const Eigen::VectorXd& z);

struct SymmetricEigen {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;  // column k pairs with values(k)
};

/// Cyclic Jacobi eigendecomposition. Iterates until the off-diagonal
/// Frobenius mass falls below 1e-12 * ||P||_F (or 100 sweeps).
SymmetricEigen SymmetricEigenDecompose(const SymmetricMatrix& p);
Eigen::VectorXd SymmetricEigenvalues(const SymmetricMatrix& p);

/// Frobenius-nearest positive semidefinite matrix: negative eigenvalues are
/// clipped to zero and the eigenvectors kept.
SymmetricMatrix NearestPsd(const SymmetricMatrix& p);

struct PsdDiagnostics {
  bool is_psd{true};
  int negative_count{0};
  double min_eigenvalue{0.0};
  /// max(0, -min_eigenvalue)
  double worst_violation{0.0};
};

/// Summarizes a spectrum. Eigenvalues >= -tol count as nonnegative.
PsdDiagnostics DiagnosePsd(std::span<const double> eigenvalues,
                           double tol = 0.0);
PsdDiagnostics DiagnosePsd(const SymmetricMatrix& p, double tol = 0.0);

/// binomial(n, k) as an integer; throws on overflow of 64 bits.
long long Binomial(int n, int k);

}  // namespace roa
