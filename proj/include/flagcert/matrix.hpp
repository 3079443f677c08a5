#ifndef FLAGCERT_MATRIX_HPP
#define FLAGCERT_MATRIX_HPP

#include <memory>
#include <vector>

#include "flagcert/qsqrt2.hpp"

namespace flagcert {

// Dense matrix over Q[sqrt2], row-major.
class MatrixQ {
 public:
  MatrixQ() : rows_(0), cols_(0) {}
  MatrixQ(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  QSqrt2& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const QSqrt2& at(int r, int c) const {
    return a_[static_cast<size_t>(r) * cols_ + c];
  }

  bool operator==(const MatrixQ& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  int rows_, cols_;
  std::vector<QSqrt2> a_;
};

struct MatrixFactorization;

// Symmetric matrix over Q[sqrt2]. When a factorization m^T * core * m is
// attached, the factored form is the authoritative value.
class SymMatrixQ {
 public:
  SymMatrixQ() : dim_(0) {}
  explicit SymMatrixQ(int dim)
      : dim_(dim), a_(static_cast<size_t>(dim) * dim) {}

  static SymMatrixQ identity(int dim);

  int dim() const { return dim_; }
  const QSqrt2& at(int r, int c) const {
    return a_[static_cast<size_t>(r) * dim_ + c];
  }
  void set(int r, int c, const QSqrt2& v) {
    a_[static_cast<size_t>(r) * dim_ + c] = v;
    a_[static_cast<size_t>(c) * dim_ + r] = v;
  }

  bool has_factorization() const { return factored_ != nullptr; }
  const MatrixFactorization& factorization() const { return *factored_; }
  void attach_factorization(MatrixQ m, SymMatrixQ core);

  bool operator==(const SymMatrixQ& o) const;

 private:
  int dim_;
  std::vector<QSqrt2> a_;
  std::shared_ptr<const MatrixFactorization> factored_;
};

struct MatrixFactorization {
  MatrixQ m;       // r x d
  SymMatrixQ core; // r x r, expected positive definite
};

// Densifies m^T * core * m. Throws if no factorization is attached or the
// shapes do not line up.
SymMatrixQ factored_value(const SymMatrixQ& matrix);

struct PsdVerdict {
  bool psd = false;
  bool positive_definite = false;
  std::vector<QSqrt2> pivots;
  // nonempty iff !psd; then w^T A w < 0 exactly
  std::vector<QSqrt2> witness;
};

// Exact LDL^T with symmetric diagonal pivoting. A zero pivot whose row is not
// entirely zero disproves semidefiniteness via a 2x2 minor.
PsdVerdict psd_check(const SymMatrixQ& matrix);

// w^T A w, for checking witnesses.
QSqrt2 quadratic_value(const SymMatrixQ& matrix,
                       const std::vector<QSqrt2>& w);

}  // namespace flagcert

#endif
