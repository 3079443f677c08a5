#include "flagcert/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace flagcert {

SymMatrixQ SymMatrixQ::identity(int dim) {
  SymMatrixQ m(dim);
  for (int i = 0; i < dim; ++i) m.set(i, i, QSqrt2(1));
  return m;
}

void SymMatrixQ::attach_factorization(MatrixQ m, SymMatrixQ core) {
  if (m.rows() != core.dim() || m.cols() != dim_)
    throw std::invalid_argument("factorization shape mismatch");
  factored_ = std::make_shared<MatrixFactorization>(
      MatrixFactorization{std::move(m), std::move(core)});
}

bool SymMatrixQ::operator==(const SymMatrixQ& o) const {
  if (dim_ != o.dim_ || a_ != o.a_) return false;
  if ((factored_ == nullptr) != (o.factored_ == nullptr)) return false;
  if (factored_ == nullptr) return true;
  return factored_->m == o.factored_->m &&
         factored_->core == o.factored_->core;
}

SymMatrixQ factored_value(const SymMatrixQ& matrix) {
  if (!matrix.has_factorization())
    throw std::invalid_argument("no factorization attached");
  const MatrixQ& m = matrix.factorization().m;
  const SymMatrixQ& core = matrix.factorization().core;
  if (m.rows() != core.dim() || m.cols() != matrix.dim())
    throw std::invalid_argument("factorization shape mismatch");
  const int r = m.rows(), d = m.cols();
  // cm = core * m
  MatrixQ cm(r, d);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < d; ++j) {
      QSqrt2 s;
      for (int k = 0; k < r; ++k) s += core.at(i, k) * m.at(k, j);
      cm.at(i, j) = s;
    }
  SymMatrixQ out(d);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      QSqrt2 s;
      for (int k = 0; k < r; ++k) s += m.at(k, i) * cm.at(k, j);
      out.set(i, j, s);
    }
  return out;
}

namespace {

// Working state of the congruence A_cur = W A W^T; witnesses found in the
// reduced coordinates are pulled back through W^T.
struct Elimination {
  int d;
  std::vector<QSqrt2> a;  // current symmetric matrix, full storage
  std::vector<QSqrt2> w;  // congruence transform

  QSqrt2& A(int i, int j) { return a[static_cast<size_t>(i) * d + j]; }
  QSqrt2& W(int i, int j) { return w[static_cast<size_t>(i) * d + j]; }

  std::vector<QSqrt2> pull_back(const std::vector<QSqrt2>& v) {
    std::vector<QSqrt2> out(d);
    for (int j = 0; j < d; ++j) {
      QSqrt2 s;
      for (int i = 0; i < d; ++i)
        if (!v[i].is_zero()) s += v[i] * W(i, j);
      out[j] = s;
    }
    return out;
  }

  void swap_rows_cols(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < d; ++k) std::swap(A(i, k), A(j, k));
    for (int k = 0; k < d; ++k) std::swap(A(k, i), A(k, j));
    for (int k = 0; k < d; ++k) std::swap(W(i, k), W(j, k));
  }
};

}  // namespace

PsdVerdict psd_check(const SymMatrixQ& matrix) {
  const int d = matrix.dim();
  Elimination e;
  e.d = d;
  e.a.resize(static_cast<size_t>(d) * d);
  e.w.resize(static_cast<size_t>(d) * d);
  for (int i = 0; i < d; ++i) {
    e.W(i, i) = QSqrt2(1);
    for (int j = 0; j < d; ++j) e.A(i, j) = matrix.at(i, j);
  }

  PsdVerdict verdict;
  int k = 0;
  for (; k < d; ++k) {
    // largest remaining diagonal entry as pivot
    int best = k;
    for (int i = k + 1; i < d; ++i)
      if (e.A(i, i) > e.A(best, best)) best = i;

    int diag_sign = e.A(best, best).sign();
    if (diag_sign < 0) {
      std::vector<QSqrt2> v(d);
      v[best] = QSqrt2(1);
      verdict.witness = e.pull_back(v);
      return verdict;
    }
    if (diag_sign == 0) {
      // the largest remaining diagonal is zero; a negative diagonal or a
      // nonzero off-diagonal entry in the trailing block is a witness
      for (int i = k; i < d; ++i) {
        if (e.A(i, i).sign() < 0) {
          std::vector<QSqrt2> v(d);
          v[i] = QSqrt2(1);
          verdict.witness = e.pull_back(v);
          return verdict;
        }
      }
      for (int i = k; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
          if (!e.A(i, j).is_zero()) {
            std::vector<QSqrt2> v(d);
            v[i] = QSqrt2(1);
            v[j] = e.A(i, j).sign() > 0 ? QSqrt2(-1) : QSqrt2(1);
            verdict.witness = e.pull_back(v);
            return verdict;
          }
        }
      break;  // trailing block is zero: done, rank k
    }

    e.swap_rows_cols(k, best);
    QSqrt2 pivot = e.A(k, k);
    verdict.pivots.push_back(pivot);

    std::vector<QSqrt2> pivot_row(d);
    for (int j = k + 1; j < d; ++j) pivot_row[j] = e.A(k, j);
    for (int i = k + 1; i < d; ++i) {
      if (e.A(i, k).is_zero()) continue;
      QSqrt2 factor = e.A(i, k) / pivot;
      for (int j = k + 1; j < d; ++j) e.A(i, j) -= factor * pivot_row[j];
      for (int j = 0; j < d; ++j) e.W(i, j) -= factor * e.W(k, j);
    }
    for (int j = k + 1; j < d; ++j) {
      e.A(k, j) = QSqrt2();
      e.A(j, k) = QSqrt2();
    }
  }

  verdict.psd = true;
  verdict.positive_definite = (k == d);
  return verdict;
}

QSqrt2 quadratic_value(const SymMatrixQ& matrix,
                       const std::vector<QSqrt2>& w) {
  if (static_cast<int>(w.size()) != matrix.dim())
    throw std::invalid_argument("witness dimension mismatch");
  QSqrt2 total;
  for (int i = 0; i < matrix.dim(); ++i) {
    if (w[i].is_zero()) continue;
    for (int j = 0; j < matrix.dim(); ++j) {
      if (w[j].is_zero()) continue;
      total += w[i] * matrix.at(i, j) * w[j];
    }
  }
  return total;
}

}  // namespace flagcert
