#include "nbc/spectral.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "nbc/error.hpp"
#include "nbc/rng.hpp"

namespace nbc {

void AdjacencyOperator::apply(std::span<const double> in, std::span<double> out) const {
  const Graph& g = *graph_;
  for (NodeId i = 0; i < g.node_count(); ++i) {
    double acc = 0.0;
    for (const NodeId j : g.neighbors(i)) acc += in[j];
    out[i] = acc;
  }
}

void IharaBassOperator::apply(std::span<const double> in, std::span<double> out) const {
  const Graph& g = *graph_;
  const std::size_t n = g.node_count();
  const auto head = in.first(n);
  const auto tail = in.subspan(n, n);
  for (NodeId i = 0; i < n; ++i) {
    double acc = 0.0;
    for (const NodeId j : g.neighbors(i)) acc += head[j];
    out[i] = acc + (1.0 - static_cast<double>(g.degree(i))) * tail[i];
    out[n + i] = head[i];
  }
}

PatternMatrixOperator::PatternMatrixOperator(std::vector<std::uint64_t> row_offsets,
                                             std::vector<std::uint64_t> columns)
    : row_offsets_(std::move(row_offsets)), columns_(std::move(columns)) {
  if (row_offsets_.empty() || row_offsets_.front() != 0 ||
      row_offsets_.back() != columns_.size())
    throw Error("pattern matrix: malformed row offsets");
  const std::size_t n = row_offsets_.size() - 1;
  for (const auto c : columns_)
    if (c >= n) throw Error("pattern matrix: column index out of range");
}

void PatternMatrixOperator::apply(std::span<const double> in, std::span<double> out) const {
  const std::size_t n = dimension();
  for (std::size_t r = 0; r < n; ++r) {
    double acc = 0.0;
    for (auto p = row_offsets_[r]; p < row_offsets_[r + 1]; ++p) acc += in[columns_[p]];
    out[r] = acc;
  }
}

bool DenseMatrix::is_symmetric() const {
  for (std::size_t r = 0; r < size; ++r)
    for (std::size_t c = r + 1; c < size; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

void DenseOperator::apply(std::span<const double> in, std::span<double> out) const {
  const std::size_t n = matrix_->size;
  for (std::size_t r = 0; r < n; ++r) {
    double acc = 0.0;
    for (std::size_t c = 0; c < n; ++c) acc += (*matrix_)(r, c) * in[c];
    out[r] = acc;
  }
}

DenseMatrix to_dense(const LinearOperator& op) {
  const std::size_t n = op.dimension();
  if (n > kDenseLimit)
    throw SizeLimitError("dense matrix of dimension " + std::to_string(n) +
                         " exceeds the limit of " + std::to_string(kDenseLimit));
  DenseMatrix m(n);
  std::vector<double> unit(n, 0.0);
  std::vector<double> column(n);
  for (std::size_t c = 0; c < n; ++c) {
    unit[c] = 1.0;
    op.apply(unit, column);
    unit[c] = 0.0;
    for (std::size_t r = 0; r < n; ++r) m(r, c) = column[r];
  }
  return m;
}

double dot(std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

void fix_sign(std::span<double> v) {
  if (v.empty()) return;
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (std::abs(v[i]) > std::abs(v[best])) best = i;
  if (v[best] < 0.0)
    for (double& x : v) x = -x;
}

double eigen_residual(const LinearOperator& op, double lambda, std::span<const double> v) {
  std::vector<double> w(op.dimension());
  op.apply(v, w);
  double acc = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double r = w[i] - lambda * v[i];
    acc += r * r;
  }
  return std::sqrt(acc);
}

EigenResult power_iteration(const LinearOperator& op, const PowerIterationOptions& options) {
  const std::size_t n = op.dimension();
  if (n == 0) throw ParameterError("power_iteration: operator has dimension 0");
  if (!(options.tol > 0.0)) throw ParameterError("power_iteration: tol must be positive");

  std::vector<double> v(n);
  Rng jitter(options.seed, Stream::kSolverJitter);
  for (double& x : v) x = 1.0 + 1e-3 * (2.0 * jitter.uniform() - 1.0);
  {
    const double s = norm2(v);
    for (double& x : v) x /= s;
  }

  EigenResult result;
  std::vector<double> w(n);
  for (std::size_t it = 1; it <= options.max_iters; ++it) {
    op.apply(v, w);
    const double lambda = dot(v, w);
    double res2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double r = w[i] - lambda * v[i];
      res2 += r * r;
    }
    result.eigenvalue = lambda;
    result.residual = std::sqrt(res2);
    result.iterations = it;
    if (result.residual <= options.tol * std::abs(lambda) || result.residual == 0.0) {
      result.converged = true;
      break;
    }
    for (std::size_t i = 0; i < n; ++i) w[i] += options.shift * v[i];
    const double s = norm2(w);
    if (s == 0.0) break;  // shifted operator annihilated v; nothing left to iterate
    for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / s;
  }
  fix_sign(v);
  result.vector = std::move(v);
  return result;
}

EigenResult dense_leading_eigenpair(const DenseMatrix& matrix) {
  const std::size_t n = matrix.size;
  if (n == 0) throw ParameterError("dense_leading_eigenpair: empty matrix");
  if (n > kDenseLimit)
    throw SizeLimitError("dense_leading_eigenpair: dimension " + std::to_string(n) +
                         " exceeds the limit of " + std::to_string(kDenseLimit));
  const auto dim = static_cast<Eigen::Index>(n);
  const Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
      m(matrix.values.data(), dim, dim);

  EigenResult result;
  result.vector.resize(n);
  if (matrix.is_symmetric()) {
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
    if (solver.info() != Eigen::Success) throw Error("dense symmetric eigensolver failed");
    result.eigenvalue = solver.eigenvalues()(dim - 1);
    const Eigen::VectorXd vec = solver.eigenvectors().col(dim - 1);
    for (std::size_t i = 0; i < n; ++i) result.vector[i] = vec(static_cast<Eigen::Index>(i));
  } else {
    const Eigen::EigenSolver<Eigen::MatrixXd> solver(m);
    if (solver.info() != Eigen::Success) throw Error("dense eigensolver failed");
    const auto& values = solver.eigenvalues();
    Eigen::Index best = 0;
    for (Eigen::Index i = 1; i < dim; ++i) {
      const double re = values(i).real();
      const double best_re = values(best).real();
      // Among equal real parts prefer the real eigenvalue.
      if (re > best_re ||
          (re == best_re && std::abs(values(i).imag()) < std::abs(values(best).imag())))
        best = i;
    }
    result.eigenvalue = values(best).real();
    Eigen::VectorXcd vec = solver.eigenvectors().col(best);
    // Rotate out the arbitrary complex phase before taking the real part.
    Eigen::Index pivot = 0;
    vec.cwiseAbs().maxCoeff(&pivot);
    vec *= std::conj(vec(pivot)) / std::abs(vec(pivot));
    for (std::size_t i = 0; i < n; ++i)
      result.vector[i] = vec(static_cast<Eigen::Index>(i)).real();
  }
  const double s = norm2(result.vector);
  for (double& x : result.vector) x /= s;
  fix_sign(result.vector);
  const DenseOperator op(matrix);
  result.residual = eigen_residual(op, result.eigenvalue, result.vector);
  result.converged = true;
  return result;
}

}  // namespace nbc
