#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "nbc/graph.hpp"

namespace nbc {

// A square real matrix available only through its action on vectors.
class LinearOperator {
 public:
  virtual ~LinearOperator() = default;
  virtual std::size_t dimension() const = 0;
  // out = Op * in. `in` and `out` must not alias.
  virtual void apply(std::span<const double> in, std::span<double> out) const = 0;
};

// The adjacency matrix A of a graph.
class AdjacencyOperator final : public LinearOperator {
 public:
  explicit AdjacencyOperator(const Graph& g) : graph_(&g) {}
  std::size_t dimension() const override { return graph_->node_count(); }
  void apply(std::span<const double> in, std::span<double> out) const override;

 private:
  const Graph* graph_;
};

// The 2n x 2n Ihara-Bass block matrix M = [[A, I - D], [I, 0]], applied
// without materializing it.
class IharaBassOperator final : public LinearOperator {
 public:
  explicit IharaBassOperator(const Graph& g) : graph_(&g) {}
  std::size_t dimension() const override { return 2 * graph_->node_count(); }
  void apply(std::span<const double> in, std::span<double> out) const override;

 private:
  const Graph* graph_;
};

// Square 0/1 matrix stored as a CSR sparsity pattern.
class PatternMatrixOperator final : public LinearOperator {
 public:
  PatternMatrixOperator(std::vector<std::uint64_t> row_offsets, std::vector<std::uint64_t> columns);
  std::size_t dimension() const override { return row_offsets_.size() - 1; }
  void apply(std::span<const double> in, std::span<double> out) const override;
  std::size_t nonzeros() const noexcept { return columns_.size(); }
  std::span<const std::uint64_t> row_offsets() const noexcept { return row_offsets_; }
  std::span<const std::uint64_t> columns() const noexcept { return columns_; }

 private:
  std::vector<std::uint64_t> row_offsets_;
  std::vector<std::uint64_t> columns_;
};

// Row-major dense matrix for desk-scale cross-checks.
struct DenseMatrix {
  std::size_t size = 0;
  std::vector<double> values;  // size * size, row-major

  explicit DenseMatrix(std::size_t n = 0) : size(n), values(n * n, 0.0) {}
  double& operator()(std::size_t r, std::size_t c) { return values[r * size + c]; }
  double operator()(std::size_t r, std::size_t c) const { return values[r * size + c]; }
  bool is_symmetric() const;
};

class DenseOperator final : public LinearOperator {
 public:
  explicit DenseOperator(const DenseMatrix& m) : matrix_(&m) {}
  std::size_t dimension() const override { return matrix_->size; }
  void apply(std::span<const double> in, std::span<double> out) const override;

 private:
  const DenseMatrix* matrix_;
};

// Materializes an operator column by column. Throws SizeLimitError above
// kDenseLimit.
DenseMatrix to_dense(const LinearOperator& op);

struct EigenResult {
  double eigenvalue = 0.0;
  std::vector<double> vector;  // unit Euclidean norm
  double residual = 0.0;       // ||Op v - lambda v||_2
  std::size_t iterations = 0;
  bool converged = false;
};

struct PowerIterationOptions {
  double tol = 1e-10;
  std::size_t max_iters = 10000;
  double shift = 0.0;
  std::uint64_t seed = 0;
};

// Leading eigenpair of Op by power iteration on Op + shift*I. Stops when
// ||Op v - lambda v|| <= tol * |lambda| with lambda the Rayleigh quotient of
// the current iterate. The start vector is all-ones with a seeded relative
// jitter of 1e-3. The returned vector has its largest-magnitude entry
// positive. Non-convergence is reported through `converged`, not thrown.
EigenResult power_iteration(const LinearOperator& op, const PowerIterationOptions& options = {});

// ||Op v - lambda v||_2, recomputed from scratch.
double eigen_residual(const LinearOperator& op, double lambda, std::span<const double> v);

inline constexpr std::size_t kDenseLimit = 4000;

// Eigenpair with the largest real part from a full dense decomposition.
// Symmetric input uses a self-adjoint solver. For non-symmetric input the
// real part of the eigenvector is returned. Throws SizeLimitError above
// kDenseLimit.
EigenResult dense_leading_eigenpair(const DenseMatrix& matrix);

// Vector helpers shared by the solvers and the tests.
double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> a);
// Flips the sign so the largest-magnitude entry (first on ties) is positive.
void fix_sign(std::span<double> v);

}  // namespace nbc
