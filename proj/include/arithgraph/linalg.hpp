#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "arithgraph/integer.hpp"

namespace arithgraph {

// Dense square integer matrix, row-major.
class ExactMatrix {
public:
    ExactMatrix() = default;
    explicit ExactMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
    ExactMatrix(std::size_t dim, std::vector<Integer> row_major);
    static ExactMatrix from_rows(const std::vector<std::vector<Integer>>& rows);
    static ExactMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);
    static ExactMatrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }
    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

    bool is_symmetric() const;
    ExactMatrix transpose() const;
    ExactMatrix operator*(const ExactMatrix& other) const;
    std::vector<Integer> operator*(const std::vector<Integer>& v) const;
    ExactMatrix scaled(const Integer& s) const;
    bool operator==(const ExactMatrix& other) const = default;

    // Keeps the listed rows/columns, in the given order.
    ExactMatrix principal_submatrix(const std::vector<std::size_t>& keep) const;
    ExactMatrix without(std::size_t row, std::size_t col) const;
    std::vector<std::vector<Integer>> rows() const;

private:
    std::size_t dim_ = 0;
    std::vector<Integer> data_;
};

Integer determinant(const ExactMatrix& m);

// Leading principal minors D_1..D_n, computed by one elimination pass.
std::vector<Integer> leading_principal_minors(const ExactMatrix& m);

// Classical adjoint; M * adj(M) == det(M) * I is checked before returning.
ExactMatrix adjugate(const ExactMatrix& m);

std::size_t rank(const ExactMatrix& m);

struct InvariantFactors {
    std::size_t rank = 0;
    std::vector<Integer> factors;  // f_1 | f_2 | ... | f_rank, all positive

    // Factors larger than one, i.e. the torsion of Z^n / image.
    std::vector<Integer> nontrivial() const;
    Integer torsion_order() const;
    bool is_cyclic() const;
    bool operator==(const InvariantFactors&) const = default;
};

InvariantFactors smith_normal_form(const ExactMatrix& m);

// Sylvester criterion. Throws ContractError on a non-symmetric input.
bool is_positive_definite(const ExactMatrix& m);

// Rank n-1 matrix whose kernel is spanned by a vector with all entries of one sign:
// returns that vector scaled to positive entries with gcd 1.
std::optional<std::vector<Integer>> positive_kernel_vector(const ExactMatrix& m);

// Generic kernel basis vector for a rank n-1 matrix (gcd 1, first nonzero entry positive).
std::optional<std::vector<Integer>> kernel_vector(const ExactMatrix& m);

// PSD of rank n-1. When `connected_mg_form` is set the matrix is assumed to be
// of the form Diag(a) - A with A the adjacency of a connected multigraph, and the
// check reduces to det == 0 plus a positive kernel vector.
bool is_psd_rank_deficient_one(const ExactMatrix& m, bool connected_mg_form);

// Exhaustive principal-minor test; exponential, meant for small matrices and tests.
bool all_principal_minors_nonnegative(const ExactMatrix& m);

namespace fast {

// Fixed-width elimination for the sieves. Entries are small; every minor is bounded
// by the Hadamard bound, which is checked up front.
struct SmallMatrix {
    std::size_t dim = 0;
    std::vector<std::int64_t> a;  // row-major
    std::int64_t& at(std::size_t i, std::size_t j) { return a[i * dim + j]; }
    std::int64_t at(std::size_t i, std::size_t j) const { return a[i * dim + j]; }
};

// True when every minor of m fits comfortably in 62 bits.
bool within_fast_range(const SmallMatrix& m);

struct Elimination {
    bool positive_definite = false;  // all leading minors > 0
    __int128 det = 0;
};

// Plain Bareiss without pivoting while leading minors stay nonzero; falls back to
// pivoting to finish the determinant once a zero leading minor appears.
Elimination eliminate(const SmallMatrix& m);

}  // namespace fast

}  // namespace arithgraph
