#include "arithgraph/linalg.hpp"

#include <cmath>
#include <utility>

#include "arithgraph/error.hpp"

namespace arithgraph {

ExactMatrix::ExactMatrix(std::size_t dim, std::vector<Integer> row_major)
    : dim_(dim), data_(std::move(row_major)) {
    require(data_.size() == dim_ * dim_, "matrix data size does not match dimension");
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<Integer>>& rows) {
    ExactMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        require(rows[i].size() == rows.size(), "matrix must be square");
        for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
    std::vector<std::vector<Integer>> big;
    big.reserve(rows.size());
    for (const auto& r : rows) big.push_back(to_integers(r));
    return from_rows(big);
}

ExactMatrix ExactMatrix::identity(std::size_t dim) {
    ExactMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
    return m;
}

bool ExactMatrix::is_symmetric() const {
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& other) const {
    require(dim_ == other.dim_, "dimension mismatch in matrix product");
    ExactMatrix p(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t k = 0; k < dim_; ++k) {
            const Integer& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < dim_; ++j) p(i, j) += a * other(k, j);
        }
    return p;
}

std::vector<Integer> ExactMatrix::operator*(const std::vector<Integer>& v) const {
    require(v.size() == dim_, "dimension mismatch in matrix-vector product");
    std::vector<Integer> out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
}

ExactMatrix ExactMatrix::scaled(const Integer& s) const {
    ExactMatrix r(*this);
    for (auto& x : r.data_) x *= s;
    return r;
}

ExactMatrix ExactMatrix::principal_submatrix(const std::vector<std::size_t>& keep) const {
    ExactMatrix s(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) {
        require(keep[i] < dim_, "index out of range");
        for (std::size_t j = 0; j < keep.size(); ++j) s(i, j) = (*this)(keep[i], keep[j]);
    }
    return s;
}

ExactMatrix ExactMatrix::without(std::size_t row, std::size_t col) const {
    require(dim_ > 0 && row < dim_ && col < dim_, "index out of range");
    ExactMatrix s(dim_ - 1);
    for (std::size_t i = 0, si = 0; i < dim_; ++i) {
        if (i == row) continue;
        for (std::size_t j = 0, sj = 0; j < dim_; ++j) {
            if (j == col) continue;
            s(si, sj++) = (*this)(i, j);
        }
        ++si;
    }
    return s;
}

std::vector<std::vector<Integer>> ExactMatrix::rows() const {
    std::vector<std::vector<Integer>> out(dim_, std::vector<Integer>(dim_));
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) out[i][j] = (*this)(i, j);
    return out;
}

namespace {

inline void exact_div(Integer& x, const Integer& d) {
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
}

// One Bareiss step on rows/cols > k.
void bareiss_step(ExactMatrix& a, std::size_t k, const Integer& prev) {
    const std::size_t n = a.dim();
    for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
            a(i, j) = a(i, j) * a(k, k) - a(i, k) * a(k, j);
            exact_div(a(i, j), prev);
        }
        a(i, k) = 0;
    }
}

}  // namespace

Integer determinant(const ExactMatrix& m) {
    const std::size_t n = m.dim();
    if (n == 0) return 1;
    ExactMatrix a(m);
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        bareiss_step(a, k, prev);
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : Integer(-a(n - 1, n - 1));
}

std::vector<Integer> leading_principal_minors(const ExactMatrix& m) {
    const std::size_t n = m.dim();
    std::vector<Integer> minors;
    minors.reserve(n);
    ExactMatrix a(m);
    Integer prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (a(k, k) == 0) {
            // The pass cannot continue without pivoting; finish the tail directly.
            minors.push_back(0);
            for (std::size_t r = k + 2; r <= n; ++r) {
                std::vector<std::size_t> keep(r);
                for (std::size_t i = 0; i < r; ++i) keep[i] = i;
                minors.push_back(determinant(m.principal_submatrix(keep)));
            }
            return minors;
        }
        minors.push_back(a(k, k));
        bareiss_step(a, k, prev);
        prev = a(k, k);
    }
    return minors;
}

ExactMatrix adjugate(const ExactMatrix& m) {
    const std::size_t n = m.dim();
    ExactMatrix adj(n);
    if (n == 0) return adj;
    if (n == 1) {
        adj(0, 0) = 1;
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Integer c = determinant(m.without(i, j));
            adj(j, i) = ((i + j) % 2 == 0) ? c : Integer(-c);
        }
    ensure(m * adj == ExactMatrix::identity(n).scaled(determinant(m)), "adjugate identity failed");
    return adj;
}

std::size_t rank(const ExactMatrix& m) {
    const std::size_t n = m.dim();
    ExactMatrix a(m);
    std::size_t r = 0;
    Integer prev = 1;
    for (std::size_t col = 0; col < n && r < n; ++col) {
        std::size_t p = r;
        while (p < n && a(p, col) == 0) ++p;
        if (p == n) continue;
        for (std::size_t j = 0; j < n; ++j) std::swap(a(r, j), a(p, j));
        for (std::size_t i = r + 1; i < n; ++i) {
            for (std::size_t j = col + 1; j < n; ++j) {
                a(i, j) = a(i, j) * a(r, col) - a(i, col) * a(r, j);
                exact_div(a(i, j), prev);
            }
            a(i, col) = 0;
        }
        prev = a(r, col);
        ++r;
    }
    return r;
}

std::vector<Integer> InvariantFactors::nontrivial() const {
    std::vector<Integer> out;
    for (const auto& f : factors)
        if (f != 1) out.push_back(f);
    return out;
}

Integer InvariantFactors::torsion_order() const {
    Integer p = 1;
    for (const auto& f : factors) p *= f;
    return p;
}

bool InvariantFactors::is_cyclic() const {
    if (rank <= 1) return true;
    return factors[rank - 2] == 1;
}

InvariantFactors smith_normal_form(const ExactMatrix& m) {
    const std::size_t n = m.dim();
    ExactMatrix a(m);
    InvariantFactors out;
    for (std::size_t t = 0; t < n; ++t) {
        while (true) {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            bool found = false;
            std::size_t pi = t, pj = t;
            Integer best;
            for (std::size_t i = t; i < n; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    if (a(i, j) == 0) continue;
                    Integer v = abs_value(a(i, j));
                    if (!found || v < best) {
                        best = v;
                        pi = i;
                        pj = j;
                        found = true;
                    }
                }
            if (!found) break;
            if (pi != t)
                for (std::size_t j = 0; j < n; ++j) std::swap(a(t, j), a(pi, j));
            if (pj != t)
                for (std::size_t i = 0; i < n; ++i) std::swap(a(i, t), a(i, pj));

            bool clean = true;
            Integer q;
            for (std::size_t i = t + 1; i < n; ++i) {
                if (a(i, t) == 0) continue;
                mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
                for (std::size_t j = t; j < n; ++j) a(i, j) -= q * a(t, j);
                if (a(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a(t, j) == 0) continue;
                mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
                for (std::size_t i = t; i < n; ++i) a(i, j) -= q * a(i, t);
                if (a(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            bool divides = true;
            for (std::size_t i = t + 1; i < n && divides; ++i)
                for (std::size_t j = t + 1; j < n; ++j) {
                    if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
                        for (std::size_t c = t; c < n; ++c) a(t, c) += a(i, c);
                        divides = false;
                        break;
                    }
                }
            if (divides) break;
        }
        if (a(t, t) == 0) break;
        out.factors.push_back(abs_value(a(t, t)));
    }
    out.rank = out.factors.size();
    for (std::size_t i = 1; i < out.rank; ++i)
        ensure(mpz_divisible_p(out.factors[i].get_mpz_t(), out.factors[i - 1].get_mpz_t()),
               "invariant factors do not form a divisibility chain");
    return out;
}

bool is_positive_definite(const ExactMatrix& m) {
    require(m.is_symmetric(), "positive-definiteness requires a symmetric matrix");
    for (const auto& d : leading_principal_minors(m))
        if (d <= 0) return false;
    return true;
}

std::optional<std::vector<Integer>> kernel_vector(const ExactMatrix& m) {
    const std::size_t n = m.dim();
    if (n == 0) return std::nullopt;
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);

    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < n; ++col) {
        std::size_t p = r;
        while (p < n && a[p][col] == 0) ++p;
        if (p == n) continue;
        std::swap(a[r], a[p]);
        Rational inv = 1 / a[r][col];
        for (std::size_t j = col; j < n; ++j) a[r][j] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r || a[i][col] == 0) continue;
            Rational f = a[i][col];
            for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_col.push_back(col);
        ++r;
    }
    if (r != n - 1) return std::nullopt;

    std::size_t free_col = 0;
    for (std::size_t c = 0, k = 0; c < n; ++c) {
        if (k < pivot_col.size() && pivot_col[k] == c) {
            ++k;
        } else {
            free_col = c;
            break;
        }
    }
    std::vector<Rational> x(n);
    x[free_col] = 1;
    for (std::size_t row = 0; row < pivot_col.size(); ++row) x[pivot_col[row]] = -a[row][free_col];

    Integer l = 1;
    for (auto& v : x) {
        v.canonicalize();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    }
    std::vector<Integer> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = x[i].get_num() * (l / x[i].get_den());
    Integer g = gcd_of(out);
    bool flip = false;
    for (const auto& v : out)
        if (v != 0) {
            flip = v < 0;
            break;
        }
    for (auto& v : out) {
        v /= g;
        if (flip) v = -v;
    }
    ensure(m * out == std::vector<Integer>(n, Integer(0)), "kernel vector check failed");
    return out;
}

std::optional<std::vector<Integer>> positive_kernel_vector(const ExactMatrix& m) {
    auto v = kernel_vector(m);
    if (!v) return std::nullopt;
    for (const auto& x : *v)
        if (x <= 0) return std::nullopt;
    return v;
}

bool all_principal_minors_nonnegative(const ExactMatrix& m) {
    const std::size_t n = m.dim();
    require(n < 25, "principal minor enumeration limited to small matrices");
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) keep.push_back(i);
        if (determinant(m.principal_submatrix(keep)) < 0) return false;
    }
    return true;
}

bool is_psd_rank_deficient_one(const ExactMatrix& m, bool connected_mg_form) {
    require(m.is_symmetric(), "semidefiniteness requires a symmetric matrix");
    if (m.dim() == 0) return false;
    if (connected_mg_form) return determinant(m) == 0 && positive_kernel_vector(m).has_value();
    return rank(m) + 1 == m.dim() && all_principal_minors_nonnegative(m);
}

namespace fast {

bool within_fast_range(const SmallMatrix& m) {
    long double bound_log2 = 0;
    for (std::size_t i = 0; i < m.dim; ++i) {
        long double s = 0;
        for (std::size_t j = 0; j < m.dim; ++j) {
            long double v = static_cast<long double>(m.at(i, j));
            s += v * v;
        }
        if (s > 1) bound_log2 += 0.5L * std::log2(s);
    }
    return bound_log2 < 61.0L;
}

Elimination eliminate(const SmallMatrix& m) {
    const std::size_t n = m.dim;
    Elimination out;
    if (n == 0) {
        out.positive_definite = true;
        out.det = 1;
        return out;
    }
    __int128 a[16 * 16];
    std::vector<__int128> heap;
    __int128* p = a;
    if (n > 16) {
        heap.resize(n * n);
        p = heap.data();
    }
    for (std::size_t i = 0; i < n * n; ++i) p[i] = m.a[i];
    bool pd = true;
    int sign = 1;
    __int128 prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        __int128 piv = p[k * n + k];
        if (pd && piv <= 0) pd = false;
        if (piv == 0) {
            std::size_t r = k + 1;
            while (r < n && p[r * n + k] == 0) ++r;
            if (r == n) {
                out.positive_definite = false;
                out.det = 0;
                return out;
            }
            for (std::size_t j = 0; j < n; ++j) std::swap(p[k * n + j], p[r * n + j]);
            sign = -sign;
            piv = p[k * n + k];
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            __int128 aik = p[i * n + k];
            for (std::size_t j = k + 1; j < n; ++j)
                p[i * n + j] = (p[i * n + j] * piv - aik * p[k * n + j]) / prev;
            p[i * n + k] = 0;
        }
        prev = piv;
    }
    out.det = sign > 0 ? p[n * n - 1] : -p[n * n - 1];
    out.positive_definite = pd && out.det > 0;
    return out;
}

}  // namespace fast

}  // namespace arithgraph
