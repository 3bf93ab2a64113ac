#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace hypercut {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Dense matrix of arbitrary-precision integers. Rank is computed by
// fraction-free (Bareiss) elimination, so every intermediate entry is a minor
// of the input; no floating point anywhere.
class ExactMatrix {
  public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    BigInt& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const BigInt& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool is_zero() const {
        for (const auto& x : a_)
            if (x != 0) return false;
        return true;
    }

    std::size_t rank() const {
        ExactMatrix m = *this;
        BigInt prev = 1;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t p = r;
            while (p < rows_ && m.at(p, c) == 0) ++p;
            if (p == rows_) continue;
            if (p != r)
                for (std::size_t j = c; j < cols_; ++j) std::swap(m.at(r, j), m.at(p, j));
            const BigInt piv = m.at(r, c);
            for (std::size_t i = r + 1; i < rows_; ++i) {
                const BigInt f = m.at(i, c);
                for (std::size_t j = c + 1; j < cols_; ++j)
                    m.at(i, j) = (m.at(i, j) * piv - f * m.at(r, j)) / prev;
                m.at(i, c) = 0;
            }
            prev = piv;
            ++r;
        }
        return r;
    }

    // Right-kernel basis over Q via Gauss-Jordan on a rational copy.
    std::vector<std::vector<Rational>> kernel_basis() const {
        std::vector<std::vector<Rational>> m(rows_, std::vector<Rational>(cols_));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m[i][j] = Rational(at(i, j));

        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t p = r;
            while (p < rows_ && m[p][c] == 0) ++p;
            if (p == rows_) continue;
            std::swap(m[p], m[r]);
            const Rational piv = m[r][c];
            for (std::size_t j = c; j < cols_; ++j) m[r][j] /= piv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r || m[i][c] == 0) continue;
                const Rational f = m[i][c];
                for (std::size_t j = c; j < cols_; ++j) m[i][j] -= f * m[r][j];
            }
            pivots.push_back(c);
            ++r;
        }

        std::vector<char> is_pivot(cols_, 0);
        for (auto p : pivots) is_pivot[p] = 1;
        std::vector<std::vector<Rational>> basis;
        for (std::size_t j = 0; j < cols_; ++j) {
            if (is_pivot[j]) continue;
            std::vector<Rational> v(cols_, Rational(0));
            v[j] = 1;
            for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m[k][j];
            basis.push_back(std::move(v));
        }
        return basis;
    }

    static ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b) {
        if (a.cols() != b.rows())
            throw std::invalid_argument("ExactMatrix::multiply: dimension mismatch");
        ExactMatrix c(a.rows(), b.cols());
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t k = 0; k < a.cols(); ++k) {
                if (a.at(i, k) == 0) continue;
                const BigInt& f = a.at(i, k);
                for (std::size_t j = 0; j < b.cols(); ++j) {
                    if (b.at(k, j) == 0) continue;
                    c.at(i, j) += f * b.at(k, j);
                }
            }
        return c;
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BigInt> a_;
};

// Incremental reduced basis over Q, stored fraction-free: every row is an
// integer vector with positive leading (pivot) entry and content 1, the first
// nonzero entry of a row is its pivot, and rows are zero at each other's
// pivot columns. Membership is a single reduction pass.
class QSpan {
  public:
    explicit QSpan(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }

    bool contains(std::vector<BigInt> v) const {
        check(v);
        return reduce_leading(v);
    }

    bool insert(std::vector<BigInt> v) {
        check(v);
        if (reduce_full(v)) return true;
        normalize(v);
        std::size_t p = 0;
        while (v[p] == 0) ++p;
        for (auto& row : rows_) {
            if (row.v[p] == 0) continue;
            const BigInt f = row.v[p];
            for (std::size_t j = 0; j < dim_; ++j) row.v[j] = row.v[j] * v[p] - f * v[j];
            normalize(row.v);
        }
        Row nr{p, std::move(v)};
        auto it = rows_.begin();
        while (it != rows_.end() && it->pivot < p) ++it;
        rows_.insert(it, std::move(nr));
        return false;
    }

  private:
    struct Row {
        std::size_t pivot;
        std::vector<BigInt> v;
    };

    void check(const std::vector<BigInt>& v) const {
        if (v.size() != dim_) throw std::invalid_argument("QSpan: vector length mismatch");
    }

    static void normalize(std::vector<BigInt>& v) {
        BigInt g = 0;
        int lead_sign = 0;
        for (const auto& x : v) {
            if (x == 0) continue;
            if (lead_sign == 0) lead_sign = (x > 0) ? 1 : -1;
            g = boost::multiprecision::gcd(g, boost::multiprecision::abs(x));
            if (g == 1 && lead_sign == 1) break;
        }
        if (g == 0) return;
        if (lead_sign < 0) g = -g;
        if (g != 1)
            for (auto& x : v) x /= g;
    }

    // Membership-only reduction. Rows' first nonzero entries are their
    // pivots, so once v's leading position misses every pivot, v cannot
    // vanish and the scan stops early. Returns true iff v reduces to zero.
    bool reduce_leading(std::vector<BigInt>& v) const {
        std::size_t lead = 0;
        auto it = rows_.begin();
        while (true) {
            while (lead < dim_ && v[lead] == 0) ++lead;
            if (lead == dim_) return true;
            while (it != rows_.end() && it->pivot < lead) ++it;
            if (it == rows_.end() || it->pivot != lead) return false;
            const BigInt piv = it->v[lead];
            const BigInt f = v[lead];
            for (std::size_t j = lead; j < dim_; ++j) v[j] = v[j] * piv - f * it->v[j];
            normalize_tail(v, lead);
        }
    }

    // Eliminates v at every pivot column, which is what the insert path
    // needs to keep stored rows mutually reduced. Returns true iff zero.
    bool reduce_full(std::vector<BigInt>& v) const {
        for (const auto& row : rows_) {
            if (v[row.pivot] == 0) continue;
            const BigInt piv = row.v[row.pivot];
            const BigInt f = v[row.pivot];
            for (std::size_t j = 0; j < dim_; ++j) v[j] = v[j] * piv - f * row.v[j];
            normalize_tail(v, 0);
        }
        for (const auto& x : v)
            if (x != 0) return false;
        return true;
    }

    // Content-normalize the (all-zero-prefixed) tail to keep growth in check.
    static void normalize_tail(std::vector<BigInt>& v, std::size_t from) {
        BigInt g = 0;
        for (std::size_t j = from; j < v.size(); ++j) {
            if (v[j] == 0) continue;
            g = boost::multiprecision::gcd(g, boost::multiprecision::abs(v[j]));
            if (g == 1) return;
        }
        if (g == 0 || g == 1) return;
        for (std::size_t j = from; j < v.size(); ++j)
            if (v[j] != 0) v[j] /= g;
    }

    std::size_t dim_;
    std::vector<Row> rows_;  // ascending pivot
};

}  // namespace hypercut
