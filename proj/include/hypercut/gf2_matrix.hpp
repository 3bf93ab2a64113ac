#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace hypercut {

// Bit vector packed into 64-bit words.
struct BitVec {
    std::size_t size = 0;
    std::vector<std::uint64_t> w;

    BitVec() = default;
    explicit BitVec(std::size_t n) : size(n), w((n + 63) / 64, 0) {}

    bool get(std::size_t i) const { return (w[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void flip(std::size_t i) { w[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    void operator^=(const BitVec& o) {
        for (std::size_t k = 0; k < w.size(); ++k) w[k] ^= o.w[k];
    }
    bool any() const {
        for (auto x : w)
            if (x) return true;
        return false;
    }
    std::size_t popcount() const {
        std::size_t c = 0;
        for (auto x : w) c += std::popcount(x);
        return c;
    }
    // Index of first set bit; size if none.
    std::size_t first_set() const {
        for (std::size_t k = 0; k < w.size(); ++k)
            if (w[k]) return 64 * k + std::countr_zero(w[k]);
        return size;
    }
    bool operator==(const BitVec& o) const { return size == o.size && w == o.w; }
    bool operator<(const BitVec& o) const { return w < o.w; }
};

// Dense GF(2) matrix, rows bit-packed into machine words. Elimination pivots
// deterministically: leftmost column, lowest row index.
class Gf2Matrix {
  public:
    Gf2Matrix() = default;
    Gf2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_((cols + 63) / 64), a_(rows * words_, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t i, std::size_t j) const {
        return (a_[i * words_ + (j >> 6)] >> (j & 63)) & 1u;
    }
    void set(std::size_t i, std::size_t j, bool v) {
        const std::uint64_t m = std::uint64_t(1) << (j & 63);
        if (v)
            a_[i * words_ + (j >> 6)] |= m;
        else
            a_[i * words_ + (j >> 6)] &= ~m;
    }
    void flip(std::size_t i, std::size_t j) {
        a_[i * words_ + (j >> 6)] ^= std::uint64_t(1) << (j & 63);
    }

    BitVec row_bits(std::size_t i) const {
        BitVec v(cols_);
        for (std::size_t k = 0; k < words_; ++k) v.w[k] = a_[i * words_ + k];
        return v;
    }
    BitVec col_bits(std::size_t j) const {
        BitVec v(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            if (get(i, j)) v.set(i);
        return v;
    }

    bool is_zero() const {
        for (auto x : a_)
            if (x) return false;
        return true;
    }

    std::size_t rank() const {
        Gf2Matrix m = *this;
        return m.eliminate(nullptr, false);
    }

    // Reduced row echelon form; pivot column of each nonzero row is appended
    // to *pivots when given.
    Gf2Matrix rref(std::vector<std::size_t>* pivots = nullptr) const {
        Gf2Matrix m = *this;
        m.eliminate(pivots, true);
        return m;
    }

    // Basis of the right kernel: size = cols - rank.
    std::vector<BitVec> kernel_basis() const {
        std::vector<std::size_t> pivots;
        Gf2Matrix r = rref(&pivots);
        std::vector<char> is_pivot(cols_, 0);
        for (auto p : pivots) is_pivot[p] = 1;
        std::vector<BitVec> basis;
        for (std::size_t j = 0; j < cols_; ++j) {
            if (is_pivot[j]) continue;
            BitVec v(cols_);
            v.set(j);
            for (std::size_t r_i = 0; r_i < pivots.size(); ++r_i)
                if (r.get(r_i, j)) v.set(pivots[r_i]);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    static Gf2Matrix multiply(const Gf2Matrix& a, const Gf2Matrix& b) {
        if (a.cols() != b.rows())
            throw std::invalid_argument("Gf2Matrix::multiply: dimension mismatch");
        Gf2Matrix c(a.rows(), b.cols());
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t k = 0; k < a.cols(); ++k)
                if (a.get(i, k))
                    for (std::size_t w = 0; w < c.words_; ++w)
                        c.a_[i * c.words_ + w] ^= b.a_[k * b.words_ + w];
        return c;
    }

  private:
    void xor_row(std::size_t dst, std::size_t src) {
        for (std::size_t k = 0; k < words_; ++k) a_[dst * words_ + k] ^= a_[src * words_ + k];
    }
    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < words_; ++k)
            std::swap(a_[i * words_ + k], a_[j * words_ + k]);
    }

    std::size_t eliminate(std::vector<std::size_t>* pivots, bool reduced) {
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t p = r;
            while (p < rows_ && !get(p, c)) ++p;
            if (p == rows_) continue;
            swap_rows(r, p);
            for (std::size_t i = reduced ? 0 : r + 1; i < rows_; ++i)
                if (i != r && get(i, c)) xor_row(i, r);
            if (pivots) pivots->push_back(c);
            ++r;
        }
        return r;
    }

    std::size_t rows_ = 0, cols_ = 0, words_ = 0;
    std::vector<std::uint64_t> a_;
};

// Incrementally maintained reduced basis over GF(2); pivot columns are
// distinct and every stored row is zero at the other rows' pivots.
class Gf2Span {
  public:
    explicit Gf2Span(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }

    bool contains(BitVec v) const {
        reduce(v);
        return !v.any();
    }

    // Returns true when v was absorbed (already in the span).
    bool insert(BitVec v) {
        check(v);
        reduce(v);
        if (!v.any()) return true;
        const std::size_t p = v.first_set();
        for (auto& row : rows_)
            if (row.bits.get(p)) row.bits ^= v;
        rows_.push_back({p, std::move(v)});
        std::size_t i = rows_.size();
        while (i > 1 && rows_[i - 2].pivot > rows_[i - 1].pivot) {
            std::swap(rows_[i - 2], rows_[i - 1]);
            --i;
        }
        return false;
    }

  private:
    struct Row {
        std::size_t pivot;
        BitVec bits;
    };

    void check(const BitVec& v) const {
        if (v.size != dim_) throw std::invalid_argument("Gf2Span: vector length mismatch");
    }

    void reduce(BitVec& v) const {
        check(v);
        for (const auto& row : rows_) {
            std::size_t lead = v.first_set();
            if (lead == v.size) return;
            if (row.pivot < lead) continue;
            if (row.pivot == lead) {
                v ^= row.bits;
            } else if (v.get(row.pivot)) {
                v ^= row.bits;
            }
        }
    }

    std::size_t dim_;
    std::vector<Row> rows_;  // ascending pivot
};

}  // namespace hypercut
