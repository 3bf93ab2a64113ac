#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "hypercut/exact_matrix.hpp"
#include "hypercut/gf2_matrix.hpp"
#include "hypercut/simplex.hpp"

namespace hypercut {

// Sparse vector entry: (row index, integer value).
using SparseEntry = std::pair<std::uint32_t, int>;

// Field-dispatching wrapper around the incremental reduced bases. Supports
// rank(S u sigma) = rank(S) queries without re-elimination.
class SpanState {
  public:
    SpanState(Field f, std::size_t dim)
        : field_(f),
          dim_(dim),
          state_(f == Field::F2 ? std::variant<Gf2Span, QSpan>(Gf2Span(dim))
                                : std::variant<Gf2Span, QSpan>(QSpan(dim))) {}

    Field field() const { return field_; }
    std::size_t dim() const { return dim_; }

    std::size_t rank() const {
        if (field_ == Field::F2) return std::get<Gf2Span>(state_).rank();
        return std::get<QSpan>(state_).rank();
    }

    bool insert(const std::vector<long long>& v) { return insert_dense(v); }
    bool in_span(const std::vector<long long>& v) const { return contains_dense(v); }

    bool insert_sparse(const std::vector<SparseEntry>& v) {
        if (field_ == Field::F2) return std::get<Gf2Span>(state_).insert(to_bits(v));
        return std::get<QSpan>(state_).insert(to_big(v));
    }
    bool in_span_sparse(const std::vector<SparseEntry>& v) const {
        if (field_ == Field::F2) return std::get<Gf2Span>(state_).contains(to_bits(v));
        return std::get<QSpan>(state_).contains(to_big(v));
    }

  private:
    bool insert_dense(const std::vector<long long>& v) {
        check(v.size());
        if (field_ == Field::F2) return std::get<Gf2Span>(state_).insert(to_bits(v));
        return std::get<QSpan>(state_).insert(to_big(v));
    }
    bool contains_dense(const std::vector<long long>& v) const {
        check(v.size());
        if (field_ == Field::F2) return std::get<Gf2Span>(state_).contains(to_bits(v));
        return std::get<QSpan>(state_).contains(to_big(v));
    }

    void check(std::size_t len) const {
        if (len != dim_) throw std::invalid_argument("SpanState: vector length mismatch");
    }

    BitVec to_bits(const std::vector<long long>& v) const {
        BitVec b(dim_);
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] & 1) b.set(i);
        return b;
    }
    BitVec to_bits(const std::vector<SparseEntry>& v) const {
        BitVec b(dim_);
        for (const auto& [i, val] : v) {
            if (i >= dim_) throw std::invalid_argument("SpanState: entry index out of range");
            if (val & 1) b.flip(i);
        }
        return b;
    }
    std::vector<BigInt> to_big(const std::vector<long long>& v) const {
        std::vector<BigInt> b(dim_);
        for (std::size_t i = 0; i < v.size(); ++i) b[i] = v[i];
        return b;
    }
    std::vector<BigInt> to_big(const std::vector<SparseEntry>& v) const {
        std::vector<BigInt> b(dim_);
        for (const auto& [i, val] : v) {
            if (i >= dim_) throw std::invalid_argument("SpanState: entry index out of range");
            b[i] += val;
        }
        return b;
    }

    Field field_;
    std::size_t dim_;
    std::variant<Gf2Span, QSpan> state_;
};

}  // namespace hypercut
