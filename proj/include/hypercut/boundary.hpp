#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "hypercut/exact_matrix.hpp"
#include "hypercut/gf2_matrix.hpp"
#include "hypercut/simplex.hpp"
#include "hypercut/span.hpp"

namespace hypercut {

// Column of the boundary operator for the d-face with the given colex index,
// under the canonical (+1, ascending) orientation. Rows are the colex-ordered
// (d-1)-subsets of [0,n). Entry i carries sign (-1)^i.
inline std::vector<SparseEntry> boundary_column(int d, std::uint32_t face_idx) {
    std::vector<int> verts = colex_unrank(face_idx, d + 1);
    std::vector<SparseEntry> col;
    col.reserve(d + 1);
    std::vector<int> facet(d);
    for (int i = 0; i <= d; ++i) {
        int k = 0;
        for (int j = 0; j <= d; ++j)
            if (j != i) facet[k++] = verts[j];
        col.emplace_back(static_cast<std::uint32_t>(colex_rank(facet)), (i % 2 == 0) ? 1 : -1);
    }
    return col;
}

// Matrix of the boundary operator restricted to the face set's columns.
// Rows: all (d-1)-simplices of the full skeleton, colex order.
inline Gf2Matrix boundary_matrix_f2(const FaceSet& fs) {
    const std::size_t rows = binom(fs.n, fs.d);
    Gf2Matrix m(rows, fs.size());
    for (std::size_t c = 0; c < fs.size(); ++c)
        for (const auto& [r, v] : boundary_column(fs.d, fs.idx[c]))
            if (v & 1) m.flip(r, c);
    return m;
}

inline ExactMatrix boundary_matrix_q(const FaceSet& fs) {
    const std::size_t rows = binom(fs.n, fs.d);
    ExactMatrix m(rows, fs.size());
    for (std::size_t c = 0; c < fs.size(); ++c)
        for (const auto& [r, v] : boundary_column(fs.d, fs.idx[c])) m.at(r, c) = v;
    return m;
}

using BoundaryMatrix = std::variant<Gf2Matrix, ExactMatrix>;

inline BoundaryMatrix boundary_matrix(const FaceSet& fs, Field field) {
    if (field == Field::F2) return boundary_matrix_f2(fs);
    return boundary_matrix_q(fs);
}

inline std::size_t rank(const BoundaryMatrix& m) {
    return std::visit([](const auto& mm) { return mm.rank(); }, m);
}

inline std::size_t matrix_rows(const BoundaryMatrix& m) {
    return std::visit([](const auto& mm) { return mm.rows(); }, m);
}
inline std::size_t matrix_cols(const BoundaryMatrix& m) {
    return std::visit([](const auto& mm) { return mm.cols(); }, m);
}

// Span of the face set's boundary columns.
inline SpanState column_span(const FaceSet& fs, Field field) {
    SpanState st(field, binom(fs.n, fs.d));
    for (std::uint32_t f : fs.idx) st.insert_sparse(boundary_column(fs.d, f));
    return st;
}

}  // namespace hypercut
