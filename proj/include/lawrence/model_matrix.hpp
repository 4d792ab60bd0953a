#ifndef LAWRENCE_MODEL_MATRIX_HPP
#define LAWRENCE_MODEL_MATRIX_HPP

#include "lawrence/complex.hpp"
#include "lawrence/errors.hpp"
#include "lawrence/matrix.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace lawrence {

/// Level counts d_v, aligned with the ground set of the paired complex.
using TableDims = std::vector<int>;

struct RowLabel {
    Face facet;
    std::vector<int> margin;  // one 1-based level per facet vertex
    friend bool operator==(const RowLabel&, const RowLabel&) = default;
    friend auto operator<=>(const RowLabel&, const RowLabel&) = default;
};

/// The 0/1 margin matrix of a hierarchical model with its row and column
/// labels in canonical order.
struct ModelMatrix {
    IntMatrix matrix;
    std::vector<int> ground_set;
    TableDims dims;
    std::vector<std::vector<int>> col_labels;  // 1-based cell indices
    std::vector<RowLabel> row_labels;
};

namespace detail {

inline std::size_t cell_count(const TableDims& dims) {
    std::size_t c = 1;
    for (int d : dims) c *= static_cast<std::size_t>(d);
    return c;
}

/// All cells of the table in lexicographic order, first index slowest.
inline std::vector<std::vector<int>> enumerate_cells(const TableDims& dims) {
    std::vector<std::vector<int>> cells;
    cells.reserve(cell_count(dims));
    std::vector<int> cur(dims.size(), 1);
    while (true) {
        cells.push_back(cur);
        std::size_t k = dims.size();
        while (k > 0) {
            --k;
            if (cur[k] < dims[k]) {
                ++cur[k];
                break;
            }
            cur[k] = 1;
            if (k == 0) return cells;
        }
        if (dims.empty()) return cells;
    }
}

}  // namespace detail

/// Builds A_Δ. Columns are cells in lexicographic order with the first
/// variable slowest. When vertex 1 is in the ground set, rows (F, e) with
/// 1 ∈ F come first ordered by (e_1, facet, remaining levels); all other rows
/// follow ordered by (facet, levels). Facets are compared as sorted lists.
inline ModelMatrix build_model_matrix(const SimplicialComplex& delta, const TableDims& dims) {
    const auto& ground = delta.ground_set();
    if (dims.size() != ground.size())
        throw dimension_error("expected " + std::to_string(ground.size()) + " dims, got " +
                              std::to_string(dims.size()));
    for (int d : dims)
        if (d < 2) throw dimension_error("every dimension must be at least 2");

    auto pos = [&](int v) {
        return static_cast<std::size_t>(std::lower_bound(ground.begin(), ground.end(), v) -
                                        ground.begin());
    };

    ModelMatrix out;
    out.ground_set = ground;
    out.dims = dims;
    out.col_labels = detail::enumerate_cells(dims);

    const bool has_one = !ground.empty() && ground.front() == 1;
    // Sort key: (group, e_1, facet, rest); group 0 = contains vertex 1.
    using Key = std::tuple<int, int, Face, std::vector<int>>;
    std::vector<std::pair<Key, RowLabel>> rows;
    for (const auto& f : delta.facets()) {
        TableDims fd;
        for (int v : f) fd.push_back(dims[pos(v)]);
        for (auto& e : detail::enumerate_cells(fd)) {
            const bool first = has_one && !f.empty() && f.front() == 1;
            Key key{first ? 0 : 1, first ? e.front() : 0, f,
                    first ? std::vector<int>(e.begin() + 1, e.end()) : e};
            rows.emplace_back(std::move(key), RowLabel{f, std::move(e)});
        }
    }
    std::sort(rows.begin(), rows.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    out.matrix = IntMatrix(rows.size(), out.col_labels.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const RowLabel& lab = rows[i].second;
        for (std::size_t j = 0; j < out.col_labels.size(); ++j) {
            bool match = true;
            for (std::size_t k = 0; k < lab.facet.size() && match; ++k)
                match = out.col_labels[j][pos(lab.facet[k])] == lab.margin[k];
            if (match) out.matrix(i, j) = 1;
        }
        out.row_labels.push_back(lab);
    }
    return out;
}

/// Λ(A, B, r): r diagonal copies of A over r horizontal copies of B, columns
/// slice-major.
struct LiftedMatrix {
    IntMatrix base_a;
    IntMatrix base_b;
    std::size_t r = 0;
    IntMatrix matrix;
};

inline LiftedMatrix lawrence_lift(const IntMatrix& a, const IntMatrix& b, std::size_t r) {
    if (r < 1) throw precondition_error("lifting needs r >= 1");
    if (a.cols() != b.cols() && b.rows() != 0)
        throw dimension_error("A and B must have the same number of columns");
    const std::size_t n = a.cols();
    const std::size_t d = a.rows();
    const std::size_t p = b.rows();
    IntMatrix m(r * d + p, r * n);
    for (std::size_t j = 0; j < r; ++j) {
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t c = 0; c < n; ++c) m(j * d + i, j * n + c) = a(i, c);
        for (std::size_t i = 0; i < p; ++i)
            for (std::size_t c = 0; c < n; ++c) m(r * d + i, j * n + c) = b(i, c);
    }
    return LiftedMatrix{a, b.rows() == 0 ? IntMatrix(0, n) : b, r, std::move(m)};
}

/// The link/deletion factorization of A_Δ at vertex 1.
struct LinkDeletion {
    SimplicialComplex link_complex;
    std::optional<SimplicialComplex> deletion_complex;  // empty when every facet contains 1
    TableDims rest_dims;                                // d_2, ..., d_n
    ModelMatrix a;                                      // A_{link(Δ,1)}
    IntMatrix b;                                        // A_{Δ∖1}, possibly with no rows
    std::optional<ModelMatrix> b_model;
};

/// Builds A = A_{link(Δ,1)} and B = A_{Δ∖{1}} over the dims of the remaining
/// variables. The empty face yields a single all-ones row.
inline LinkDeletion link_deletion_matrices(const SimplicialComplex& delta, const TableDims& rest) {
    const auto& ground = delta.ground_set();
    if (ground.empty() || ground.front() != 1 || !delta.contains_vertex(1))
        throw precondition_error("vertex 1 must belong to the complex");
    LinkDeletion out;
    out.link_complex = link(delta, 1);
    out.deletion_complex = try_deletion(delta, 1);
    out.rest_dims = rest;
    out.a = build_model_matrix(out.link_complex, rest);
    if (out.deletion_complex) {
        out.b_model = build_model_matrix(*out.deletion_complex, rest);
        out.b = out.b_model->matrix;
    } else {
        out.b = IntMatrix(0, out.a.matrix.cols());
    }
    return out;
}

/// Row permutation relating A_Δ to Λ(A_link, A_del, d_1): entry k is the row
/// of A_Δ equal to row k of the lifting. Throws if the labels do not match up.
inline std::vector<std::size_t> lifting_row_permutation(const SimplicialComplex& delta,
                                                        const TableDims& dims) {
    if (dims.empty()) throw dimension_error("no dims");
    const ModelMatrix full = build_model_matrix(delta, dims);
    const TableDims rest(dims.begin() + 1, dims.end());
    const LinkDeletion ld = link_deletion_matrices(delta, rest);

    std::map<RowLabel, std::size_t> where;
    for (std::size_t i = 0; i < full.row_labels.size(); ++i) where[full.row_labels[i]] = i;

    std::vector<std::size_t> perm;
    const auto r = static_cast<std::size_t>(dims.front());
    for (std::size_t j = 0; j < r; ++j) {
        for (const auto& lab : ld.a.row_labels) {
            RowLabel up;
            up.facet.push_back(1);
            up.facet.insert(up.facet.end(), lab.facet.begin(), lab.facet.end());
            up.margin.push_back(static_cast<int>(j + 1));
            up.margin.insert(up.margin.end(), lab.margin.begin(), lab.margin.end());
            auto it = where.find(up);
            if (it == where.end()) throw precondition_error("lifting row without counterpart");
            perm.push_back(it->second);
        }
    }
    if (ld.b_model)
        for (const auto& lab : ld.b_model->row_labels) {
            auto it = where.find(lab);
            if (it == where.end()) throw precondition_error("lifting row without counterpart");
            perm.push_back(it->second);
        }
    if (perm.size() != full.row_labels.size())
        throw precondition_error("lifting and model matrix have different row counts");
    return perm;
}

inline IntMatrix permute_rows(const IntMatrix& m, const std::vector<std::size_t>& perm) {
    IntMatrix out(perm.size(), m.cols());
    for (std::size_t k = 0; k < perm.size(); ++k)
        for (std::size_t j = 0; j < m.cols(); ++j) out(k, j) = m(perm[k], j);
    return out;
}

}  // namespace lawrence

#endif
