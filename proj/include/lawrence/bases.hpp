#ifndef LAWRENCE_BASES_HPP
#define LAWRENCE_BASES_HPP

#include "lawrence/errors.hpp"
#include "lawrence/graver.hpp"
#include "lawrence/lattice.hpp"
#include "lawrence/matrix.hpp"
#include "lawrence/vector.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace lawrence {

enum class BasisKind { graver, markov_minimal, markov_universal, semiconformal_free };

inline const char* to_string(BasisKind k) {
    switch (k) {
        case BasisKind::graver: return "graver";
        case BasisKind::markov_minimal: return "markov_minimal";
        case BasisKind::markov_universal: return "markov_universal";
        case BasisKind::semiconformal_free: return "semiconformal_free";
    }
    return "?";
}

/// Sign-canonical, sorted, duplicate-free set of kernel vectors.
struct BasisSet {
    BasisKind kind = BasisKind::graver;
    std::string matrix_id;
    std::vector<IntVector> vectors;

    [[nodiscard]] std::size_t size() const { return vectors.size(); }
    [[nodiscard]] bool contains(const IntVector& v) const {
        return std::binary_search(vectors.begin(), vectors.end(), sign_canonical(v));
    }
    [[nodiscard]] bool subset_of(const BasisSet& other) const {
        return std::includes(other.vectors.begin(), other.vectors.end(), vectors.begin(),
                             vectors.end());
    }
};

/// A cross-check between basis computations failed; the result is not
/// trustworthy and is withheld.
struct cross_check_failure : std::logic_error {
    using std::logic_error::logic_error;
};

/// Short deterministic identifier of a matrix: shape plus a content hash.
inline std::string matrix_id(const IntMatrix& m) {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ULL;
        }
        h ^= ';';
        h *= 1099511628211ULL;
    };
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) mix(m(i, j).str());
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + "-" + buf;
}

inline BasisSet make_basis(BasisKind kind, const IntMatrix& m, std::vector<IntVector> vs) {
    for (auto& v : vs) v = sign_canonical(std::move(v));
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return BasisSet{kind, matrix_id(m), std::move(vs)};
}

inline BasisSet graver_basis(const IntMatrix& m, const GraverOptions& opts = {}) {
    return BasisSet{BasisKind::graver, matrix_id(m), graver_vectors(m, opts)};
}

inline BasisSet graver_bruteforce(const IntMatrix& m, std::int64_t box) {
    return BasisSet{BasisKind::graver, matrix_id(m), graver_bruteforce_vectors(m, box)};
}

/// Grows the brute-force box until two consecutive sizes agree.
inline BasisSet graver_bruteforce_stable(const IntMatrix& m, std::int64_t start = 1,
                                         std::int64_t max_box = 6) {
    BasisSet prev = graver_bruteforce(m, start);
    for (std::int64_t box = start + 1; box <= max_box; ++box) {
        BasisSet next = graver_bruteforce(m, box);
        if (next.vectors == prev.vectors) return next;
        prev = std::move(next);
    }
    throw cap_exceeded("brute-force-box", "no stable box up to " + std::to_string(max_box));
}

namespace detail {

using Point = std::vector<std::int64_t>;

struct PointHash {
    std::size_t operator()(const Point& p) const noexcept {
        std::size_t h = p.size();
        for (auto x : p) h ^= std::hash<std::int64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n), comps_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[std::max(a, b)] = std::min(a, b);
        --comps_;
        return true;
    }
    [[nodiscard]] std::size_t components() const { return comps_; }

private:
    std::vector<std::size_t> parent_;
    std::size_t comps_;
};

inline Point to_point(const IntVector& v) {
    Point p(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) p[i] = v[i].to_int64();
    return p;
}

inline bool degree_le(const IntVector& a, const IntVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

/// The sorted points of a fiber with a lookup table.
struct FiberPoints {
    std::vector<Point> points;
    std::unordered_map<Point, std::size_t, PointHash> index;
};

/// Fibers keyed by degree, enumerated once.
class FiberCache {
public:
    FiberCache(const IntMatrix& m, std::size_t max_points) : m_(m), max_points_(max_points) {}

    const FiberPoints& get(const IntVector& degree) {
        auto it = cache_.find(degree);
        if (it != cache_.end()) return *it->second;
        auto fp = std::make_unique<FiberPoints>();
        for (auto& x : fiber_enumerate(m_, degree, max_points_).points) fp->points.push_back(to_point(x));
        for (std::size_t i = 0; i < fp->points.size(); ++i) fp->index.emplace(fp->points[i], i);
        return *cache_.emplace(degree, std::move(fp)).first->second;
    }

private:
    const IntMatrix& m_;
    std::size_t max_points_;
    std::map<IntVector, std::unique_ptr<FiberPoints>> cache_;
};

/// A move with its degree m·v⁺ (= m·v⁻).
struct Move {
    Point v;
    IntVector degree;
};

inline std::vector<Move> make_moves(const IntMatrix& m, const std::vector<IntVector>& vs) {
    std::vector<Move> out;
    out.reserve(vs.size());
    for (const auto& v : vs) out.push_back(Move{to_point(v), m * positive_part(v)});
    return out;
}

/// Number of connected components of a fiber under the given moves (used in
/// both directions). Moves whose degree exceeds the fiber's are skipped.
inline std::size_t components_under(const FiberPoints& f, const IntVector& degree,
                                    const std::vector<const Move*>& moves) {
    UnionFind uf(f.points.size());
    Point y;
    for (const Move* mv : moves) {
        if (!degree_le(mv->degree, degree)) continue;
        for (std::size_t i = 0; i < f.points.size() && uf.components() > 1; ++i) {
            const Point& x = f.points[i];
            y = x;
            bool ok = true;
            for (std::size_t c = 0; c < y.size(); ++c) {
                y[c] += mv->v[c];
                if (y[c] < 0) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            auto it = f.index.find(y);
            if (it != f.index.end()) uf.unite(i, it->second);
        }
        if (uf.components() <= 1) break;
    }
    return uf.components();
}

/// Component id per fiber point, where points sharing a positive coordinate
/// are linked.
inline std::vector<std::size_t> overlap_components(const FiberPoints& f) {
    const std::size_t n = f.points.empty() ? 0 : f.points.front().size();
    UnionFind uf(f.points.size());
    std::vector<std::size_t> first(n, SIZE_MAX);
    for (std::size_t i = 0; i < f.points.size(); ++i)
        for (std::size_t c = 0; c < n; ++c)
            if (f.points[i][c] > 0) {
                if (first[c] == SIZE_MAX)
                    first[c] = i;
                else
                    uf.unite(first[c], i);
            }
    std::vector<std::size_t> comp(f.points.size());
    for (std::size_t i = 0; i < f.points.size(); ++i) comp[i] = uf.find(i);
    return comp;
}

/// Distinct degrees m·v⁺ of the given vectors, sorted.
inline std::vector<IntVector> degrees_of(const IntMatrix& m, const std::vector<IntVector>& vs) {
    std::set<IntVector> ds;
    for (const auto& v : vs) ds.insert(m * positive_part(v));
    return {ds.begin(), ds.end()};
}

inline void require_markov_matrix(const IntMatrix& m) {
    if (!m.is_nonnegative() || m.has_zero_column())
        throw precondition_error("matrix must be nonnegative without zero columns");
}

}  // namespace detail

struct MarkovOptions {
    Caps caps;
    GraverOptions graver;
    /// Run the containment cross-checks for the universal basis.
    bool cross_checks = true;
};

/// Connectivity test on the finite degree set {m·v⁺ : v ∈ graver}.
inline bool is_markov_basis(const BasisSet& cand, const IntMatrix& m, const BasisSet& graver,
                            const Caps& caps = {}) {
    detail::require_markov_matrix(m);
    for (const auto& v : cand.vectors)
        if (!m.annihilates(v)) throw precondition_error("candidate move is not in the kernel");
    const auto moves = detail::make_moves(m, cand.vectors);
    std::vector<const detail::Move*> ptrs;
    for (const auto& mv : moves) ptrs.push_back(&mv);
    detail::FiberCache cache(m, caps.max_fiber_points);
    for (const auto& b : detail::degrees_of(m, graver.vectors)) {
        const auto& f = cache.get(b);
        if (detail::components_under(f, b, ptrs) > 1) return false;
    }
    return true;
}

namespace detail {

/// Greedy extraction from a Graver basis in descending (1-norm, lex) order.
/// Removing v keeps the Markov property exactly when the fiber of degree
/// m·v⁺ stays connected without v: any use of v in a larger fiber is a
/// translate of a step inside that fiber.
inline std::vector<IntVector> greedy_minimal(const IntMatrix& m, const std::vector<IntVector>& graver,
                                             FiberCache& cache) {
    const auto moves = make_moves(m, graver);
    std::vector<std::size_t> order(graver.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<Integer> norms(graver.size());
    for (std::size_t i = 0; i < graver.size(); ++i) norms[i] = norm1(graver[i]);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (norms[a] != norms[b]) return norms[a] > norms[b];
        return graver[a] > graver[b];
    });
    std::vector<bool> alive(graver.size(), true);
    for (std::size_t idx : order) {
        alive[idx] = false;
        std::vector<const Move*> ptrs;
        for (std::size_t k = 0; k < graver.size(); ++k)
            if (alive[k] && degree_le(moves[k].degree, moves[idx].degree)) ptrs.push_back(&moves[k]);
        const auto& f = cache.get(moves[idx].degree);
        if (components_under(f, moves[idx].degree, ptrs) > 1) alive[idx] = true;
    }
    std::vector<IntVector> out;
    for (std::size_t k = 0; k < graver.size(); ++k)
        if (alive[k]) out.push_back(graver[k]);
    return out;
}

inline std::vector<IntVector> overlap_moves(const IntMatrix& m, const std::vector<IntVector>& graver,
                                            FiberCache& cache) {
    std::set<IntVector> out;
    for (const auto& b : degrees_of(m, graver)) {
        const auto& f = cache.get(b);
        const auto comp = overlap_components(f);
        if (std::all_of(comp.begin(), comp.end(), [&](std::size_t c) { return c == comp.front(); }))
            continue;
        for (std::size_t i = 0; i < f.points.size(); ++i)
            for (std::size_t k = i + 1; k < f.points.size(); ++k) {
                if (comp[i] == comp[k]) continue;
                IntVector v(f.points[i].size());
                for (std::size_t c = 0; c < v.size(); ++c) v[c] = f.points[i][c] - f.points[k][c];
                out.insert(sign_canonical(std::move(v)));
            }
    }
    return {out.begin(), out.end()};
}

}  // namespace detail

inline BasisSet minimal_markov_basis(const IntMatrix& m, const MarkovOptions& opts = {}) {
    detail::require_markov_matrix(m);
    const auto g = graver_vectors(m, opts.graver);
    detail::FiberCache cache(m, opts.caps.max_fiber_points);
    return make_basis(BasisKind::markov_minimal, m, detail::greedy_minimal(m, g, cache));
}

enum class SemiconformalMode { strict, one_sided };

/// Graver elements without a semi-conformal decomposition. Strict mode keeps
/// v only when neither v nor −v decomposes; one-sided mode keeps v when
/// either orientation is decomposition-free.
inline BasisSet semiconformal_free_set(const IntMatrix& m,
                                       SemiconformalMode mode = SemiconformalMode::strict,
                                       const GraverOptions& gopts = {},
                                       const std::vector<IntVector>* graver = nullptr) {
    detail::require_markov_matrix(m);
    std::vector<IntVector> g = graver ? *graver : graver_vectors(m, gopts);
    std::vector<IntVector> out;
    for (const auto& v : g) {
        const bool plus_free = !has_semiconformal_decomposition(v, m);
        const bool keep = mode == SemiconformalMode::strict
                              ? plus_free && !has_semiconformal_decomposition(-v, m)
                              : plus_free || !has_semiconformal_decomposition(-v, m);
        if (keep) out.push_back(v);
    }
    return make_basis(BasisKind::semiconformal_free, m, std::move(out));
}

/// Union of all minimal Markov bases via support-overlap components of the
/// Graver-degree fibers. With cross-checks enabled the result is verified to
/// contain S(A) and the greedy minimal basis, to lie inside the Graver basis,
/// and to be a Markov basis.
inline BasisSet universal_markov_basis(const IntMatrix& m, const MarkovOptions& opts = {}) {
    detail::require_markov_matrix(m);
    const auto g = graver_vectors(m, opts.graver);
    detail::FiberCache cache(m, opts.caps.max_fiber_points);
    BasisSet u = make_basis(BasisKind::markov_universal, m, detail::overlap_moves(m, g, cache));
    if (!opts.cross_checks) return u;

    const BasisSet gb{BasisKind::graver, matrix_id(m), g};
    if (!u.subset_of(gb)) throw cross_check_failure("universal Markov basis not inside the Graver basis");
    const BasisSet minimal =
        make_basis(BasisKind::markov_minimal, m, detail::greedy_minimal(m, g, cache));
    if (!minimal.subset_of(u))
        throw cross_check_failure("greedy minimal Markov basis not inside the universal basis");
    const BasisSet s = semiconformal_free_set(m, SemiconformalMode::one_sided, opts.graver, &g);
    if (!s.subset_of(u)) throw cross_check_failure("S(A) not inside the universal Markov basis");
    if (!is_markov_basis(u, m, gb, opts.caps))
        throw cross_check_failure("universal Markov basis fails the connectivity test");
    return u;
}

}  // namespace lawrence

#endif
