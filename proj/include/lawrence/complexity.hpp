#ifndef LAWRENCE_COMPLEXITY_HPP
#define LAWRENCE_COMPLEXITY_HPP

#include "lawrence/bases.hpp"
#include "lawrence/complex.hpp"
#include "lawrence/errors.hpp"
#include "lawrence/graver.hpp"
#include "lawrence/lattice.hpp"
#include "lawrence/matrix.hpp"
#include "lawrence/model_matrix.hpp"
#include "lawrence/vector.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace lawrence {

/// Max 1-norm over the Graver basis of [M, −M], where M has columns B·v for
/// the given vectors v. The witness Γ is indexed by the doubled columns: entry
/// i counts copies of v_i, entry k+i copies of −v_i.
struct DoubledComplexity {
    std::size_t value = 0;
    IntMatrix m;                       // B·V, p×k
    std::vector<IntVector> vectors;    // the k base vectors
    IntVector gamma;                   // length 2k
    std::size_t graver_size = 0;       // |G(M)| up to sign
    std::vector<IntVector> graver_m;   // G(M), one sign per pair
};

namespace detail {

inline IntMatrix columns_times(const IntMatrix& b, const std::vector<IntVector>& vs) {
    IntMatrix m(b.rows(), vs.size());
    for (std::size_t c = 0; c < vs.size(); ++c) {
        const IntVector col = b * vs[c];
        for (std::size_t r = 0; r < b.rows(); ++r) m(r, c) = col[r];
    }
    return m;
}

}  // namespace detail

/// Graver elements of the doubled matrix [M, −M] are, besides (e_i, e_i) for a
/// nonzero column and (e_i, 0) for a zero column, exactly the pairs
/// (z⁺, z⁻) and their coordinate-wise reshuffles for z ∈ G(M), with equal
/// 1-norm. So the maximum is taken over G(M) and those two small families.
inline DoubledComplexity doubled_complexity(const IntMatrix& b, std::vector<IntVector> vs,
                                            const GraverOptions& opts = {}) {
    DoubledComplexity out;
    const std::size_t k = vs.size();
    out.m = detail::columns_times(b, vs);
    out.vectors = std::move(vs);
    out.gamma = IntVector(2 * k);
    if (k == 0) return out;

    out.graver_m = graver_vectors(out.m, opts);
    out.graver_size = out.graver_m.size();
    Integer best = 0;
    const IntVector* best_z = nullptr;
    for (const auto& z : out.graver_m) {
        const Integer nz = norm1(z);
        if (nz > best) {
            best = nz;
            best_z = &z;
        }
    }
    std::optional<std::size_t> nonzero_col, zero_col;
    for (std::size_t c = 0; c < k; ++c) {
        bool zero = true;
        for (std::size_t r = 0; r < out.m.rows() && zero; ++r) zero = out.m(r, c).is_zero();
        if (zero && !zero_col) zero_col = c;
        if (!zero && !nonzero_col) nonzero_col = c;
    }
    if (best_z && best >= Integer(2)) {
        for (std::size_t i = 0; i < k; ++i) {
            const Integer& zi = (*best_z)[i];
            if (zi.sign() > 0) out.gamma[i] = zi;
            if (zi.sign() < 0) out.gamma[k + i] = -zi;
        }
        out.value = static_cast<std::size_t>(best.to_int64());
    } else if (nonzero_col) {
        out.gamma[*nonzero_col] = 1;
        out.gamma[k + *nonzero_col] = 1;
        out.value = 2;
    } else if (zero_col) {
        out.gamma[*zero_col] = 1;
        out.value = 1;
    }
    return out;
}

/// Slices encoded by Γ: |Γ_i| copies of ±v_i, in index order.
inline std::vector<IntVector> expand_gamma(const std::vector<IntVector>& vs, const IntVector& gamma) {
    const std::size_t k = vs.size();
    if (gamma.size() != 2 * k) throw dimension_error("gamma length must be twice the column count");
    std::vector<IntVector> slices;
    for (std::size_t i = 0; i < 2 * k; ++i) {
        const IntVector& v = vs[i % k];
        const bool negated = (i >= k) != (gamma[i].sign() < 0);
        const std::int64_t copies = abs(gamma[i]).to_int64();
        for (std::int64_t c = 0; c < copies; ++c) slices.push_back(negated ? -v : v);
    }
    return slices;
}

/// Doubled matrix [M, −M].
inline IntMatrix doubled_matrix(const IntMatrix& m) {
    IntMatrix d(m.rows(), 2 * m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            d(r, c) = m(r, c);
            d(r, m.cols() + c) = -m(r, c);
        }
    return d;
}

struct GraverComplexity {
    std::size_t value = 0;
    DoubledComplexity detail;
    /// The lifted vector encoded by Γ, one slice per unit of ‖Γ‖₁.
    std::optional<SlicedVector> witness;
};

inline GraverComplexity graver_complexity(const IntMatrix& a, const IntMatrix& b,
                                          const GraverOptions& opts_a = {},
                                          const GraverOptions& opts_m = {}) {
    if (b.rows() != 0 && a.cols() != b.cols())
        throw dimension_error("A and B must have the same number of columns");
    GraverComplexity out;
    out.detail = doubled_complexity(b, graver_vectors(a, opts_a), opts_m);
    out.value = out.detail.value;
    if (out.value > 0)
        out.witness = SlicedVector::from_slices(expand_gamma(out.detail.vectors, out.detail.gamma));
    return out;
}

/// Lower bound for the Markov complexity from the semi-conformal-free set
/// S(A) (strict mode).
struct LowerBound {
    std::size_t value = 0;
    DoubledComplexity detail;
    std::optional<SlicedVector> witness;
};

inline LowerBound markov_lower_bound(const IntMatrix& a, const IntMatrix& b,
                                     const GraverOptions& opts = {},
                                     const std::vector<IntVector>* graver_a = nullptr) {
    const BasisSet s = semiconformal_free_set(a, SemiconformalMode::strict, opts, graver_a);
    LowerBound out;
    out.detail = doubled_complexity(b, s.vectors, opts);
    out.value = out.detail.value;
    if (out.value > 0)
        out.witness = SlicedVector::from_slices(expand_gamma(out.detail.vectors, out.detail.gamma));
    return out;
}

enum class ComplexityMode { exact, heuristic };

inline const char* to_string(ComplexityMode m) {
    return m == ComplexityMode::exact ? "exact" : "heuristic";
}

struct MarkovComplexityOptions {
    ComplexityMode mode = ComplexityMode::heuristic;
    /// Largest r examined; defaults to the Graver complexity.
    std::optional<std::size_t> r_cap;
    Caps caps;
    Deadline deadline;
};

struct ProfileEntry {
    std::size_t r = 0;
    std::size_t max_type = 0;  // largest type in the universal Markov basis of Λ(A,B,r)
};

struct MarkovComplexity {
    std::size_t value = 0;
    std::vector<ProfileEntry> profile;
    std::size_t r_examined = 0;
    bool heuristic_stop = false;  // stopped by the stabilization rule before r_cap
    std::optional<SlicedVector> witness;
    std::size_t candidates_checked = 0;
};

namespace detail {

/// Decides membership of lifted vectors in the universal Markov basis of
/// Λ(A,B,t): u belongs exactly when u⁺ and u⁻ fall into different components
/// of the fiber through u⁺, where points are linked when their supports meet.
class UniversalMembership {
public:
    UniversalMembership(const IntMatrix& a, const IntMatrix& b, const Caps& caps,
                        const Deadline& deadline)
        : a_(a), b_(b), caps_(caps), deadline_(deadline) {}

    bool member(const std::vector<IntVector>& slices) {
        const std::size_t t = slices.size();
        const IntMatrix& lam = lifted(t);
        const SlicedVector u = SlicedVector::from_slices(slices);
        const IntVector up = positive_part(u.flat());
        const IntVector un = negative_part(u.flat());
        const IntVector degree = lam * up;
        const std::size_t n = up.size();

        std::vector<std::size_t> parent(n);
        for (std::size_t i = 0; i < n; ++i) parent[i] = i;
        auto find = [&](std::size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        auto unite_support = [&](auto&& at) {
            std::size_t first = SIZE_MAX;
            for (std::size_t i = 0; i < n; ++i)
                if (at(i)) {
                    if (first == SIZE_MAX)
                        first = find(i);
                    else
                        parent[find(i)] = first;
                }
            return first;
        };
        const std::size_t p_root = unite_support([&](std::size_t i) { return up[i].sign() > 0; });
        const std::size_t n_root = unite_support([&](std::size_t i) { return un[i].sign() > 0; });
        if (find(p_root) == find(n_root)) return false;  // supports overlap: not primitive

        std::size_t points = 0;
        bool joined = false;
        for_each_fiber_point(lam, degree, [&](const std::vector<std::int64_t>& x) {
            if (++points > caps_.max_fiber_points)
                throw cap_exceeded("max-fiber-points",
                                   "fiber of a type-" + std::to_string(t) + " candidate has more than " +
                                       std::to_string(caps_.max_fiber_points) + " points");
            if (points % 4096 == 0) deadline_.check("markov complexity fiber");
            unite_support([&](std::size_t i) { return x[i] > 0; });
            joined = find(p_root) == find(n_root);
            return !joined;
        });
        return !joined;
    }

    const IntMatrix& lifted(std::size_t t) {
        auto it = lifts_.find(t);
        if (it == lifts_.end()) it = lifts_.emplace(t, lawrence_lift(a_, b_, t).matrix).first;
        return it->second;
    }

private:
    const IntMatrix& a_;
    const IntMatrix& b_;
    Caps caps_;
    Deadline deadline_;
    std::map<std::size_t, IntMatrix> lifts_;
};

/// Slice multisets of the type-maximal Graver elements ("pure" elements):
/// each slice is a signed Graver element of A, coded as i (v_i) or k+i (−v_i).
inline std::vector<std::vector<std::size_t>> pure_elements(const DoubledComplexity& dc) {
    const std::size_t k = dc.vectors.size();
    std::set<std::vector<std::size_t>> out;
    for (const auto& z : dc.graver_m) {
        std::vector<std::size_t> codes;
        for (std::size_t i = 0; i < k; ++i) {
            const std::int64_t c = z[i].to_int64();
            for (std::int64_t r = 0; r < std::abs(c); ++r) codes.push_back(c > 0 ? i : k + i);
        }
        out.insert(std::move(codes));
    }
    for (std::size_t c = 0; c < k; ++c) {
        bool zero = true;
        for (std::size_t r = 0; r < dc.m.rows() && zero; ++r) zero = dc.m(r, c).is_zero();
        out.insert(zero ? std::vector<std::size_t>{c} : std::vector<std::size_t>{c, k + c});
    }
    return {out.begin(), out.end()};
}

/// Enumerates the ways to merge a slice multiset into exactly `t` groups of
/// pairwise sign-compatible slices. Equal codes are sorted together and
/// assigned to non-decreasing groups to skip most duplicates. `prune` sees the
/// partial grouping after each placement and may cut the subtree.
template <class Visit, class Prune>
bool for_each_merge(const std::vector<std::size_t>& codes, std::size_t t,
                    const std::function<bool(std::size_t, std::size_t)>& compatible, Visit&& visit,
                    Prune&& prune) {
    const std::size_t s = codes.size();
    if (t == 0 || t > s) return true;
    std::vector<std::size_t> group(s, 0);
    std::vector<std::vector<std::size_t>> members(t);
    std::size_t used = 0;
    std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
        if (s - i < t - used) return true;  // not enough items left to open groups
        if (i == s) return used == t ? visit(members) : true;
        const std::size_t lo = (i > 0 && codes[i] == codes[i - 1]) ? group[i - 1] : 0;
        const std::size_t hi = std::min(used, t - 1);
        for (std::size_t g = lo; g <= hi; ++g) {
            bool ok = true;
            for (auto o : members[g]) ok = ok && compatible(codes[i], codes[o]);
            if (!ok) continue;
            const bool opened = g == used;
            if (opened) ++used;
            group[i] = g;
            members[g].push_back(i);
            const bool go_on = prune(members) || rec(i + 1);
            members[g].pop_back();
            if (opened) --used;
            if (!go_on) return false;
        }
        return true;
    };
    return rec(0);
}

template <class Visit>
bool for_each_merge(const std::vector<std::size_t>& codes, std::size_t t,
                    const std::function<bool(std::size_t, std::size_t)>& compatible, Visit&& visit) {
    return for_each_merge(codes, t, compatible, std::forward<Visit>(visit),
                          [](const std::vector<std::vector<std::size_t>>&) { return false; });
}

/// Cheap certificate that a (partial) merge is outside the universal Markov
/// basis: a swap x = u⁺ + (g at slice i, −g at slice j), g ∈ ±G(A), that stays
/// nonnegative and overlaps both u⁺ and u⁻ joins their components. Slices are
/// conformal sums, so their positive and negative parts only grow as codes are
/// added and a certificate found early holds for every completion.
inline std::vector<std::int64_t> to_int64_vector(const IntVector& v) {
    std::vector<std::int64_t> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(x.to_int64());
    return out;
}

class SwapFilter {
public:
    SwapFilter(const std::vector<IntVector>& graver_a, std::size_t n) : n_(n) {
        for (const auto& v : graver_a) {
            auto w = to_int64_vector(v);
            moves_.push_back(w);
            for (auto& x : w) x = -x;
            moves_.push_back(std::move(w));
        }
    }

    /// `pos[i]`/`neg[i]` are the positive/negative parts of slice i.
    bool rules_out(const std::vector<std::vector<std::int64_t>>& pos,
                   const std::vector<std::vector<std::int64_t>>& neg) const {
        const std::size_t t = pos.size();
        std::size_t nonzero_pos = 0;
        std::vector<bool> has_pos(t, false);
        for (std::size_t i = 0; i < t; ++i) {
            for (auto x : pos[i]) has_pos[i] = has_pos[i] || x > 0;
            nonzero_pos += has_pos[i];
        }
        for (std::size_t i = 0; i < t; ++i)
            for (std::size_t j = 0; j < t; ++j) {
                if (i == j) continue;
                const bool other_pos = nonzero_pos > std::size_t(has_pos[i]) + std::size_t(has_pos[j]);
                for (const auto& g : moves_) {
                    bool ok = true, meets_pos = other_pos, meets_neg = false;
                    for (std::size_t c = 0; c < n_ && ok; ++c) {
                        const std::int64_t xi = pos[i][c] + g[c];
                        const std::int64_t xj = pos[j][c] - g[c];
                        if (xi < 0 || xj < 0) ok = false;
                        if ((pos[i][c] > 0 && xi > 0) || (pos[j][c] > 0 && xj > 0)) meets_pos = true;
                        if ((neg[i][c] > 0 && xi > 0) || (neg[j][c] > 0 && xj > 0)) meets_neg = true;
                    }
                    if (ok && meets_pos && meets_neg) return true;
                }
            }
        return false;
    }

private:
    std::size_t n_;
    std::vector<std::vector<std::int64_t>> moves_;
};

}  // namespace detail

/// Markov complexity through the Graver orbit: every Graver element of
/// Λ(A,B,t) is, up to slice order, a merge of a pure element (one signed
/// Graver element of A per slice, encoded by G(B·G(A))). Type-t candidates are
/// the merges into t compatible groups; each is tested for membership in the
/// universal Markov basis of Λ(A,B,t). Zero slices do not change membership,
/// so the type-t members at level r ≥ t are those found at level t.
inline MarkovComplexity markov_complexity(const IntMatrix& a, const IntMatrix& b,
                                          const DoubledComplexity& gc,
                                          const MarkovComplexityOptions& opts = {}) {
    if (!a.is_nonnegative() || a.has_zero_column())
        throw precondition_error("A must be nonnegative without zero columns");
    MarkovComplexity out;
    if (gc.value == 0) return out;
    const std::size_t cap = std::max<std::size_t>(2, std::min(opts.r_cap.value_or(gc.value), gc.value));
    if (cap < 1) throw precondition_error("r cap must be at least 1");

    const std::size_t k = gc.vectors.size();
    auto signed_vec = [&](std::size_t code) { return code < k ? gc.vectors[code] : -gc.vectors[code - k]; };
    std::map<std::pair<std::size_t, std::size_t>, bool> compat_cache;
    const std::function<bool(std::size_t, std::size_t)> compatible = [&](std::size_t x, std::size_t y) {
        auto key = std::minmax(x, y);
        auto it = compat_cache.find(key);
        if (it != compat_cache.end()) return it->second;
        const bool c = sign_compatible(signed_vec(x), signed_vec(y));
        compat_cache.emplace(key, c);
        return c;
    };

    const auto pure = detail::pure_elements(gc);
    detail::UniversalMembership oracle(a, b, opts.caps, opts.deadline);
    const std::size_t n = a.cols();
    const detail::SwapFilter filter(gc.vectors, n);
    std::vector<std::vector<std::int64_t>> code_vec(2 * k);
    for (std::size_t c = 0; c < 2 * k; ++c) code_vec[c] = detail::to_int64_vector(signed_vec(c));
    std::unordered_set<IntVector, IntVectorHash> seen;

    // Canonical form up to slice order and global sign.
    auto canonical = [&](std::vector<IntVector> slices) {
        std::vector<IntVector> neg;
        for (const auto& s : slices) neg.push_back(-s);
        std::sort(slices.begin(), slices.end());
        std::sort(neg.begin(), neg.end());
        return std::min(slices, neg);
    };

    std::vector<bool> achieved(cap + 1, false);
    std::size_t current = 0;
    std::size_t streak = 0;  // consecutive levels with unchanged profile
    for (std::size_t t = 1; t <= cap; ++t) {
        std::optional<std::vector<IntVector>> found;
        for (const auto& codes : pure) {
            if (codes.size() < t) continue;
            std::vector<std::vector<std::int64_t>> pos(t, std::vector<std::int64_t>(n)), neg = pos;
            std::size_t nodes = 0;
            auto prune = [&](const std::vector<std::vector<std::size_t>>& groups) {
                if (t < 2) return false;
                if (++nodes % 65536 == 0) opts.deadline.check("markov complexity");
                for (std::size_t g = 0; g < t; ++g) {
                    std::fill(pos[g].begin(), pos[g].end(), 0);
                    std::fill(neg[g].begin(), neg[g].end(), 0);
                    for (auto q : groups[g]) {
                        const auto& v = code_vec[codes[q]];
                        for (std::size_t c = 0; c < n; ++c) (v[c] > 0 ? pos[g][c] : neg[g][c]) += std::abs(v[c]);
                    }
                }
                return filter.rules_out(pos, neg);
            };
            detail::for_each_merge(codes, t, compatible, [&](const std::vector<std::vector<std::size_t>>& groups) {
                std::vector<IntVector> slices;
                for (const auto& g : groups) {
                    IntVector sum = signed_vec(codes[g.front()]);
                    for (std::size_t q = 1; q < g.size(); ++q) sum += signed_vec(codes[g[q]]);
                    slices.push_back(std::move(sum));
                }
                auto canon = canonical(std::move(slices));
                if (!seen.insert(SlicedVector::from_slices(canon).flat()).second) return true;
                ++out.candidates_checked;
                if (out.candidates_checked > opts.caps.max_basis_elements)
                    throw cap_exceeded("max-basis-elements",
                                       "more than " + std::to_string(opts.caps.max_basis_elements) +
                                           " lifted candidates");
                opts.deadline.check("markov complexity");
                if (oracle.member(canon)) {
                    found = std::move(canon);
                    return false;
                }
                return true;
            }, prune);
            if (found) break;
        }
        if (found) {
            achieved[t] = true;
            out.witness = SlicedVector::from_slices(*found);
        }
        const std::size_t before = current;
        if (achieved[t]) current = t;
        out.r_examined = t;
        if (t >= 2) {
            out.profile.push_back(ProfileEntry{t, current});
            streak = current == before ? streak + 1 : 0;
            if (opts.mode == ComplexityMode::heuristic && streak >= 2 && t > current && t < cap) {
                out.heuristic_stop = true;
                break;
            }
        }
    }
    out.value = current;
    // Keep the witness of the maximal type only.
    if (out.witness && type_of(*out.witness) != out.value) out.witness.reset();
    return out;
}

/// Reference route for small r: the universal Markov basis of each lifting
/// computed directly. Entry r−2 holds the max type for Λ(A,B,r).
inline std::vector<ProfileEntry> markov_profile_direct(const IntMatrix& a, const IntMatrix& b,
                                                       std::size_t r_max, const MarkovOptions& opts = {}) {
    std::vector<ProfileEntry> out;
    for (std::size_t r = 2; r <= r_max; ++r) {
        const IntMatrix lam = lawrence_lift(a, b, r).matrix;
        const BasisSet u = universal_markov_basis(lam, opts);
        std::size_t best = 0;
        for (const auto& v : u.vectors) best = std::max(best, type_of(v, r, a.cols()));
        out.push_back(ProfileEntry{r, best});
    }
    return out;
}

/// Reference Graver complexity: max type over G(Λ(A,B,r)) for r up to r_max.
inline std::size_t graver_max_type_direct(const IntMatrix& a, const IntMatrix& b, std::size_t r) {
    const IntMatrix lam = lawrence_lift(a, b, r).matrix;
    std::size_t best = 0;
    for (const auto& v : graver_vectors(lam)) best = std::max(best, type_of(v, r, a.cols()));
    return best;
}

// ---------------------------------------------------------------------------
// Per-model pipeline

/// A value that may be missing, with the reason it is missing.
struct Outcome {
    std::optional<std::size_t> value;
    std::string reason;  // empty when value is present
};

struct ComplexityOptions {
    ComplexityMode mode = ComplexityMode::heuristic;
    Caps caps;
    /// Save/restore hooks for Graver stages, keyed by a stage name.
    std::function<void(const std::string&, const GraverCheckpoint&)> checkpoint;
    std::function<std::optional<GraverCheckpoint>(const std::string&)> resume;
};

struct ComplexityReport {
    SimplicialComplex model;
    TableDims dims_rest;
    ComplexityMode mode = ComplexityMode::heuristic;
    Caps caps;
    bool trivial_kernel = false;

    // Table-format values: a kernel with only type-1 moves is still reported
    // at format 2, since the varying dimension is at least 2.
    Outcome graver_complexity, markov_complexity, lower_bound;
    // Plain largest types.
    Outcome graver_max_type, markov_max_type, lower_bound_max_type;

    std::vector<ProfileEntry> profile;
    bool heuristic_stop = false;
    std::size_t r_examined = 0;

    std::size_t graver_a_size = 0;
    std::size_t graver_m_size = 0;
    std::size_t semiconformal_size = 0;
    std::size_t link_columns = 0;
    std::size_t deletion_rows = 0;

    std::optional<IntVector> graver_gamma;
    std::optional<SlicedVector> graver_witness;
    std::optional<IntVector> lower_bound_gamma;
    std::optional<SlicedVector> markov_witness;
};

inline std::size_t table_format(std::size_t max_type) { return max_type == 0 ? 0 : std::max<std::size_t>(2, max_type); }

inline ComplexityReport model_complexities(const SimplicialComplex& delta, const TableDims& dims_rest,
                                           const ComplexityOptions& opts = {}) {
    if (!delta.contains_vertex(1)) throw precondition_error("vertex 1 must belong to the complex");
    ComplexityReport rep;
    rep.model = delta;
    rep.dims_rest = dims_rest;
    rep.mode = opts.mode;
    rep.caps = opts.caps;
    const LinkDeletion ld = link_deletion_matrices(delta, dims_rest);
    const IntMatrix& a = ld.a.matrix;
    const IntMatrix& b = ld.b;
    rep.link_columns = a.cols();
    rep.deletion_rows = b.rows();

    const Deadline deadline(opts.caps.time_limit);
    auto graver_opts = [&](const std::string& stage) {
        GraverOptions g;
        g.max_elements = opts.caps.max_basis_elements;
        g.deadline = deadline;
        if (opts.checkpoint)
            g.checkpoint = [&, stage](const GraverCheckpoint& cp) { opts.checkpoint(stage, cp); };
        if (opts.resume) g.resume = opts.resume(stage);
        return g;
    };
    auto missing = [](const std::string& why) { return Outcome{std::nullopt, why}; };
    auto set_pair = [](Outcome& table, Outcome& raw, std::size_t v) {
        raw = Outcome{v, {}};
        table = Outcome{table_format(v), {}};
    };

    std::vector<IntVector> ga;
    try {
        ga = graver_vectors(a, graver_opts("graver-link"));
    } catch (const cap_exceeded& e) {
        for (Outcome* o : {&rep.graver_complexity, &rep.markov_complexity, &rep.lower_bound,
                           &rep.graver_max_type, &rep.markov_max_type, &rep.lower_bound_max_type})
            *o = missing(e.what());
        return rep;
    }
    rep.graver_a_size = ga.size();
    if (ga.empty()) {
        rep.trivial_kernel = true;
        for (auto [t, r] : {std::pair{&rep.graver_complexity, &rep.graver_max_type},
                            std::pair{&rep.markov_complexity, &rep.markov_max_type},
                            std::pair{&rep.lower_bound, &rep.lower_bound_max_type}})
            set_pair(*t, *r, 0);
        return rep;
    }

    std::optional<DoubledComplexity> gc;
    try {
        gc = doubled_complexity(b, ga, graver_opts("graver-lifted"));
        rep.graver_m_size = gc->graver_size;
        set_pair(rep.graver_complexity, rep.graver_max_type, gc->value);
        rep.graver_gamma = gc->gamma;
        rep.graver_witness = SlicedVector::from_slices(expand_gamma(gc->vectors, gc->gamma));
    } catch (const cap_exceeded& e) {
        rep.graver_complexity = rep.graver_max_type = missing(e.what());
    }

    try {
        const BasisSet s = semiconformal_free_set(a, SemiconformalMode::strict, {}, &ga);
        rep.semiconformal_size = s.size();
        const DoubledComplexity lb = doubled_complexity(b, s.vectors, graver_opts("graver-semiconformal"));
        set_pair(rep.lower_bound, rep.lower_bound_max_type, lb.value);
        rep.lower_bound_gamma = lb.gamma;
    } catch (const cap_exceeded& e) {
        rep.lower_bound = rep.lower_bound_max_type = missing(e.what());
    }

    if (!gc) {
        rep.markov_complexity = rep.markov_max_type = missing("needs the Graver complexity");
        return rep;
    }
    try {
        MarkovComplexityOptions mo;
        mo.mode = opts.mode;
        mo.r_cap = opts.caps.max_r;
        mo.caps = opts.caps;
        mo.deadline = deadline;
        const MarkovComplexity mc = markov_complexity(a, b, *gc, mo);
        rep.profile = mc.profile;
        rep.heuristic_stop = mc.heuristic_stop;
        rep.r_examined = mc.r_examined;
        rep.markov_witness = mc.witness;
        if (opts.caps.max_r && *opts.caps.max_r < gc->value && mc.value < gc->value &&
            opts.mode == ComplexityMode::exact && !mc.heuristic_stop) {
            // A smaller cap leaves larger types unexplored; the value is a lower bound only.
            rep.markov_complexity = rep.markov_max_type =
                missing("max-r " + std::to_string(*opts.caps.max_r) +
                        " below the Graver complexity; largest type found " + std::to_string(mc.value));
        } else {
            set_pair(rep.markov_complexity, rep.markov_max_type, mc.value);
        }
    } catch (const cap_exceeded& e) {
        rep.markov_complexity = rep.markov_max_type = missing(e.what());
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Reducible models

struct ReducibleCheck {
    Decomposition decomposition;
    std::size_t l1 = 0, l2 = 0;   // max 1-norms of the sub-models' universal bases
    std::size_t full = 0;         // max 1-norm for the whole model
    std::size_t bound = 0;        // max{4, l1, l2}
    bool holds = false;
};

namespace detail {

inline TableDims restrict_dims(const SimplicialComplex& whole, const TableDims& d,
                               const std::vector<int>& vertices) {
    TableDims out;
    for (int v : vertices) {
        auto it = std::lower_bound(whole.ground_set().begin(), whole.ground_set().end(), v);
        if (it == whole.ground_set().end() || *it != v) throw precondition_error("vertex outside the model");
        out.push_back(d[static_cast<std::size_t>(it - whole.ground_set().begin())]);
    }
    return out;
}

inline std::size_t universal_max_norm(const SimplicialComplex& delta, const TableDims& d,
                                      const MarkovOptions& opts) {
    const IntMatrix m = build_model_matrix(delta, d).matrix;
    std::size_t best = 0;
    for (const auto& v : universal_markov_basis(m, opts).vectors)
        best = std::max<std::size_t>(best, static_cast<std::size_t>(norm1(v).to_int64()));
    return best;
}

}  // namespace detail

inline ReducibleCheck reducible_norm_check(const SimplicialComplex& delta, const TableDims& d,
                                           const MarkovOptions& opts = {}) {
    auto dec = is_reducible(delta);
    if (!dec) throw precondition_error("complex is not reducible");
    if (d.size() != delta.ground_set().size()) throw dimension_error("dims must match the ground set");
    ReducibleCheck out{*dec};
    out.l1 = detail::universal_max_norm(dec->first,
                                        detail::restrict_dims(delta, d, dec->first.ground_set()), opts);
    out.l2 = detail::universal_max_norm(dec->second,
                                        detail::restrict_dims(delta, d, dec->second.ground_set()), opts);
    out.full = detail::universal_max_norm(delta, d, opts);
    out.bound = std::max<std::size_t>({4, out.l1, out.l2});
    out.holds = out.full == out.bound;
    return out;
}

/// The m×m×2 move for Δ = [12][13][23] built from two cyclic permutation
/// patterns; cells in lexicographic order with the first index slowest.
inline IntVector big_move_generator(int m) {
    if (m < 2) throw precondition_error("m must be at least 2");
    const auto mm = static_cast<std::size_t>(m);
    IntVector u(mm * mm * 2);
    auto at = [&](int i, int j, int k) -> Integer& {
        return u[((static_cast<std::size_t>(i) - 1) * mm + static_cast<std::size_t>(j) - 1) * 2 +
                 static_cast<std::size_t>(k) - 1];
    };
    auto next = [&](int i) { return i == m ? 1 : i + 1; };
    for (int i = 1; i <= m; ++i) {
        at(i, i, 1) += 1;
        at(i, next(i), 2) += 1;
        at(i, i, 2) -= 1;
        at(i, next(i), 1) -= 1;
    }
    return u;
}

}  // namespace lawrence

#endif
