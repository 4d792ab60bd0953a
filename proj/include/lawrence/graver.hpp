#ifndef LAWRENCE_GRAVER_HPP
#define LAWRENCE_GRAVER_HPP

#include "lawrence/errors.hpp"
#include "lawrence/lattice.hpp"
#include "lawrence/matrix.hpp"
#include "lawrence/vector.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

namespace lawrence {

/// State between lifting stages: a symmetric generating set with the
/// positive-sum property on the listed coordinates.
struct GraverCheckpoint {
    std::vector<IntVector> generators;
    std::vector<std::size_t> lifted;
};

struct GraverOptions {
    std::size_t max_elements = Caps{}.max_basis_elements;
    Deadline deadline;
    /// Called after each completed lifting stage.
    std::function<void(const GraverCheckpoint&)> checkpoint;
    /// Continue from a saved stage of the same matrix.
    std::optional<GraverCheckpoint> resume;
    /// Skip the unimodular projection and run a single Pottier completion on
    /// all coordinates.
    bool force_pottier = false;
};

/// Thrown when the generator count passes `max_elements`; carries the
/// generators reached so far (not a Graver basis).
struct graver_cap_exceeded : cap_exceeded {
    graver_cap_exceeded(const std::string& detail, std::vector<IntVector> partial_set)
        : cap_exceeded("max-basis-elements", detail), partial(std::move(partial_set)) {}
    std::vector<IntVector> partial;
};

namespace detail {

struct narrow_overflow {};

inline std::int64_t s_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw narrow_overflow{};
    return r;
}
inline std::int64_t s_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw narrow_overflow{};
    return r;
}
inline Integer s_add(const Integer& a, const Integer& b) { return a + b; }
inline Integer s_sub(const Integer& a, const Integer& b) { return a - b; }
inline int s_sign(std::int64_t a) { return (a > 0) - (a < 0); }
inline int s_sign(const Integer& a) { return a.sign(); }
inline bool s_mag_le(std::int64_t a, std::int64_t b) { return a > 0 ? a <= b : a >= b; }
inline bool s_mag_le(const Integer& a, const Integer& b) {
    return a.sign() > 0 ? a <= b : a >= b;
}
inline std::int64_t s_from(const Integer& x, std::int64_t*) { return x.to_int64(); }
inline Integer s_from(const Integer& x, Integer*) { return x; }
inline Integer s_to(std::int64_t x) { return Integer(x); }
inline Integer s_to(const Integer& x) { return x; }
inline std::int64_t s_abs_i64(std::int64_t a) { return a < 0 ? -a : a; }
inline std::int64_t s_abs_i64(const Integer& a) {
    return a.is_small() ? s_abs_i64(a.small_value()) : INT64_MAX / 4;
}

using Word = std::uint64_t;

inline bool subset_words(const Word* a, const Word* b, std::size_t words) {
    for (std::size_t w = 0; w < words; ++w)
        if (a[w] & ~b[w]) return false;
    return true;
}

/// Flat store of lattice vectors with their sign supports.
template <class T>
class VectorStore {
public:
    explicit VectorStore(std::size_t n) : n_(n), words_((n + 63) / 64) {}

    [[nodiscard]] std::size_t size() const { return count_; }
    [[nodiscard]] std::size_t dim() const { return n_; }
    [[nodiscard]] std::size_t words() const { return words_; }
    const T* vec(std::size_t i) const { return data_.data() + i * n_; }
    const Word* pos(std::size_t i) const { return pos_.data() + i * words_; }
    const Word* neg(std::size_t i) const { return neg_.data() + i * words_; }

    std::size_t push(const std::vector<T>& v) {
        data_.insert(data_.end(), v.begin(), v.end());
        pos_.resize(pos_.size() + words_, 0);
        neg_.resize(neg_.size() + words_, 0);
        Word* p = pos_.data() + count_ * words_;
        Word* q = neg_.data() + count_ * words_;
        for (std::size_t i = 0; i < n_; ++i) {
            const int s = s_sign(v[i]);
            if (s > 0) p[i / 64] |= Word{1} << (i % 64);
            if (s < 0) q[i / 64] |= Word{1} << (i % 64);
        }
        return count_++;
    }

    [[nodiscard]] std::vector<T> get(std::size_t i) const {
        return std::vector<T>(vec(i), vec(i) + n_);
    }

private:
    std::size_t n_, words_;
    std::size_t count_ = 0;
    std::vector<T> data_;
    std::vector<Word> pos_, neg_;
};

/// Index over sign supports restricted to a coordinate set: finds stored
/// vectors whose restricted positive/negative supports are subsets of a
/// query's. Leaves hold small buckets and split on a discriminating bit.
class SupportTree {
public:
    SupportTree(std::size_t words, std::vector<Word> key_mask)
        : words_(words), mask_(std::move(key_mask)) {
        nodes_.push_back(Node{});
    }

    /// keys: two word arrays (positive bits, negative bits), already masked.
    void insert(std::uint32_t id, const Word* kp, const Word* kn) {
        keys_.resize(std::max<std::size_t>(keys_.size(), (id + 1) * 2 * words_));
        std::copy(kp, kp + words_, keys_.data() + id * 2 * words_);
        std::copy(kn, kn + words_, keys_.data() + id * 2 * words_ + words_);
        std::size_t at = 0;
        while (nodes_[at].bit >= 0) at = nodes_[at].child[has_bit(id, nodes_[at].bit)];
        nodes_[at].items.push_back(id);
        if (nodes_[at].items.size() > kLeaf) split(at);
    }

    /// Visits candidates whose keys are subsets of (qp, qn); stops when
    /// `visit` returns true. Returns whether it stopped.
    template <class F>
    bool find(const Word* qp, const Word* qn, F&& visit) const {
        return find_from(0, qp, qn, visit);
    }

private:
    static constexpr std::size_t kLeaf = 24;
    struct Node {
        int bit = -1;
        std::size_t child[2] = {0, 0};
        std::vector<std::uint32_t> items;
    };

    [[nodiscard]] bool has_bit(std::uint32_t id, int bit) const {
        const Word* k = keys_.data() + id * 2 * words_;
        return (k[static_cast<std::size_t>(bit) / 64] >> (bit % 64)) & 1U;
    }
    static bool query_bit(const Word* qp, const Word* qn, std::size_t words, int bit) {
        const auto b = static_cast<std::size_t>(bit);
        const Word* src = b < words * 64 ? qp : qn;
        const std::size_t local = b < words * 64 ? b : b - words * 64;
        return (src[local / 64] >> (local % 64)) & 1U;
    }

    void split(std::size_t at) {
        const auto& items = nodes_[at].items;
        const std::size_t total_bits = 2 * words_ * 64;
        int best = -1;
        std::size_t best_score = 0;
        for (std::size_t b = 0; b < total_bits; ++b) {
            const std::size_t local = b % (words_ * 64);
            if (!((mask_[local / 64] >> (local % 64)) & 1U)) continue;
            std::size_t ones = 0;
            for (auto id : items) ones += has_bit(id, static_cast<int>(b)) ? 1 : 0;
            const std::size_t score = std::min(ones, items.size() - ones);
            if (score > best_score) {
                best_score = score;
                best = static_cast<int>(b);
            }
        }
        if (best < 0) return;  // identical keys; keep the bucket
        Node zero, one;
        for (auto id : items) (has_bit(id, best) ? one : zero).items.push_back(id);
        nodes_[at].items.clear();
        nodes_[at].items.shrink_to_fit();
        nodes_[at].bit = best;
        nodes_[at].child[0] = nodes_.size();
        nodes_.push_back(std::move(zero));
        nodes_[at].child[1] = nodes_.size();
        nodes_.push_back(std::move(one));
    }

    template <class F>
    bool find_from(std::size_t at, const Word* qp, const Word* qn, F& visit) const {
        while (true) {
            const Node& node = nodes_[at];
            if (node.bit < 0) {
                for (auto id : node.items) {
                    const Word* k = keys_.data() + id * 2 * words_;
                    if (subset_words(k, qp, words_) && subset_words(k + words_, qn, words_) &&
                        visit(id))
                        return true;
                }
                return false;
            }
            if (query_bit(qp, qn, words_, node.bit)) {
                if (find_from(node.child[1], qp, qn, visit)) return true;
            }
            at = node.child[0];
        }
    }

    std::size_t words_;
    std::vector<Word> mask_;
    std::vector<Node> nodes_;
    std::vector<Word> keys_;
};

/// Positive-sum-property completion (project-and-lift). Maintains a symmetric
/// generating set of the lattice such that every lattice vector is a sum of
/// members conformal to it on the coordinates lifted so far.
template <class T>
class GraverEngine {
public:
    GraverEngine(std::size_t n, const GraverOptions& opts) : n_(n), words_((n + 63) / 64), opts_(opts) {}

    std::vector<std::vector<T>> run(const std::vector<IntVector>& basis) {
        if (basis.empty()) return {};
        std::vector<std::vector<T>> gens;
        std::vector<bool> lifted(n_, false);

        if (opts_.resume) {
            for (const auto& g : opts_.resume->generators) gens.push_back(convert(g));
            for (auto c : opts_.resume->lifted) {
                if (c >= n_) throw precondition_error("checkpoint does not match the matrix");
                lifted[c] = true;
            }
            return lift_all(std::move(gens), std::move(lifted));
        }
        auto pivots = opts_.force_pottier ? std::nullopt : unimodular_pivots(basis, gens);
        if (!pivots) {
            gens.clear();
            for (const auto& b : basis) gens.push_back(convert(b));
            add_negations(gens);
            std::vector<bool> all(n_, true);
            gens = complete(gens, std::vector<bool>(n_, false), all, std::nullopt);
            return minimize(gens, all);
        }
        for (auto p : *pivots) lifted[p] = true;
        add_negations(gens);
        return lift_all(std::move(gens), std::move(lifted));
    }

private:
    std::vector<std::vector<T>> lift_all(std::vector<std::vector<T>> gens, std::vector<bool> lifted) {
        while (true) {
            std::optional<std::size_t> next;
            std::size_t best = SIZE_MAX;
            for (std::size_t j = 0; j < n_; ++j) {
                if (lifted[j]) continue;
                std::size_t p = 0, q = 0;
                for (const auto& g : gens) {
                    const int s = s_sign(g[j]);
                    p += s > 0;
                    q += s < 0;
                }
                if (p * q < best) {
                    best = p * q;
                    next = j;
                }
            }
            if (!next) break;
            std::vector<bool> with = lifted;
            with[*next] = true;
            gens = complete(gens, lifted, with, *next);
            gens = minimize(gens, with);
            lifted = std::move(with);
            if (opts_.checkpoint) {
                GraverCheckpoint cp{export_set(gens), {}};
                for (std::size_t c = 0; c < n_; ++c)
                    if (lifted[c]) cp.lifted.push_back(c);
                opts_.checkpoint(cp);
            }
        }
        return gens;
    }

    std::vector<T> convert(const IntVector& v) const {
        std::vector<T> out(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) out[i] = s_from(v[i], static_cast<T*>(nullptr));
        return out;
    }

    static std::vector<IntVector> export_set(const std::vector<std::vector<T>>& gens) {
        std::vector<IntVector> out;
        for (const auto& g : gens) {
            IntVector v(g.size());
            for (std::size_t i = 0; i < g.size(); ++i) v[i] = s_to(g[i]);
            out.push_back(std::move(v));
        }
        return out;
    }

    static void add_negations(std::vector<std::vector<T>>& gens) {
        const std::size_t k = gens.size();
        for (std::size_t i = 0; i < k; ++i) {
            auto neg = gens[i];
            for (auto& x : neg) x = s_sub(T(0), x);
            gens.push_back(std::move(neg));
        }
    }

    /// Unimodular row reduction of the basis choosing ±1 pivots anywhere.
    /// On success the basis restricted to the pivot columns is the identity,
    /// so the projection onto them is a bijection onto Z^rank.
    std::optional<std::vector<std::size_t>> unimodular_pivots(const std::vector<IntVector>& basis,
                                                              std::vector<std::vector<T>>& out) {
        std::vector<IntVector> rows = basis;
        std::vector<std::size_t> piv(rows.size(), SIZE_MAX);
        std::vector<bool> used(n_, false);
        for (std::size_t step = 0; step < rows.size(); ++step) {
            std::optional<std::pair<std::size_t, std::size_t>> pick;
            std::size_t best_fill = SIZE_MAX;
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (piv[r] != SIZE_MAX) continue;
                for (std::size_t c = 0; c < n_; ++c) {
                    if (used[c] || abs(rows[r][c]) != Integer(1)) continue;
                    std::size_t fill = 0;
                    for (std::size_t q = 0; q < rows.size(); ++q) fill += !rows[q][c].is_zero();
                    if (fill < best_fill) {
                        best_fill = fill;
                        pick = {r, c};
                    }
                }
            }
            if (!pick) return std::nullopt;
            auto [r, c] = *pick;
            if (rows[r][c].sign() < 0) rows[r] = -rows[r];
            for (std::size_t q = 0; q < rows.size(); ++q)
                if (q != r && !rows[q][c].is_zero()) rows[q] -= rows[q][c] * rows[r];
            piv[r] = c;
            used[c] = true;
        }
        for (const auto& r : rows) out.push_back(convert(r));
        return piv;
    }

    std::vector<Word> to_mask(const std::vector<bool>& coords) const {
        std::vector<Word> m(words_, 0);
        for (std::size_t i = 0; i < n_; ++i)
            if (coords[i]) m[i / 64] |= Word{1} << (i % 64);
        return m;
    }

    /// One completion pass. `tau` is the coordinate set already conformal,
    /// `with` = tau ∪ {j}. For j = nullopt (plain Pottier) every conflicting
    /// pair is combined.
    std::vector<std::vector<T>> complete(const std::vector<std::vector<T>>& input,
                                         const std::vector<bool>& tau,
                                         const std::vector<bool>& with,
                                         std::optional<std::size_t> j) {
        VectorStore<T> store(n_);
        const std::vector<Word> tau_mask = to_mask(tau);
        const std::vector<Word> key_mask = to_mask(with);
        SupportTree tree(words_, key_mask);
        std::vector<Word> kp(words_), kn(words_);

        auto keys_of = [&](const Word* p, const Word* q) {
            for (std::size_t w = 0; w < words_; ++w) {
                kp[w] = p[w] & key_mask[w];
                kn[w] = q[w] & key_mask[w];
            }
        };
        auto add = [&](const std::vector<T>& v) {
            const std::size_t id = store.push(v);
            if (store.size() > opts_.max_elements)
                throw graver_cap_exceeded("completion produced more than " +
                                              std::to_string(opts_.max_elements) + " generators",
                                          export_set(store_snapshot(store)));
            keys_of(store.pos(id), store.neg(id));
            tree.insert(static_cast<std::uint32_t>(id), kp.data(), kn.data());
        };
        for (const auto& v : input) add(v);

        std::vector<T> s(n_);
        std::vector<Word> sp(words_), sn(words_);
        auto recompute_masks = [&]() {
            std::fill(sp.begin(), sp.end(), 0);
            std::fill(sn.begin(), sn.end(), 0);
            for (std::size_t i = 0; i < n_; ++i) {
                const int sg = s_sign(s[i]);
                if (sg > 0) sp[i / 64] |= Word{1} << (i % 64);
                if (sg < 0) sn[i / 64] |= Word{1} << (i % 64);
            }
        };
        // Reduce s in place; returns false if it vanished on the key coordinates.
        auto normal_form = [&]() {
            while (true) {
                keys_of(sp.data(), sn.data());
                bool any = false;
                for (std::size_t w = 0; w < words_; ++w) any = any || kp[w] || kn[w];
                if (!any) return false;
                std::size_t reducer = SIZE_MAX;
                tree.find(kp.data(), kn.data(), [&](std::uint32_t id) {
                    const T* g = store.vec(id);
                    for (std::size_t i = 0; i < n_; ++i) {
                        if (!with[i] || s_sign(g[i]) == 0) continue;
                        if (!s_mag_le(g[i], s[i])) return false;
                    }
                    reducer = id;
                    return true;
                });
                if (reducer == SIZE_MAX) return true;
                const T* g = store.vec(reducer);
                for (std::size_t i = 0; i < n_; ++i)
                    if (s_sign(g[i]) != 0) s[i] = s_sub(s[i], g[i]);
                recompute_masks();
            }
        };

        auto compatible_on_tau = [&](std::size_t a, std::size_t b) {
            const Word* ap = store.pos(a);
            const Word* an = store.neg(a);
            const Word* bp = store.pos(b);
            const Word* bn = store.neg(b);
            for (std::size_t w = 0; w < words_; ++w)
                if (((ap[w] & bn[w]) | (an[w] & bp[w])) & tau_mask[w]) return false;
            return true;
        };
        auto conflicting = [&](std::size_t a, std::size_t b) {
            const Word* ap = store.pos(a);
            const Word* an = store.neg(a);
            const Word* bp = store.pos(b);
            const Word* bn = store.neg(b);
            for (std::size_t w = 0; w < words_; ++w)
                if ((ap[w] & bn[w]) | (an[w] & bp[w])) return true;
            return false;
        };
        auto process_pair = [&](std::size_t a, std::size_t b) {
            const T* va = store.vec(a);
            const T* vb = store.vec(b);
            for (std::size_t i = 0; i < n_; ++i) s[i] = s_add(va[i], vb[i]);
            recompute_masks();
            if (normal_form()) add(s);
        };

        std::size_t checks = 0;
        if (j) {
            // Elements in insertion order, each paired once with every earlier
            // element of opposite sign at j (appended elements included).
            std::vector<std::size_t> pos_seen, neg_seen;
            for (std::size_t i = 0; i < store.size(); ++i) {
                const int sg = s_sign(store.vec(i)[*j]);
                if (sg != 0) {
                    auto& opposite = sg > 0 ? neg_seen : pos_seen;
                    for (std::size_t k = 0; k < opposite.size(); ++k) {
                        const std::size_t o = opposite[k];
                        if (++checks % 4096 == 0) opts_.deadline.check("graver completion");
                        if (!compatible_on_tau(i, o)) continue;
                        process_pair(i, o);
                    }
                    (sg > 0 ? pos_seen : neg_seen).push_back(i);
                }
            }
        } else {
            for (std::size_t i = 0; i < store.size(); ++i) {
                for (std::size_t k = 0; k < i; ++k) {
                    if (++checks % 4096 == 0) opts_.deadline.check("graver completion");
                    if (!conflicting(i, k)) continue;
                    process_pair(i, k);
                }
            }
        }
        return store_snapshot(store);
    }

    static std::vector<std::vector<T>> store_snapshot(const VectorStore<T>& store) {
        std::vector<std::vector<T>> out;
        out.reserve(store.size());
        for (std::size_t i = 0; i < store.size(); ++i) out.push_back(store.get(i));
        return out;
    }

    /// Keeps elements not conformally reducible (on `coords`) by another.
    std::vector<std::vector<T>> minimize(const std::vector<std::vector<T>>& gens,
                                         const std::vector<bool>& coords) {
        // Sort by norm on coords so that equal-key duplicates keep the first copy.
        std::vector<std::size_t> order(gens.size());
        std::vector<std::int64_t> norm(gens.size(), 0);
        for (std::size_t i = 0; i < gens.size(); ++i) {
            order[i] = i;
            for (std::size_t c = 0; c < n_; ++c)
                if (coords[c]) norm[i] += s_abs_i64(gens[i][c]);
        }
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return norm[a] < norm[b]; });

        VectorStore<T> store(n_);
        const std::vector<Word> key_mask = to_mask(coords);
        SupportTree tree(words_, key_mask);
        std::vector<Word> kp(words_), kn(words_);
        std::vector<std::vector<T>> out;
        for (std::size_t idx : order) {
            const auto& v = gens[idx];
            VectorStore<T> tmp(n_);
            tmp.push(v);
            for (std::size_t w = 0; w < words_; ++w) {
                kp[w] = tmp.pos(0)[w] & key_mask[w];
                kn[w] = tmp.neg(0)[w] & key_mask[w];
            }
            bool any = false;
            for (std::size_t w = 0; w < words_; ++w) any = any || kp[w] || kn[w];
            if (!any) continue;
            const bool reducible = tree.find(kp.data(), kn.data(), [&](std::uint32_t id) {
                const T* g = store.vec(id);
                for (std::size_t i = 0; i < n_; ++i) {
                    if (!coords[i] || s_sign(g[i]) == 0) continue;
                    if (!s_mag_le(g[i], v[i])) return false;
                }
                return true;
            });
            if (reducible) continue;
            const std::size_t id = store.push(v);
            tree.insert(static_cast<std::uint32_t>(id), kp.data(), kn.data());
            out.push_back(v);
        }
        return out;
    }

    std::size_t n_, words_;
    const GraverOptions& opts_;
};

template <class T>
std::vector<IntVector> canonical_set(const std::vector<std::vector<T>>& gens) {
    std::set<IntVector> seen;
    for (const auto& g : gens) {
        IntVector v(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) v[i] = s_to(g[i]);
        if (v.is_zero()) continue;
        seen.insert(sign_canonical(std::move(v)));
    }
    return {seen.begin(), seen.end()};
}

}  // namespace detail

/// Graver basis of ker_Z(m), one representative per ± pair (first nonzero
/// entry positive), sorted lexicographically.
inline std::vector<IntVector> graver_vectors(const IntMatrix& m, const GraverOptions& opts = {}) {
    const auto basis = kernel_lattice_basis(m);
    if (basis.empty()) return {};
    try {
        detail::GraverEngine<std::int64_t> engine(m.cols(), opts);
        return detail::canonical_set(engine.run(basis));
    } catch (const detail::narrow_overflow&) {
        detail::GraverEngine<Integer> engine(m.cols(), opts);
        return detail::canonical_set(engine.run(basis));
    }
}

/// Brute-force Graver oracle: all nonzero kernel vectors with |v_i| <= box,
/// keeping those with no conformally smaller kernel vector. Exact whenever the
/// Graver basis lies inside the box.
inline std::vector<IntVector> graver_bruteforce_vectors(const IntMatrix& m, std::int64_t box) {
    if (box < 1) throw precondition_error("box must be at least 1");
    const std::size_t n = m.cols();
    const std::size_t d = m.rows();
    std::vector<std::vector<std::int64_t>> a(d, std::vector<std::int64_t>(n));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j).to_int64();
    // Suffix bounds of reachable row sums for pruning.
    std::vector<std::vector<std::int64_t>> reach(n + 1, std::vector<std::int64_t>(d, 0));
    for (std::size_t j = n; j-- > 0;)
        for (std::size_t i = 0; i < d; ++i) reach[j][i] = reach[j + 1][i] + box * std::abs(a[i][j]);

    std::vector<std::vector<std::int64_t>> found;
    std::vector<std::int64_t> x(n, 0), acc(d, 0);
    std::function<void(std::size_t)> dfs = [&](std::size_t j) {
        for (std::size_t i = 0; i < d; ++i)
            if (std::abs(acc[i]) > reach[j][i]) return;
        if (j == n) {
            bool nz = false;
            bool canonical = false;
            for (std::size_t k = 0; k < n && !nz; ++k)
                if (x[k] != 0) {
                    nz = true;
                    canonical = x[k] > 0;
                }
            if (nz && canonical) found.push_back(x);
            return;
        }
        for (std::int64_t v = -box; v <= box; ++v) {
            x[j] = v;
            for (std::size_t i = 0; i < d; ++i) acc[i] += a[i][j] * v;
            dfs(j + 1);
            for (std::size_t i = 0; i < d; ++i) acc[i] -= a[i][j] * v;
        }
        x[j] = 0;
    };
    dfs(0);

    // Minimal elements under ⊑ (checked against both signs of each vector).
    std::sort(found.begin(), found.end(), [](const auto& p, const auto& q) {
        std::int64_t np = 0, nq = 0;
        for (auto v : p) np += std::abs(v);
        for (auto v : q) nq += std::abs(v);
        return np < nq;
    });
    auto below = [](const std::vector<std::int64_t>& g, const std::vector<std::int64_t>& u, int sign) {
        for (std::size_t i = 0; i < u.size(); ++i) {
            const std::int64_t gi = sign * g[i];
            if (gi == 0) continue;
            if ((gi > 0) != (u[i] > 0) || u[i] == 0 || std::abs(gi) > std::abs(u[i])) return false;
        }
        return true;
    };
    std::vector<IntVector> out;
    std::vector<std::vector<std::int64_t>> kept;
    for (const auto& u : found) {
        bool reducible = false;
        for (const auto& g : kept)
            if (below(g, u, 1) || below(g, u, -1)) {
                reducible = true;
                break;
            }
        if (reducible) continue;
        kept.push_back(u);
        out.push_back(detail::to_int_vector(u));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace lawrence

#endif
