#ifndef LAWRENCE_COMPLEX_HPP
#define LAWRENCE_COMPLEX_HPP

#include "lawrence/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace lawrence {

using Face = std::vector<int>;

/// Simplicial complex given by its facets over an explicit ground set of
/// vertex labels. The ground set is declared, not inferred, so vertices may be
/// absent from every facet. The complex {∅} (only the empty face) is allowed.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Facets are normalized: sorted, deduplicated, non-maximal faces dropped.
    SimplicialComplex(std::vector<Face> faces, std::vector<int> ground_set)
        : ground_(std::move(ground_set)) {
        std::sort(ground_.begin(), ground_.end());
        ground_.erase(std::unique(ground_.begin(), ground_.end()), ground_.end());
        facets_ = maximal_faces(std::move(faces));
        for (const auto& f : facets_)
            for (int v : f)
                if (!std::binary_search(ground_.begin(), ground_.end(), v))
                    throw precondition_error("facet vertex " + std::to_string(v) +
                                             " outside ground set");
    }

    /// Ground set {1..n}.
    static SimplicialComplex on_vertices(std::vector<Face> faces, int n) {
        std::vector<int> g(static_cast<std::size_t>(std::max(n, 0)));
        for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = i + 1;
        return SimplicialComplex(std::move(faces), std::move(g));
    }

    [[nodiscard]] const std::vector<Face>& facets() const noexcept { return facets_; }
    [[nodiscard]] const std::vector<int>& ground_set() const noexcept { return ground_; }
    [[nodiscard]] std::size_t n() const noexcept { return ground_.size(); }

    /// Union of all facets.
    [[nodiscard]] std::vector<int> support() const {
        std::set<int> s;
        for (const auto& f : facets_) s.insert(f.begin(), f.end());
        return {s.begin(), s.end()};
    }

    [[nodiscard]] bool contains_vertex(int v) const {
        return std::any_of(facets_.begin(), facets_.end(), [v](const Face& f) {
            return std::binary_search(f.begin(), f.end(), v);
        });
    }

    /// True when `face` is contained in some facet.
    [[nodiscard]] bool has_face(const Face& face) const {
        return std::any_of(facets_.begin(), facets_.end(), [&](const Face& f) {
            return std::includes(f.begin(), f.end(), face.begin(), face.end());
        });
    }

    [[nodiscard]] bool is_empty_face_complex() const {
        return facets_.size() == 1 && facets_.front().empty();
    }

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

    static std::vector<Face> maximal_faces(std::vector<Face> faces) {
        for (auto& f : faces) {
            std::sort(f.begin(), f.end());
            f.erase(std::unique(f.begin(), f.end()), f.end());
        }
        std::sort(faces.begin(), faces.end());
        faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
        std::vector<Face> out;
        for (std::size_t i = 0; i < faces.size(); ++i) {
            bool contained = false;
            for (std::size_t j = 0; j < faces.size() && !contained; ++j)
                contained = i != j && faces[j].size() > faces[i].size() &&
                            std::includes(faces[j].begin(), faces[j].end(), faces[i].begin(),
                                          faces[i].end());
            if (!contained) out.push_back(faces[i]);
        }
        return out;
    }

private:
    std::vector<Face> facets_;
    std::vector<int> ground_;
};

/// Removes faces contained in others, deduplicates and sorts. Ground set is
/// {1..max vertex}.
inline SimplicialComplex normalize_facets(std::vector<Face> faces) {
    if (faces.empty()) throw precondition_error("no faces given");
    int n = 0;
    for (const auto& f : faces)
        for (int v : f) n = std::max(n, v);
    return SimplicialComplex::on_vertices(std::move(faces), n);
}

namespace detail {

inline bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

inline Face parse_group(std::string_view body) {
    const bool has_comma = body.find(',') != std::string_view::npos;
    std::string_view trimmed = body;
    while (!trimmed.empty() && is_space(trimmed.front())) trimmed.remove_prefix(1);
    while (!trimmed.empty() && is_space(trimmed.back())) trimmed.remove_suffix(1);
    const bool has_space =
        std::any_of(trimmed.begin(), trimmed.end(), [](char c) { return is_space(c); });

    Face face;
    auto parse_number = [](std::string_view tok) {
        if (tok.empty()) throw parse_error("empty vertex in bracket group");
        for (char c : tok)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw parse_error("invalid vertex '" + std::string(tok) + "'");
        const int v = std::stoi(std::string(tok));
        if (v < 1) throw parse_error("vertex labels start at 1");
        return v;
    };

    if (!has_comma && !has_space) {
        for (char c : trimmed) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw parse_error(std::string("invalid vertex character '") + c + "'");
            if (c == '0') throw parse_error("vertex labels start at 1");
            face.push_back(c - '0');
        }
        return face;
    }

    if (has_comma) {
        std::size_t start = 0;
        while (start <= body.size()) {
            std::size_t end = body.find(',', start);
            if (end == std::string_view::npos) end = body.size();
            std::string_view tok = body.substr(start, end - start);
            while (!tok.empty() && is_space(tok.front())) tok.remove_prefix(1);
            while (!tok.empty() && is_space(tok.back())) tok.remove_suffix(1);
            if (std::any_of(tok.begin(), tok.end(), [](char c) { return is_space(c); }))
                throw parse_error("mixed comma and space separators in '" + std::string(body) + "'");
            face.push_back(parse_number(tok));
            start = end + 1;
        }
        return face;
    }

    std::size_t i = 0;
    while (i < trimmed.size()) {
        while (i < trimmed.size() && is_space(trimmed[i])) ++i;
        std::size_t j = i;
        while (j < trimmed.size() && !is_space(trimmed[j])) ++j;
        if (j > i) face.push_back(parse_number(trimmed.substr(i, j - i)));
        i = j;
    }
    return face;
}

}  // namespace detail

/// Parses bracket notation such as "[12][13][23]" or "[1,2][12,3]". Inside a
/// group, vertices are either single digits written together or integers
/// separated by commas or spaces. "[]" denotes the empty face. When `n` is
/// given it overrides the ground set size (default: the largest vertex).
inline SimplicialComplex parse_complex(std::string_view text, std::optional<int> n = std::nullopt) {
    std::vector<Face> faces;
    std::size_t i = 0;
    bool any_group = false;
    while (i < text.size()) {
        const char c = text[i];
        if (detail::is_space(c)) {
            ++i;
            continue;
        }
        if (c != '[') {
            if (c == ']') throw parse_error("unbalanced brackets");
            throw parse_error(std::string("unexpected character '") + c + "'");
        }
        const std::size_t close = text.find_first_of("[]", i + 1);
        if (close == std::string_view::npos || text[close] != ']')
            throw parse_error("unbalanced brackets");
        faces.push_back(detail::parse_group(text.substr(i + 1, close - i - 1)));
        any_group = true;
        i = close + 1;
    }
    if (!any_group) throw parse_error("empty complex");

    int max_vertex = 0;
    for (const auto& f : faces)
        for (int v : f) max_vertex = std::max(max_vertex, v);
    if (n) {
        if (*n < max_vertex)
            throw parse_error("declared vertex count smaller than largest vertex");
        max_vertex = *n;
    }
    return SimplicialComplex::on_vertices(std::move(faces), max_vertex);
}

/// Bracket notation; compact digits when every vertex is a single digit.
inline std::string render(const SimplicialComplex& delta) {
    bool compact = true;
    for (const auto& f : delta.facets())
        for (int v : f) compact = compact && v <= 9;
    std::string s;
    for (const auto& f : delta.facets()) {
        s += '[';
        for (std::size_t k = 0; k < f.size(); ++k) {
            if (!compact && k) s += ',';
            s += std::to_string(f[k]);
        }
        s += ']';
    }
    return s;
}

/// { F \ {v} : v ∈ F ∈ Δ } on the ground set minus v.
inline SimplicialComplex link(const SimplicialComplex& delta, int v) {
    if (!delta.contains_vertex(v))
        throw precondition_error("vertex " + std::to_string(v) + " is not in any facet");
    std::vector<Face> faces;
    for (const auto& f : delta.facets()) {
        if (!std::binary_search(f.begin(), f.end(), v)) continue;
        Face g;
        for (int x : f)
            if (x != v) g.push_back(x);
        faces.push_back(std::move(g));
    }
    std::vector<int> ground;
    for (int x : delta.ground_set())
        if (x != v) ground.push_back(x);
    return SimplicialComplex(std::move(faces), std::move(ground));
}

/// Facets of Δ avoiding v, on the ground set minus v. Throws when every facet
/// contains v; callers treat that case as a matrix with no rows.
inline SimplicialComplex deletion(const SimplicialComplex& delta, int v) {
    std::vector<Face> faces;
    for (const auto& f : delta.facets())
        if (!std::binary_search(f.begin(), f.end(), v)) faces.push_back(f);
    if (faces.empty())
        throw precondition_error("deletion of vertex " + std::to_string(v) + " is empty");
    std::vector<int> ground;
    for (int x : delta.ground_set())
        if (x != v) ground.push_back(x);
    return SimplicialComplex(std::move(faces), std::move(ground));
}

inline std::optional<SimplicialComplex> try_deletion(const SimplicialComplex& delta, int v) {
    for (const auto& f : delta.facets())
        if (!std::binary_search(f.begin(), f.end(), v)) return deletion(delta, v);
    return std::nullopt;
}

/// Restriction of a complex to the faces inside `vertices`, on that ground set.
inline SimplicialComplex induced(const SimplicialComplex& delta, const std::vector<int>& vertices) {
    std::vector<Face> faces;
    for (const auto& f : delta.facets()) {
        Face g;
        std::set_intersection(f.begin(), f.end(), vertices.begin(), vertices.end(),
                              std::back_inserter(g));
        faces.push_back(std::move(g));
    }
    return SimplicialComplex(std::move(faces), vertices);
}

struct Decomposition {
    SimplicialComplex first;
    Face separator;
    SimplicialComplex second;
    /// The separator is empty, i.e. the complex is a disjoint union.
    [[nodiscard]] bool empty_separator() const { return separator.empty(); }
};

/// Searches faces S of Δ in lexicographic order (∅ first) for a splitting
/// Δ = Δ1 ∪ Δ2 with |Δ1| ∩ |Δ2| = S and S a face of both parts.
inline std::optional<Decomposition> is_reducible(const SimplicialComplex& delta) {
    std::set<Face> candidates;
    for (const auto& f : delta.facets()) {
        const std::size_t k = f.size();
        for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
            Face s;
            for (std::size_t b = 0; b < k; ++b)
                if (mask & (std::size_t{1} << b)) s.push_back(f[b]);
            candidates.insert(std::move(s));
        }
    }
    const std::vector<int> all = delta.support();

    for (const Face& s : candidates) {
        std::vector<int> rest;
        std::set_difference(all.begin(), all.end(), s.begin(), s.end(), std::back_inserter(rest));
        if (rest.size() < 2) continue;

        // Connected components of the remaining vertices under "share a facet".
        std::vector<int> comp(rest.size(), -1);
        auto index_of = [&](int v) {
            return static_cast<std::size_t>(std::lower_bound(rest.begin(), rest.end(), v) -
                                            rest.begin());
        };
        std::vector<std::size_t> parent(rest.size());
        for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
        auto find = [&](std::size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& f : delta.facets()) {
            std::vector<std::size_t> inside;
            for (int v : f)
                if (!std::binary_search(s.begin(), s.end(), v)) inside.push_back(index_of(v));
            for (std::size_t k = 1; k < inside.size(); ++k) parent[find(inside[k])] = find(inside[0]);
        }
        std::vector<std::size_t> roots;
        for (std::size_t i = 0; i < rest.size(); ++i) {
            const std::size_t r = find(i);
            auto it = std::find(roots.begin(), roots.end(), r);
            if (it == roots.end()) {
                comp[i] = static_cast<int>(roots.size());
                roots.push_back(r);
            } else {
                comp[i] = static_cast<int>(it - roots.begin());
            }
        }
        const std::size_t nc = roots.size();
        if (nc < 2) continue;

        // Component 0 always goes to the first side; try the remaining
        // assignments in increasing bitmask order.
        for (std::size_t mask = 1; mask < (std::size_t{1} << (nc - 1)); ++mask) {
            std::vector<int> side1(s.begin(), s.end());
            std::vector<int> side2(s.begin(), s.end());
            for (std::size_t i = 0; i < rest.size(); ++i) {
                const auto c = static_cast<std::size_t>(comp[i]);
                const bool second = c > 0 && ((mask >> (c - 1)) & 1U);
                (second ? side2 : side1).push_back(rest[i]);
            }
            std::sort(side1.begin(), side1.end());
            std::sort(side2.begin(), side2.end());
            std::vector<Face> f1;
            std::vector<Face> f2;
            for (const auto& f : delta.facets()) {
                if (std::includes(side1.begin(), side1.end(), f.begin(), f.end())) f1.push_back(f);
                if (std::includes(side2.begin(), side2.end(), f.begin(), f.end())) f2.push_back(f);
            }
            SimplicialComplex d1(f1, side1);
            SimplicialComplex d2(f2, side2);
            if (!d1.has_face(s) || !d2.has_face(s)) continue;
            if (d1.support() != side1 || d2.support() != side2) continue;
            return Decomposition{std::move(d1), s, std::move(d2)};
        }
    }
    return std::nullopt;
}

/// Swaps vertex labels a and b (used to make another variable play the role
/// of the distinguished vertex 1).
inline SimplicialComplex relabel_swap(const SimplicialComplex& delta, int a, int b) {
    std::vector<Face> faces = delta.facets();
    for (auto& f : faces)
        for (int& v : f) v = v == a ? b : (v == b ? a : v);
    return SimplicialComplex(std::move(faces), delta.ground_set());
}

}  // namespace lawrence

#endif
