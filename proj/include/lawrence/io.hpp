#ifndef LAWRENCE_IO_HPP
#define LAWRENCE_IO_HPP

#include "lawrence/complex.hpp"
#include "lawrence/errors.hpp"
#include "lawrence/graver.hpp"
#include "lawrence/matrix.hpp"
#include "lawrence/model_matrix.hpp"
#include "lawrence/vector.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <unistd.h>

namespace lawrence {

/// Plain matrix text: "R C" header, then R lines of C integers.
inline std::string render_matrix(const IntMatrix& m) {
    std::string s = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) s += ' ';
            s += m(i, j).str();
        }
        s += '\n';
    }
    return s;
}

inline IntMatrix parse_matrix(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    auto next_line = [&]() -> std::optional<std::string> {
        while (std::getline(in, line)) {
            if (line.find_first_not_of(" \t\r") != std::string::npos) return line;
        }
        return std::nullopt;
    };
    auto tokens_of = [](const std::string& l) {
        std::istringstream ls(l);
        std::vector<std::string> out;
        std::string tok;
        while (ls >> tok) out.push_back(tok);
        return out;
    };
    auto as_count = [](const std::string& tok) {
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw parse_error("bad matrix header entry '" + tok + "'");
        return static_cast<std::size_t>(std::stoull(tok));
    };

    const auto header = next_line();
    if (!header) throw parse_error("empty matrix file");
    const auto h = tokens_of(*header);
    if (h.size() != 2) throw parse_error("matrix header must be 'R C'");
    const std::size_t r = as_count(h[0]);
    const std::size_t c = as_count(h[1]);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        const auto l = next_line();
        if (!l) throw parse_error("matrix has fewer than " + std::to_string(r) + " rows");
        const auto t = tokens_of(*l);
        if (t.size() != c)
            throw parse_error("row " + std::to_string(i + 1) + " has " + std::to_string(t.size()) +
                              " entries, expected " + std::to_string(c));
        for (std::size_t j = 0; j < c; ++j) {
            try {
                m(i, j) = Integer::parse(t[j]);
            } catch (const std::invalid_argument& e) {
                throw parse_error(e.what());
            }
        }
    }
    if (next_line()) throw parse_error("trailing content after matrix rows");
    return m;
}

/// Rows of a basis file.
inline IntMatrix vectors_to_matrix(const std::vector<IntVector>& vs, std::size_t n) {
    IntMatrix m(vs.size(), n);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (vs[i].size() != n) throw dimension_error("vector length mismatch");
        for (std::size_t j = 0; j < n; ++j) m(i, j) = vs[i][j];
    }
    return m;
}

inline std::vector<IntVector> matrix_to_vectors(const IntMatrix& m) {
    std::vector<IntVector> out;
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(m.row(i));
    return out;
}

inline std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Writes through a temporary file in the same directory and renames it into
/// place, so readers never see a partial file.
inline void write_file_atomic(const std::filesystem::path& p, const std::string& content) {
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::filesystem::path tmp = p;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << content;
        out.flush();
        if (!out) throw std::runtime_error("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, p);
}

/// Writes a matrix and re-reads it to confirm the round trip.
inline void write_matrix_file(const std::filesystem::path& p, const IntMatrix& m) {
    write_file_atomic(p, render_matrix(m));
    if (!(parse_matrix(read_file(p)) == m))
        throw std::runtime_error("round-trip check failed for " + p.string());
}

inline IntMatrix read_matrix_file(const std::filesystem::path& p) { return parse_matrix(read_file(p)); }

namespace detail {

inline std::string join_ints(const std::vector<int>& xs, char sep = ',') {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(xs[i]);
    }
    return s;
}

}  // namespace detail

/// Row/column legend for a model matrix: one "col k (i_1,...,i_n)" line per
/// column and one "row k facet (e...)" line per row, all 1-based.
inline std::string render_labels(const ModelMatrix& mm) {
    std::string s = "ground " + detail::join_ints(mm.ground_set) + "\n";
    s += "dims " + detail::join_ints(mm.dims) + "\n";
    for (std::size_t j = 0; j < mm.col_labels.size(); ++j)
        s += "col " + std::to_string(j + 1) + " (" + detail::join_ints(mm.col_labels[j]) + ")\n";
    for (std::size_t i = 0; i < mm.row_labels.size(); ++i) {
        const auto& lab = mm.row_labels[i];
        s += "row " + std::to_string(i + 1) + " [" + detail::join_ints(lab.facet) + "] (" +
             detail::join_ints(lab.margin) + ")\n";
    }
    return s;
}

/// Parses a comma-separated list of positive integers ("2,3,3").
inline TableDims parse_dims(std::string_view text) {
    TableDims out;
    std::string cur;
    auto flush = [&]() {
        if (cur.empty() || cur.find_first_not_of("0123456789") != std::string::npos)
            throw parse_error("bad dimension list '" + std::string(text) + "'");
        out.push_back(std::stoi(cur));
        cur.clear();
    };
    for (char c : text) {
        if (c == ',') {
            flush();
        } else if (c != ' ') {
            cur += c;
        }
    }
    flush();
    return out;
}

/// Checkpoint of a Graver lifting stage: the generators in matrix format
/// (".ckpt") and the lifted coordinates on one line of a sidecar
/// (".ckpt.lifted").
inline void write_checkpoint(const std::filesystem::path& base, const GraverCheckpoint& cp,
                             std::size_t width) {
    std::filesystem::path mat = base;
    mat += ".ckpt";
    std::filesystem::path side = base;
    side += ".ckpt.lifted";
    std::string lifted;
    for (std::size_t i = 0; i < cp.lifted.size(); ++i) {
        if (i) lifted += ' ';
        lifted += std::to_string(cp.lifted[i]);
    }
    write_matrix_file(mat, vectors_to_matrix(cp.generators, width));
    write_file_atomic(side, lifted + "\n");
}

inline std::optional<GraverCheckpoint> read_checkpoint(const std::filesystem::path& base) {
    std::filesystem::path mat = base;
    mat += ".ckpt";
    std::filesystem::path side = base;
    side += ".ckpt.lifted";
    if (!std::filesystem::exists(mat) || !std::filesystem::exists(side)) return std::nullopt;
    GraverCheckpoint cp;
    cp.generators = matrix_to_vectors(read_matrix_file(mat));
    std::istringstream in(read_file(side));
    std::size_t c;
    while (in >> c) cp.lifted.push_back(c);
    return cp;
}

}  // namespace lawrence

#endif
