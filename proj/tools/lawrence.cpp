#include "lawrence/bases.hpp"
#include "lawrence/complex.hpp"
#include "lawrence/complexity.hpp"
#include "lawrence/errors.hpp"
#include "lawrence/io.hpp"
#include "lawrence/model_matrix.hpp"
#include "lawrence/report.hpp"
#include "lawrence/table.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace fs = std::filesystem;
using namespace lawrence;

namespace {

enum exit_code { ok = 0, failure = 1, parse_failed = 2, dimension_mismatch = 3, cap_hit = 4, precondition = 5 };

struct CapFlags {
    std::size_t max_fiber_points = Caps{}.max_fiber_points;
    std::size_t max_basis_elements = Caps{}.max_basis_elements;
    std::optional<std::size_t> max_r;
    std::optional<long> time_limit;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--max-fiber-points", max_fiber_points, "Abort when a fiber has more points");
        cmd->add_option("--max-basis-elements", max_basis_elements,
                        "Abort when a generating set or candidate list grows larger");
        cmd->add_option("--max-r", max_r, "Largest number of slices examined");
        cmd->add_option("--time-limit", time_limit, "Wall-clock limit in seconds");
    }

    [[nodiscard]] Caps caps() const {
        Caps c;
        c.max_fiber_points = max_fiber_points;
        c.max_basis_elements = max_basis_elements;
        c.max_r = max_r;
        if (time_limit) c.time_limit = std::chrono::seconds(*time_limit);
        return c;
    }
};

/// Either --matrix PATH or --complex S with full --dims.
struct MatrixSource {
    std::string matrix_path;
    std::string complex_text;
    std::string dims_text;

    void add_to(CLI::App* cmd) {
        auto* m = cmd->add_option("--matrix", matrix_path, "Matrix file");
        auto* c = cmd->add_option("--complex", complex_text, "Simplicial complex in bracket notation");
        auto* d = cmd->add_option("--dims", dims_text, "Level counts d_1,...,d_n");
        m->excludes(c);
        c->needs(d);
    }

    [[nodiscard]] IntMatrix load() const {
        if (!matrix_path.empty()) return read_matrix_file(matrix_path);
        if (complex_text.empty()) throw CLI::RequiredError("--matrix or --complex");
        return build_model_matrix(parse_complex(complex_text), parse_dims(dims_text)).matrix;
    }
};

fs::path with_suffix(const fs::path& p, const std::string& suffix) {
    fs::path out = p;
    out += suffix;
    return out;
}

int write_basis(const fs::path& out, const BasisSet& b, std::size_t width) {
    write_matrix_file(out, vectors_to_matrix(b.vectors, width));
    std::cout << b.size() << " " << to_string(b.kind) << " elements written to " << out.string() << "\n";
    return ok;
}

std::string slug(const std::string& model) {
    std::string s;
    for (char c : model) {
        if (c == '[') {
            if (!s.empty()) s += '-';
        } else if (c != ']' && c != ' ' && c != ',') {
            s += c;
        } else if (c == ',') {
            s += '_';
        }
    }
    return s;
}

std::string dims_slug(const TableDims& d) {
    std::string s;
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "x" : "") + std::to_string(d[i]);
    return s;
}

ComplexityOptions complexity_options(ComplexityMode mode, const Caps& caps, const std::string& ckpt_dir,
                                     const std::string& prefix) {
    ComplexityOptions o;
    o.mode = mode;
    o.caps = caps;
    if (!ckpt_dir.empty()) {
        const fs::path base = fs::path(ckpt_dir) / prefix;
        o.checkpoint = [base](const std::string& stage, const GraverCheckpoint& cp) {
            if (cp.generators.empty()) return;
            write_checkpoint(with_suffix(base, "_" + stage), cp, cp.generators.front().size());
        };
        o.resume = [base](const std::string& stage) { return read_checkpoint(with_suffix(base, "_" + stage)); };
    }
    return o;
}

bool has_missing(const ComplexityReport& r) {
    return !r.graver_complexity.value || !r.markov_complexity.value || !r.lower_bound.value;
}

/// Writes a report and confirms it parses back to the same JSON.
void write_report(const fs::path& p, const std::string& text) {
    write_file_atomic(p, text);
    if (Json::parse(read_file(p)) != Json::parse(text))
        throw std::runtime_error("round-trip check failed for " + p.string());
}

std::size_t default_jobs() {
    if (const char* env = std::getenv("LAWRENCE_JOBS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
    }
    return 1;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

struct RowResult {
    std::optional<std::size_t> m, g;
    std::string status;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hierarchical-model matrices, Graver and Markov bases, and their complexities"};
    app.require_subcommand(1);

    // matrix
    auto* cmd_matrix = app.add_subcommand("matrix", "Write the model matrix A_Δ");
    std::string m_complex, m_dims, m_out;
    cmd_matrix->add_option("--complex", m_complex, "Simplicial complex in bracket notation")->required();
    cmd_matrix->add_option("--dims", m_dims, "Level counts d_1,...,d_n")->required();
    cmd_matrix->add_option("--out", m_out, "Output matrix file")->required();

    // bases
    struct BasisCommand {
        CLI::App* cmd;
        MatrixSource src;
        CapFlags caps;
        std::string out;
    };
    std::vector<BasisCommand> basis_cmds(4);
    const char* names[] = {"graver", "markov", "universal", "semiconformal"};
    const char* blurbs[] = {"Graver basis", "Minimal Markov basis (greedy extraction)",
                            "Universal Markov basis", "Graver elements without semi-conformal decomposition"};
    bool one_sided = false;
    for (std::size_t i = 0; i < 4; ++i) {
        basis_cmds[i].cmd = app.add_subcommand(names[i], blurbs[i]);
        basis_cmds[i].src.add_to(basis_cmds[i].cmd);
        basis_cmds[i].caps.add_to(basis_cmds[i].cmd);
        basis_cmds[i].cmd->add_option("--out", basis_cmds[i].out, "Output basis file")->required();
    }
    basis_cmds[3].cmd->add_flag("--one-sided", one_sided, "Keep v when either v or -v is decomposition-free");

    // complexity
    auto* cmd_cx = app.add_subcommand("complexity", "Markov and Graver complexity of a model as d_1 varies");
    std::string c_complex, c_dims, c_out, c_mode = "heuristic", c_ckpt;
    bool c_timings = false;
    CapFlags c_caps;
    cmd_cx->add_option("--complex", c_complex, "Simplicial complex in bracket notation")->required();
    cmd_cx->add_option("--dims-rest", c_dims, "Level counts d_2,...,d_n")->required();
    cmd_cx->add_option("--mode", c_mode, "exact or heuristic")->check(CLI::IsMember({"exact", "heuristic"}));
    cmd_cx->add_option("--out", c_out, "Output report file (JSON)");
    cmd_cx->add_option("--checkpoint-dir", c_ckpt, "Directory for resumable Graver checkpoints");
    cmd_cx->add_flag("--timings", c_timings, "Include wall-clock timings in the report");
    c_caps.add_to(cmd_cx);

    // table
    auto* cmd_table = app.add_subcommand("table", "Reproduce rows of the binary complexity table");
    std::string t_suite = "core", t_out, t_mode = "heuristic", t_ckpt;
    std::optional<std::size_t> t_jobs;
    CapFlags t_caps;
    cmd_table->add_option("--suite", t_suite, "core, extended or full")
        ->check(CLI::IsMember({"core", "extended", "full"}));
    cmd_table->add_option("--jobs", t_jobs, "Worker threads (default: LAWRENCE_JOBS or 1)");
    cmd_table->add_option("--out", t_out, "Output directory")->required();
    cmd_table->add_option("--mode", t_mode, "exact or heuristic")->check(CLI::IsMember({"exact", "heuristic"}));
    cmd_table->add_option("--checkpoint-dir", t_ckpt, "Directory for resumable Graver checkpoints");
    t_caps.add_to(cmd_table);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return parse_failed;
    }

    fs::path partial_target;
    std::size_t partial_width = 0;
    try {
        if (*cmd_matrix) {
            const auto delta = parse_complex(m_complex);
            const auto mm = build_model_matrix(delta, parse_dims(m_dims));
            write_matrix_file(m_out, mm.matrix);
            const fs::path labels = with_suffix(m_out, ".labels");
            write_file_atomic(labels, render_labels(mm));
            if (read_file(labels) != render_labels(mm)) throw std::runtime_error("round-trip check failed");
            std::cout << mm.matrix.rows() << "x" << mm.matrix.cols() << " matrix written to " << m_out << "\n";
            return ok;
        }

        for (std::size_t i = 0; i < basis_cmds.size(); ++i) {
            auto& bc = basis_cmds[i];
            if (!*bc.cmd) continue;
            const IntMatrix m = bc.src.load();
            const Caps caps = bc.caps.caps();
            partial_target = with_suffix(bc.out, ".partial");
            partial_width = m.cols();
            MarkovOptions mo;
            mo.caps = caps;
            mo.graver.max_elements = caps.max_basis_elements;
            mo.graver.deadline = Deadline(caps.time_limit);
            if (i == 0) return write_basis(bc.out, graver_basis(m, mo.graver), m.cols());
            if (i == 1) return write_basis(bc.out, minimal_markov_basis(m, mo), m.cols());
            if (i == 2) return write_basis(bc.out, universal_markov_basis(m, mo), m.cols());
            return write_basis(bc.out,
                               semiconformal_free_set(m, one_sided ? SemiconformalMode::one_sided
                                                                   : SemiconformalMode::strict,
                                                      mo.graver),
                               m.cols());
        }

        if (*cmd_cx) {
            const auto delta = parse_complex(c_complex);
            const auto dims = parse_dims(c_dims);
            const auto mode = c_mode == "exact" ? ComplexityMode::exact : ComplexityMode::heuristic;
            const auto t0 = std::chrono::steady_clock::now();
            const auto rep = model_complexities(
                delta, dims,
                complexity_options(mode, c_caps.caps(), c_ckpt, slug(c_complex) + "_" + dims_slug(dims)));
            std::optional<Timings> timings;
            if (c_timings)
                timings = Timings{std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()};
            std::cout << summary_line(rep) << "\n";
            const bool missing = has_missing(rep);
            if (!c_out.empty()) {
                const fs::path target = missing ? with_suffix(c_out, ".partial") : fs::path(c_out);
                write_report(target, render_report(rep, timings));
            }
            return missing ? cap_hit : ok;
        }

        if (*cmd_table) {
            const auto rows = suite_rows(t_suite);
            const auto mode = t_mode == "exact" ? ComplexityMode::exact : ComplexityMode::heuristic;
            const std::size_t jobs = std::max<std::size_t>(1, t_jobs.value_or(default_jobs()));
            const TableDims dims{2, 2, 2};
            const Caps caps = t_caps.caps();
            fs::create_directories(t_out);

            std::vector<RowResult> results(rows.size());
            std::atomic<std::size_t> next{0};
            std::mutex log_mutex;
            auto worker = [&]() {
                for (std::size_t i = next++; i < rows.size(); i = next++) {
                    RowResult& res = results[i];
                    try {
                        const std::string name = slug(rows[i].model);
                        const auto rep = model_complexities(
                            parse_complex(rows[i].model), dims,
                            complexity_options(mode, caps, t_ckpt, name + "_" + dims_slug(dims)));
                        write_report(fs::path(t_out) / (name + ".json"), render_report(rep));
                        res.m = rep.markov_complexity.value;
                        res.g = rep.graver_complexity.value;
                        const bool m_ok = !rows[i].m_expected ||
                                          (res.m && *res.m == static_cast<std::size_t>(*rows[i].m_expected));
                        const bool g_ok = res.g && *res.g == static_cast<std::size_t>(rows[i].g_expected);
                        res.status = has_missing(rep) ? "incomplete" : (m_ok && g_ok ? "ok" : "mismatch");
                    } catch (const std::exception& e) {
                        res.status = std::string("error: ") + e.what();
                    }
                    std::lock_guard<std::mutex> lock(log_mutex);
                    std::cout << rows[i].model << " " << res.status << "\n" << std::flush;
                }
            };
            std::vector<std::thread> pool;
            for (std::size_t w = 0; w < std::min(jobs, rows.size()); ++w) pool.emplace_back(worker);
            for (auto& t : pool) t.join();

            std::string csv = "model,m_expected,g_expected,m_computed,g_computed,status\n";
            bool all_ok = true;
            auto num = [](std::optional<std::size_t> v) { return v ? std::to_string(*v) : std::string(); };
            for (std::size_t i = 0; i < rows.size(); ++i) {
                const auto& r = rows[i];
                csv += r.model + "," + (r.m_expected ? std::to_string(*r.m_expected) : "") + "," +
                       std::to_string(r.g_expected) + "," + num(results[i].m) + "," + num(results[i].g) + "," +
                       csv_field(results[i].status) + "\n";
                all_ok = all_ok && results[i].status == "ok";
            }
            const fs::path summary = fs::path(t_out) / "summary.csv";
            write_file_atomic(summary, csv);
            if (read_file(summary) != csv) throw std::runtime_error("round-trip check failed for summary.csv");
            return all_ok ? ok : failure;
        }
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return parse_failed;
    } catch (const dimension_error& e) {
        std::cerr << "dimension mismatch: " << e.what() << "\n";
        return dimension_mismatch;
    } catch (const graver_cap_exceeded& e) {
        std::cerr << e.what() << "\n";
        if (!partial_target.empty()) {
            std::vector<IntVector> part;
            for (const auto& v : e.partial) part.push_back(sign_canonical(v));
            std::sort(part.begin(), part.end());
            part.erase(std::unique(part.begin(), part.end()), part.end());
            write_matrix_file(partial_target, vectors_to_matrix(part, partial_width));
        }
        return cap_hit;
    } catch (const cap_exceeded& e) {
        std::cerr << e.what() << "\n";
        if (!partial_target.empty()) write_matrix_file(partial_target, IntMatrix(0, partial_width));
        return cap_hit;
    } catch (const precondition_error& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return precondition;
    } catch (const CLI::RequiredError& e) {
        std::cerr << e.what() << "\n";
        return parse_failed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return failure;
    }
    return ok;
}
