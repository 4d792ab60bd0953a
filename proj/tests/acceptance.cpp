// Acceptance driver: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. Set LAWRENCE_SKIP_EXTENDED=1 to leave out
// the multi-minute rows (they run by default).

#include "lawrence/bases.hpp"
#include "lawrence/complexity.hpp"
#include "lawrence/io.hpp"
#include "lawrence/model_matrix.hpp"
#include "lawrence/table.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>
#include <sys/wait.h>

using namespace lawrence;
namespace fs = std::filesystem;

namespace {

struct Verdict {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back("FAILED: " + what);
        }
    }
    void note(const std::string& s) { notes.push_back(s); }
};

bool extended_enabled() {
    const char* v = std::getenv("LAWRENCE_SKIP_EXTENDED");
    return !(v && std::string(v) == "1");
}

fs::path scratch() {
    static const fs::path p = [] {
        const fs::path d = fs::temp_directory_path() / ("lawrence_acceptance_" + std::to_string(::getpid()));
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return p;
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(LAWRENCE_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

IntMatrix model(const std::string& s, const TableDims& d) { return build_model_matrix(parse_complex(s), d).matrix; }

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
    std::ostringstream o;
    o.precision(s < 10 ? 2 : 0);
    o << std::fixed << s << " s";
    return o.str();
}

std::string opt_str(const Outcome& o) { return o.value ? std::to_string(*o.value) : "null (" + o.reason + ")"; }

// Reports completed by the complexity criteria, checked again by the
// property suite.
std::vector<ComplexityReport> completed_reports;
std::mutex reports_mutex;

void keep_report(const ComplexityReport& r) {
    std::lock_guard<std::mutex> lock(reports_mutex);
    completed_reports.push_back(r);
}

// Instances shared by the Graver oracle and the property suites. `markov`
// is a nonnegative matrix with the same kernel when one exists.
struct Instance {
    std::string name;
    IntMatrix matrix;
    std::optional<IntMatrix> markov;
};

std::vector<Instance> oracle_instances() {
    std::vector<Instance> out;
    for (const auto& [r, c] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {2, 4}, {3, 3}, {3, 4}}) {
        const auto m = model("[1][2]", {r, c});
        out.push_back({"independence " + std::to_string(r) + "x" + std::to_string(c), m, m});
    }
    {
        const auto m = model("[12][13][23]", {2, 2, 2});
        out.push_back({"no-three-way 2x2x2", m, m});
    }
    std::set<std::string> seen;
    for (const auto& row : core_suite()) {
        const auto ld = link_deletion_matrices(parse_complex(row.model), {2, 2, 2});
        for (const auto& [tag, m] : {std::pair<std::string, IntMatrix>{"link", ld.a.matrix}, {"deletion", ld.b}}) {
            if (m.rows() == 0 || !seen.insert(matrix_id(m)).second) continue;
            out.push_back({tag + " of " + row.model, m, m});
        }
    }
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> entry(-2, 2);
    int random_count = 0;
    while (random_count < 10) {
        IntMatrix m(3, 6);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 6; ++j) m(i, j) = entry(rng);
        if (rank_of(m) < 3 || m.has_zero_column()) continue;
        const auto nn = nonnegative_equivalent(m);
        if (!nn) continue;  // kernel not pointed
        out.push_back({"random 3x6 #" + std::to_string(++random_count), m, nn});
    }
    return out;
}

// ---------------------------------------------------------------------------

Verdict ac1() {
    Verdict v;
    const auto out = scratch() / "four_cycle.txt";
    v.require(run_cli("matrix --complex '[12][14][23][34]' --dims 2,2,2,2 --out " + out.string()) == 0,
              "matrix command exit code");
    const std::string text = read_file(out);
    v.require(text == render_matrix(fixture::four_cycle_reference), "file bytes equal the reference 16x16 matrix");
    v.require(parse_matrix(text) == fixture::four_cycle_reference, "parsed matrix equals the reference one");
    v.note("16x16, row/column order exact");
    return v;
}

Verdict ac2() {
    Verdict v;
    std::size_t checked = 0;
    for (const auto& row : full_table()) {
        const auto delta = parse_complex(row.model);
        for (const TableDims& dims : {TableDims{2, 2, 2, 2}, TableDims{3, 2, 2, 2}}) {
            const auto full = build_model_matrix(delta, dims).matrix;
            const auto ld = link_deletion_matrices(delta, {dims.begin() + 1, dims.end()});
            const auto lam = lawrence_lift(ld.a.matrix, ld.b, static_cast<std::size_t>(dims[0])).matrix;
            const auto perm = lifting_row_permutation(delta, dims);
            std::vector<std::size_t> sorted = perm;
            std::sort(sorted.begin(), sorted.end());
            bool is_perm = sorted.size() == full.rows();
            for (std::size_t i = 0; is_perm && i < sorted.size(); ++i) is_perm = sorted[i] == i;
            v.require(is_perm, row.model + ": row map is a permutation");
            v.require(permute_rows(full, perm) == lam, row.model + " d1=" + std::to_string(dims[0]));
            ++checked;
        }
    }
    v.note(std::to_string(checked) + " (complex, d) pairs");
    return v;
}

Verdict ac3() {
    Verdict v;
    std::vector<IntVector> rows;
    for (const auto& r : fixture::four_cycle_kernel_rows) rows.push_back(oracle::vec(r));
    const auto u = SlicedVector::from_slices(rows);
    v.require(fixture::four_cycle_reference.annihilates(u.flat()), "slice-major flattening is in the kernel");
    v.require(type_of(u) == 2, "type 2");
    v.require(oracle::type(oracle::ints(u.flat()), 2, 8) == 2, "type 2 (oracle)");
    // Independent check of the product, entry by entry.
    bool zero = true;
    for (std::size_t i = 0; i < fixture::four_cycle_reference.rows(); ++i) {
        std::int64_t s = 0;
        for (std::size_t j = 0; j < 16; ++j)
            s += fixture::four_cycle_reference(i, j).to_int64() * fixture::four_cycle_kernel_rows[j / 8][j % 8];
        zero = zero && s == 0;
    }
    v.require(zero, "row-by-row product is zero");
    return v;
}

Verdict ac4(const std::vector<Instance>& instances) {
    Verdict v;
    std::size_t nontrivial = 0;
    for (const auto& inst : instances) {
        const auto g = graver_basis(inst.matrix);
        std::int64_t start = 1;
        for (const auto& x : g.vectors) start = std::max(start, norm_inf(x).to_int64());
        // The box is grown from the largest entry seen until two sizes agree.
        const auto bf = graver_bruteforce_stable(inst.matrix, start, start + 6);
        v.require(g.vectors == bf.vectors, inst.name + ": graver_basis != stabilized brute force");
        nontrivial += !g.vectors.empty();
    }
    v.require(instances.size() >= 20, "at least 20 instances");
    v.note(std::to_string(instances.size()) + " instances, " + std::to_string(nontrivial) + " with nontrivial kernel");
    return v;
}

Verdict ac5() {
    Verdict v;
    const auto delta = parse_complex("[12][13][23]");
    const auto ld = link_deletion_matrices(delta, {3, 3});
    const auto g = graver_complexity(ld.a.matrix, ld.b);
    v.require(g.value == 9, "g = 9 (got " + std::to_string(g.value) + ")");
    const auto lb = markov_lower_bound(ld.a.matrix, ld.b);
    v.require(lb.value == 5, "lower bound 5 (got " + std::to_string(lb.value) + ")");

    const auto heur = model_complexities(delta, {3, 3});
    keep_report(heur);
    v.require(heur.markov_complexity.value == 5u, "heuristic m = 5 (got " + opt_str(heur.markov_complexity) + ")");
    v.require(heur.graver_complexity.value == 9u, "report g = 9");
    v.require(heur.lower_bound.value == 5u, "report lb = 5");
    for (std::size_t r : {6u, 7u}) {
        const auto it = std::find_if(heur.profile.begin(), heur.profile.end(),
                                     [&](const ProfileEntry& p) { return p.r == r; });
        v.require(it != heur.profile.end() && it->max_type == 5, "profile is 5 at r=" + std::to_string(r));
    }

    ComplexityOptions exact;
    exact.mode = ComplexityMode::exact;
    const auto ex = model_complexities(delta, {3, 3}, exact);
    keep_report(ex);
    v.require(ex.markov_complexity.value == 5u, "exact m = 5 (got " + opt_str(ex.markov_complexity) + ")");
    v.require(ex.r_examined == 9, "exact mode examined r up to 9");
    v.note("g=9, lb=5, m=5 (heuristic stop at r=" + std::to_string(heur.r_examined) + "; exact through r=9)");
    return v;
}

Verdict ac6() {
    Verdict v;
    std::vector<TableRow> rows = core_suite();
    const std::size_t core_count = rows.size();
    if (extended_enabled()) {
        const auto ext = extended_suite();
        rows.insert(rows.end(), ext.begin(), ext.end());
    }
    std::vector<std::optional<ComplexityReport>> reports(rows.size());
    std::vector<std::string> errors(rows.size());
    std::atomic<std::size_t> next{0};
    const std::size_t workers = std::max(1u, std::min(4u, std::thread::hardware_concurrency()));
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < rows.size(); i = next++) {
                try {
                    reports[i] = model_complexities(parse_complex(rows[i].model), {2, 2, 2});
                } catch (const std::exception& e) {
                    errors[i] = e.what();
                }
            }
        });
    for (auto& t : pool) t.join();

    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        if (!reports[i]) {
            v.require(false, row.model + ": " + errors[i]);
            continue;
        }
        keep_report(*reports[i]);
        const auto& rep = *reports[i];
        const bool ok = rep.markov_complexity.value == row.m_expected &&
                        rep.graver_complexity.value == static_cast<std::size_t>(row.g_expected);
        v.require(ok, row.model + " expected (" + std::to_string(*row.m_expected) + "," +
                          std::to_string(row.g_expected) + ") got (" + opt_str(rep.markov_complexity) + "," +
                          opt_str(rep.graver_complexity) + ")");
    }
    v.note(std::to_string(core_count) + " core rows" +
           (extended_enabled() ? " + " + std::to_string(rows.size() - core_count) + " extended rows"
                               : std::string("; extended rows skipped (LAWRENCE_SKIP_EXTENDED=1)")));
    return v;
}

Verdict ac7() {
    Verdict v;
    const auto delta = parse_complex("[12][13][23]");
    std::vector<std::pair<int, std::size_t>> cases = {{3, 5}, {4, 8}};
    if (extended_enabled()) cases.push_back({5, 12});
    for (const auto& [d3, want] : cases) {
        const auto ld = link_deletion_matrices(delta, {3, d3});
        const auto lb = markov_lower_bound(ld.a.matrix, ld.b);
        v.require(lb.value == want, "m([12][13][23];3," + std::to_string(d3) + ") >= " + std::to_string(want) +
                                        " (got " + std::to_string(lb.value) + ")");
        if (lb.witness) {
            // The witness is a kernel vector of the lifting with the claimed type.
            const auto lam = lawrence_lift(ld.a.matrix, ld.b, lb.witness->slices()).matrix;
            v.require(lam.annihilates(lb.witness->flat()), "witness lies in the kernel of the lifting");
            v.require(type_of(*lb.witness) == want, "witness type");
        }
    }
    if (!extended_enabled()) v.note("(3,5) >= 12 skipped (LAWRENCE_SKIP_EXTENDED=1)");
    v.note("skipped as beyond desk scale: the two table rows with unknown m, and "
           "m([123][124][134][234];3,3,3) >= 19");
    return v;
}

bool has_row_splitting_closure(const IntMatrix& a, const IntMatrix& lam_next, const SlicedVector& su, Verdict& v,
                               const std::string& name) {
    bool split_any = false;
    for (std::size_t i = 0; i < su.slices(); ++i) {
        if (su.slice(i).is_zero()) continue;
        const auto split = has_conformal_decomposition(su.slice(i), a);
        if (!split) continue;
        std::vector<IntVector> rows;
        for (std::size_t k = 0; k < su.slices(); ++k) {
            if (k == i) {
                rows.push_back(split->first);
                rows.push_back(split->second);
            } else {
                rows.push_back(su.slice(k));
            }
        }
        const IntVector w = SlicedVector::from_slices(rows).flat();
        v.require(lam_next.annihilates(w) && !has_conformal_decomposition(w, lam_next),
                  name + ": split of slice " + std::to_string(i) + " is not primitive");
        split_any = true;
    }
    return split_any;
}

Verdict ac8(const std::vector<Instance>& instances) {
    Verdict v;
    std::size_t markov_checked = 0, removals = 0;
    for (const auto& inst : instances) {
        if (!inst.markov) continue;
        const IntMatrix& m = *inst.markov;
        const auto g = graver_basis(m);
        v.require(g.vectors == graver_vectors(inst.matrix), inst.name + ": equivalent matrix changes the kernel");
        const auto s = semiconformal_free_set(m);
        const auto mb = minimal_markov_basis(m);
        const auto u = universal_markov_basis(m);
        v.require(s.subset_of(mb), inst.name + ": S(A) within minimal");
        v.require(mb.subset_of(u), inst.name + ": minimal within universal");
        v.require(u.subset_of(g), inst.name + ": universal within Graver");
        v.require(is_markov_basis(mb, m, g), inst.name + ": minimal basis is Markov");
        for (std::size_t i = 0; i < mb.size(); ++i) {
            auto fewer = mb.vectors;
            fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(i));
            v.require(!is_markov_basis(make_basis(BasisKind::markov_minimal, m, fewer), m, g),
                      inst.name + ": still Markov after removing element " + std::to_string(i));
            ++removals;
        }
        ++markov_checked;
    }

    // Row-splitting closure on Graver elements of small liftings, sampled
    // with a fixed seed among those with a decomposable slice.
    std::size_t sampled = 0;
    std::mt19937 rng(7);
    const std::vector<std::pair<std::string, TableDims>> lifts = {
        {"[12][13][23]", {3, 3}}, {"[12][14][23]", {2, 2, 2}}, {"[12][34]", {2, 2, 2}}, {"[12][13][4]", {2, 2, 2}}};
    for (const auto& [name, rest] : lifts) {
        const auto ld = link_deletion_matrices(parse_complex(name), rest);
        for (std::size_t r : {2u, 3u}) {
            const auto lam_next = lawrence_lift(ld.a.matrix, ld.b, r + 1).matrix;
            auto g = graver_vectors(lawrence_lift(ld.a.matrix, ld.b, r).matrix);
            std::shuffle(g.begin(), g.end(), rng);
            std::size_t here = 0;
            for (const auto& x : g) {
                if (here == 10 || sampled == 50) break;
                const SlicedVector su(x, r, ld.a.matrix.cols());
                if (has_row_splitting_closure(ld.a.matrix, lam_next, su, v, name + " r=" + std::to_string(r))) {
                    ++here;
                    ++sampled;
                }
            }
        }
    }
    v.require(sampled == 50, "50 sampled Graver elements with a decomposable slice (got " + std::to_string(sampled) + ")");

    // Every completed report.
    std::size_t reports = 0;
    for (const auto& rep : completed_reports) {
        const std::string tag = render(rep.model);
        if (rep.markov_complexity.value && rep.graver_complexity.value)
            v.require(*rep.markov_complexity.value <= *rep.graver_complexity.value, tag + ": m <= g");
        if (rep.markov_complexity.value && rep.lower_bound.value)
            v.require(*rep.lower_bound.value <= *rep.markov_complexity.value, tag + ": lb <= m");
        if (rep.markov_max_type.value && !rep.profile.empty()) {
            const std::size_t m = *rep.markov_max_type.value;
            bool reached = false;
            for (std::size_t i = 0; i < rep.profile.size(); ++i) {
                if (i) v.require(rep.profile[i].max_type >= rep.profile[i - 1].max_type, tag + ": profile decreases");
                if (reached) v.require(rep.profile[i].max_type == m, tag + ": profile moves past m");
                reached = reached || rep.profile[i].max_type == m;
            }
            v.require(reached, tag + ": profile never reaches m");
        }
        ++reports;
    }
    v.note(std::to_string(markov_checked) + " Markov instances, " + std::to_string(removals) + " removals, " +
           std::to_string(sampled) + " split samples, " + std::to_string(reports) + " reports");
    return v;
}

Verdict ac9() {
    Verdict v;
    const auto d1 = scratch() / "table_jobs1";
    const auto d4 = scratch() / "table_jobs4";
    v.require(run_cli("table --suite core --jobs 1 --out " + d1.string()) == 0, "table --jobs 1 exit code");
    v.require(run_cli("table --suite core --jobs 4 --out " + d4.string()) == 0, "table --jobs 4 exit code");
    std::set<std::string> names1, names4;
    for (const auto& e : fs::directory_iterator(d1)) names1.insert(e.path().filename().string());
    for (const auto& e : fs::directory_iterator(d4)) names4.insert(e.path().filename().string());
    v.require(names1 == names4, "same file names");
    for (const auto& n : names1) {
        if (!names4.count(n)) continue;
        v.require(read_file(d1 / n) == read_file(d4 / n), n + " differs");
    }
    v.note(std::to_string(names1.size()) + " files byte-identical");
    return v;
}

}  // namespace

int main() {
    bool all = true;
    std::vector<Instance> instances;
    auto run = [&](const std::string& id, const std::string& title, const std::function<Verdict()>& f) {
        const auto t0 = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = f();
        } catch (const std::exception& e) {
            v.require(false, std::string("exception: ") + e.what());
        }
        all = all && v.pass;
        std::cout << id << " " << (v.pass ? "PASS" : "FAIL") << "  " << title << " [" << fmt_seconds(seconds_since(t0))
                  << "]";
        for (const auto& n : v.notes) std::cout << "\n      " << n;
        std::cout << std::endl;
    };
    run("AC1", "four-cycle model matrix matches the reference matrix", ac1);
    run("AC2", "model matrices factor as liftings of link and deletion", ac2);
    run("AC3", "2x8 kernel vector of the lifted four-cycle has type 2", ac3);
    run("AC4", "Graver bases equal stabilized brute force", [&] {
        instances = oracle_instances();
        return ac4(instances);
    });
    run("AC5", "triangle at (3,3): m=5, g=9, lower bound 5", ac5);
    run("AC6", "binary table rows", ac6);
    run("AC7", "Markov complexity lower bounds for the triangle", ac7);
    run("AC8", "basis containments, Markov minimality, row splitting, report invariants",
        [&] { return ac8(instances); });
    run("AC9", "table reports are identical across --jobs", ac9);
    fs::remove_all(scratch());
    std::cout << (all ? "ALL PASS" : "SOME CRITERIA FAILED") << std::endl;
    return all ? 0 : 1;
}
