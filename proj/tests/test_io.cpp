#include "lawrence/io.hpp"
#include "lawrence/report.hpp"
#include "lawrence/table.hpp"

#include <gtest/gtest.h>

#include <filesystem>

using namespace lawrence;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("lawrence_io_" + name + "_" + std::to_string(::getpid()));
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

}  // namespace

TEST(MatrixText, RenderFormat) {
    EXPECT_EQ(render_matrix(IntMatrix::identity(2)), "2 2\n1 0\n0 1\n");
    EXPECT_EQ(render_matrix(IntMatrix(0, 3)), "0 3\n");
}

TEST(MatrixText, RoundTrip) {
    IntMatrix m = {{1, -2, 3}, {0, 0, -7}};
    m(0, 0) = Integer::parse("-123456789012345678901234567890");
    EXPECT_EQ(parse_matrix(render_matrix(m)), m);
}

TEST(MatrixText, ToleratesBlankLinesAndSpacing) {
    EXPECT_EQ(parse_matrix("\n2 2\n 1   0\n\n0 1 \n"), IntMatrix::identity(2));
}

TEST(MatrixText, RejectsMalformed) {
    EXPECT_THROW(parse_matrix(""), parse_error);
    EXPECT_THROW(parse_matrix("2\n1 0\n"), parse_error);
    EXPECT_THROW(parse_matrix("2 2\n1 0\n"), parse_error);
    EXPECT_THROW(parse_matrix("1 2\n1 0 3\n"), parse_error);
    EXPECT_THROW(parse_matrix("1 2\n1 x\n"), parse_error);
    EXPECT_THROW(parse_matrix("1 1\n1\n2\n"), parse_error);
    EXPECT_THROW(parse_matrix("-1 2\n"), parse_error);
}

TEST(MatrixText, VectorsRoundTrip) {
    const std::vector<IntVector> vs = {IntVector(std::vector<Integer>{1, -1}), IntVector(std::vector<Integer>{2, 0})};
    EXPECT_EQ(matrix_to_vectors(vectors_to_matrix(vs, 2)), vs);
    EXPECT_THROW(vectors_to_matrix(vs, 3), dimension_error);
}

TEST(Files, AtomicWriteAndVerifiedMatrix) {
    const auto dir = scratch_dir("files");
    const fs::path p = dir / "sub" / "m.txt";
    write_matrix_file(p, IntMatrix{{1, 2}, {3, 4}});
    EXPECT_EQ(read_matrix_file(p), (IntMatrix{{1, 2}, {3, 4}}));
    for (const auto& e : fs::directory_iterator(dir / "sub"))
        EXPECT_EQ(e.path().filename(), "m.txt");  // no leftover temporaries
    EXPECT_THROW(read_file(dir / "missing"), std::runtime_error);
    fs::remove_all(dir);
}

TEST(Labels, FourCycleLegend) {
    const auto text = render_labels(build_model_matrix(parse_complex("[12][14][23][34]"), {2, 2, 2, 2}));
    EXPECT_EQ(text.substr(0, text.find("col 3")), "ground 1,2,3,4\ndims 2,2,2,2\ncol 1 (1,1,1,1)\ncol 2 (1,1,1,2)\n");
    EXPECT_NE(text.find("row 1 [1,2] (1,1)\n"), std::string::npos);
    EXPECT_NE(text.find("row 3 [1,4] (1,1)\n"), std::string::npos);
    EXPECT_NE(text.find("row 5 [1,2] (2,1)\n"), std::string::npos);
    EXPECT_NE(text.find("row 9 [2,3] (1,1)\n"), std::string::npos);
}

TEST(Dims, Parse) {
    EXPECT_EQ(parse_dims("2,3,3"), (TableDims{2, 3, 3}));
    EXPECT_EQ(parse_dims("4"), (TableDims{4}));
    EXPECT_EQ(parse_dims("2, 2"), (TableDims{2, 2}));
    EXPECT_THROW(parse_dims(""), parse_error);
    EXPECT_THROW(parse_dims("2,,3"), parse_error);
    EXPECT_THROW(parse_dims("2,-3"), parse_error);
    EXPECT_THROW(parse_dims("a"), parse_error);
}

TEST(Checkpoint, RoundTrip) {
    const auto dir = scratch_dir("ckpt");
    GraverCheckpoint cp;
    cp.generators = {IntVector(std::vector<Integer>{1, -1, 0}), IntVector(std::vector<Integer>{0, 2, -2})};
    cp.lifted = {0, 2};
    write_checkpoint(dir / "stage", cp, 3);
    EXPECT_TRUE(fs::exists(dir / "stage.ckpt"));
    const auto back = read_checkpoint(dir / "stage");
    ASSERT_TRUE(back);
    EXPECT_EQ(back->generators, cp.generators);
    EXPECT_EQ(back->lifted, cp.lifted);
    EXPECT_FALSE(read_checkpoint(dir / "absent"));
    fs::remove_all(dir);
}

TEST(Report, SchemaAndValues) {
    const auto rep = model_complexities(parse_complex("[12][13][23]"), {3, 3});
    const Json j = report_json(rep);
    EXPECT_EQ(j["schema_version"], report_schema_version);
    EXPECT_EQ(j["model"], "[12][13][23]");
    EXPECT_EQ(j["dims"], Json::array({3, 3}));
    EXPECT_EQ(j["graver_complexity"], 9);
    EXPECT_EQ(j["markov_complexity"], 5);
    EXPECT_EQ(j["lower_bound"], 5);
    EXPECT_EQ(j["mode"], "heuristic");
    EXPECT_TRUE(j["timings"].is_null());
    EXPECT_TRUE(j.contains("timings_reason"));
    EXPECT_EQ(j["witnesses"]["graver_lifted"].size(), 9u);
    EXPECT_EQ(j["witnesses"]["markov_lifted"].size(), 5u);
    EXPECT_EQ(j["per_r_profile"][0]["r"], 2);
    EXPECT_EQ(summary_line(rep), "m=5, g=9, lb=5");
}

TEST(Report, MissingValuesCarryReasons) {
    ComplexityOptions o;
    o.caps.max_basis_elements = 30;
    const Json j = report_json(model_complexities(parse_complex("[12][13][23]"), {3, 3}, o));
    EXPECT_TRUE(j["graver_complexity"].is_null());
    EXPECT_TRUE(j["graver_complexity_reason"].is_string());
}

TEST(Report, RenderIsDeterministicAndParses) {
    const auto a = render_report(model_complexities(parse_complex("[12][14][23]"), {2, 2, 2}));
    const auto b = render_report(model_complexities(parse_complex("[12][14][23]"), {2, 2, 2}));
    EXPECT_EQ(a, b);
    EXPECT_EQ(Json::parse(a).dump(2) + "\n", a);
}

TEST(Table, Suites) {
    EXPECT_EQ(core_suite().size(), 9u);
    EXPECT_EQ(extended_suite().size(), 4u);
    EXPECT_EQ(full_table().size(), 35u);
    EXPECT_THROW(suite_rows("nope"), precondition_error);
    for (const auto& r : full_table()) EXPECT_EQ(parse_complex(r.model).n(), 4u) << r.model;
}
