#include "sqpack/constructions.hpp"
#include "sqpack/io.hpp"
#include "support/random_packings.hpp"

#include <gtest/gtest.h>

#include <string>

namespace sqpack {
namespace {

std::size_t count_of(const std::string& haystack, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) ++n;
    return n;
}

TEST(ParsePackingTest, GridDocument) {
    const std::string doc = R"({"squares": [
        {"x": "0/1", "y": "0/1", "side": "1/2"},
        {"x": "1/2", "y": "0/1", "side": "1/2"},
        {"x": "0/1", "y": "1/2", "side": "1/2"},
        {"x": "1/2", "y": "1/2", "side": "1/2"}], "k": 2})";
    const PackingDocument parsed = parse_packing_document(doc);
    EXPECT_EQ(parsed.packing.size(), 4u);
    EXPECT_EQ(parsed.k, 2);
    EXPECT_TRUE(validate(parsed.packing).is_valid);
}

TEST(ParsePackingTest, NormalizesRationals) {
    const Packing p = parse_packing(R"({"squares": [{"x": "0/1", "y": "0/1", "side": "3/6"}]})");
    EXPECT_EQ(p.squares[0].side, Rational(1, 2));
    EXPECT_EQ(p.squares[0].side.canonical(), "1/2");
}

TEST(ParsePackingTest, SemanticErrorsNameTheField) {
    try {
        parse_packing(R"({"squares": [{"x": "0/1", "y": "0/1", "side": "0/1"}]})");
        FAIL() << "expected FormatError";
    } catch (const FormatError& e) {
        EXPECT_EQ(e.field(), "squares[0].side");
    }
    EXPECT_THROW(parse_packing(R"({"squares": [{"x": "0/1", "y": "0/1", "side": "-1/2"}]})"), FormatError);
    EXPECT_THROW(parse_packing(R"({"squares": [{"x": "0.5", "y": "0/1", "side": "1/2"}]})"), FormatError);
    EXPECT_THROW(parse_packing(R"({"squares": [{"x": 0, "y": "0/1", "side": "1/2"}]})"), FormatError);
    EXPECT_THROW(parse_packing(R"({"squares": [{"x": "0/1", "side": "1/2"}]})"), FormatError);
    EXPECT_THROW(parse_packing(R"({"squares": [], "k": 0})"), FormatError);
    EXPECT_THROW(parse_packing(R"({"tiles": []})"), FormatError);
}

TEST(ParsePackingTest, SyntaxErrorsCarryLine) {
    try {
        parse_packing("{\"squares\": [\n  {\"x\": \"0/1\",\n  oops}\n]}");
        FAIL() << "expected FormatError";
    } catch (const FormatError& e) {
        EXPECT_EQ(e.line(), 3u);
    }
}

TEST(EmitPackingTest, Examples) {
    const std::string one = emit_packing(construct_split(1));
    EXPECT_EQ(count_of(one, "\"1/2\""), 4u);  // two sides plus the second square's corner
    EXPECT_EQ(parse_packing(one), construct_split(1));

    const std::string eight = emit_packing(construct_optimal(8));
    EXPECT_EQ(emit_packing(parse_packing(eight)), eight);

    EXPECT_EQ(emit_packing(Packing{}), "{\n  \"squares\": []\n}\n");
    EXPECT_EQ(emit_packing(construct_grid(1)),
              "{\n  \"squares\": [\n    {\n      \"x\": \"0/1\",\n      \"y\": \"0/1\",\n      \"side\": \"1/1\"\n    }\n  ]\n}\n");
}

TEST(EmitPackingTest, RoundTripWithHugeDenominators) {
    testing::Rng rng(41);
    const Integer huge = Integer("18446744073709551616") * 1000003;  // beyond 64 bits
    for (int trial = 0; trial < 30; ++trial) {
        Packing p = testing::random_packing(rng, 20);
        const Rational shrink(huge - Integer(rng.uniform(1, 1000)), huge);
        for (auto& s : p.squares) {
            s.x *= shrink;
            s.y *= shrink;
            s.side *= shrink;
        }
        const std::string text = emit_packing(p, 3);
        const PackingDocument back = parse_packing_document(text);
        ASSERT_EQ(back.packing, p);
        ASSERT_EQ(back.k, 3);
        ASSERT_EQ(emit_packing(back.packing, back.k), text);
    }
}

TEST(JsonTest, WitnessAndTranscript) {
    OverlapWitness w{Rational(0), Rational(3, 10), 0, 1, Engine::sweep};
    EXPECT_EQ(to_json(w).dump(), R"({"point":["0/1","3/10"],"first":0,"second":1,"engine":"sweep"})");

    const Json t = to_json(build_transcript(construct_grid(2).squares, 2, Rational(1, 4)));
    EXPECT_EQ(t["a"], "1/4");
    EXPECT_EQ(t["classB"].size(), 4u);
    EXPECT_EQ(t["line_loads"], Json::array({"1/1", "1/1"}));
    EXPECT_EQ(t["checks"]["chain_holds"], true);
}

TEST(EmitSvgTest, SplitWithShading) {
    SvgOptions opts;
    opts.highlighted = {24, 25};
    const std::string svg = emit_svg(construct_split(5), opts);
    EXPECT_EQ(count_of(svg, "<rect"), 27u);  // outline + 26 squares
    EXPECT_EQ(count_of(svg, "fill=\"lightgray\""), 2u);
    // The shaded 1/10 squares sit at x = 800 and x = 900 on the 1000-unit viewport.
    EXPECT_NE(svg.find("<rect x=\"800.000\" y=\"900.000\" width=\"100.000\""), std::string::npos);
    EXPECT_NE(svg.find("<rect x=\"900.000\" y=\"800.000\" width=\"100.000\""), std::string::npos);
}

TEST(EmitSvgTest, SweepOverlay) {
    SvgOptions opts;
    opts.sweep_k = 3;
    opts.sweep_a = Rational(1, 5);
    const std::string svg = emit_svg(construct_optimal(10), opts);
    EXPECT_EQ(count_of(svg, "<line"), 3u);
    EXPECT_NE(svg.find("x1=\"200.000\""), std::string::npos);
    EXPECT_NE(svg.find("x1=\"533.333\""), std::string::npos);
    EXPECT_NE(svg.find("x1=\"866.667\""), std::string::npos);
}

TEST(EmitSvgTest, EmptyPackingIsBareOutline) {
    const std::string svg = emit_svg(Packing{});
    EXPECT_EQ(count_of(svg, "<rect"), 1u);
    EXPECT_EQ(count_of(svg, "<line"), 0u);
    EXPECT_EQ(svg, emit_svg(Packing{}));
}

}  // namespace
}  // namespace sqpack
