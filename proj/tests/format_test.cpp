#include <gtest/gtest.h>

#include "schroeder/render.hpp"
#include "schroeder/text.hpp"

using namespace schroeder;

TEST(ParsePermutation, AcceptsWhitespaceVariants) {
    EXPECT_EQ(parse_permutation("2 1 0"), Permutation({2, 1, 0}));
    EXPECT_EQ(parse_permutation("  2\t1\n0  "), Permutation({2, 1, 0}));
    EXPECT_EQ(parse_permutation("0"), Permutation({0}));
    EXPECT_EQ(parse_permutation("10 9 8 7 6 5 4 3 2 1 0").n(), 10);
}

TEST(ParsePermutation, RejectsWithColumn) {
    try {
        parse_permutation("1 x 0");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.column, 3u);
    }
    EXPECT_THROW(parse_permutation(""), ParseError);
    EXPECT_THROW(parse_permutation("   "), ParseError);
    EXPECT_THROW(parse_permutation("-1 0"), ParseError);   // unsigned decimals only
    EXPECT_THROW(parse_permutation("99999999999999"), ParseError);
    EXPECT_THROW(parse_permutation("0 2"), InvalidPermutation);  // domain, not syntax
}

TEST(ParsePathWord, AcceptsWhitespaceInsideWords) {
    EXPECT_EQ(parse_path_word("NNE ED NNND NEEN EDEE").size(), 10);
    EXPECT_EQ(path_word(parse_path_word("N E")), "NE");
    EXPECT_EQ(path_word(parse_path_word("")), "");
}

TEST(ParsePathWord, RejectsWithColumn) {
    try {
        parse_path_word("NNExD");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.column, 4u);
    }
    EXPECT_THROW(parse_path_word("n e"), ParseError);  // uppercase alphabet only
    EXPECT_THROW(parse_path_word("NDX"), ParseError);
}

TEST(Formatting, RoundTrips) {
    const Permutation p({2, 1, 0, 7, 9, 6, 10, 5, 3, 4, 8});
    EXPECT_EQ(parse_permutation(to_string(p)), p);
    const SchroederPath q = parse_path_word("NNEEDNNNDNEENEDEE");
    EXPECT_EQ(parse_path_word(path_word(q)), q);
    EXPECT_EQ(to_string(CoinversionTable({1, 1, 0, 4, 1})), "1 1 0 4 1");
    EXPECT_EQ(to_string(CoinversionTable({})), "");
}

TEST(HistogramExport, TwoColumnText) {
    StatHistogram h;
    for (int v : {0, 1, 1, 2, 2, 3}) h.add(v);
    EXPECT_EQ(histogram_tsv(h), "0\t1\n1\t2\n2\t2\n3\t1\n");
    EXPECT_EQ(histogram_tsv(StatHistogram{}), "");
}

TEST(HistogramExport, JsonObject) {
    StatHistogram h;
    for (int v : {0, 1, 1}) h.add(v);
    nlohmann::json j = histogram_json(1, "area", h);
    EXPECT_EQ(j["n"], 1);
    EXPECT_EQ(j["statistic"], "area");
    EXPECT_EQ(j["total"], 3);
    EXPECT_EQ(j["bins"]["0"], 1);
    EXPECT_EQ(j["bins"]["1"], 2);
    EXPECT_EQ(j["bins"].size(), 2u);
}

TEST(RenderAscii, SmallGrids) {
    EXPECT_EQ(render_ascii(parse_path_word("D")), ". .\n /\n.\n");
    EXPECT_EQ(render_ascii(parse_path_word("NE")), ".-.\n|.\n.\n");
    EXPECT_EQ(render_ascii(SchroederPath()), ".\n");
}

TEST(RenderAscii, Deterministic) {
    const SchroederPath q = parse_path_word("NNEEDNNNDNEENEDEE");
    const std::string a = render_ascii(q);
    EXPECT_EQ(a, render_ascii(q));
    EXPECT_EQ(std::count(a.begin(), a.end(), '/'), 3);  // one per D step
    EXPECT_EQ(std::count(a.begin(), a.end(), '|'), 7);
    EXPECT_EQ(std::count(a.begin(), a.end(), '-'), 7);
}

TEST(RenderSvg, CountsElements) {
    const SchroederPath q = parse_path_word("NNEEDNNNDNEENEDEE");
    const std::string svg = render_svg(q, 40, true);
    auto count = [&svg](const std::string& needle) {
        long long c = 0;
        for (std::size_t pos = svg.find(needle); pos != std::string::npos;
             pos = svg.find(needle, pos + needle.size()))
            ++c;
        return c;
    };
    EXPECT_EQ(count("class=\"step\""), 17);   // one line per step
    EXPECT_EQ(count("class=\"cell\""), 34);   // one square per left cell
    EXPECT_EQ(count("class=\"diagonal\""), 1);
    EXPECT_EQ(svg.find("<?xml"), 0u);
    EXPECT_NE(svg.find("</svg>"), std::string::npos);

    const std::string unshaded = render_svg(q, 40, false);
    EXPECT_EQ(unshaded.find("class=\"cell\""), std::string::npos);
    EXPECT_EQ(svg, render_svg(q, 40, true));  // byte-identical reruns
    EXPECT_THROW(render_svg(q, 0, false), std::invalid_argument);
}

TEST(RenderSpec, SelectsFormat) {
    const SchroederPath q = parse_path_word("D");
    RenderSpec spec;
    EXPECT_EQ(render(q, spec), render_ascii(q));
    spec.format = RenderSpec::Format::Svg;
    spec.cell_size = 12;
    EXPECT_EQ(render(q, spec), render_svg(q, 12, false));
}
