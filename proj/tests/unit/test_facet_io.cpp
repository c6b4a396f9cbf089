#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "corpus.hpp"
#include "serrecheck/facet_io.hpp"
#include "serrecheck/generators.hpp"
#include "serrecheck/homology.hpp"

using namespace serrecheck;

namespace {

bool isomorphic_by_search(const Complex& A, const Complex& B) {
    if (A.n_vertices() != B.n_vertices() || A.facets().size() != B.facets().size()) return false;
    std::vector<VertexId> perm(A.n_vertices());
    std::iota(perm.begin(), perm.end(), 0);
    auto target = B.facets();
    std::sort(target.begin(), target.end());
    do {
        std::vector<Face> mapped;
        for (const auto& f : A.facets()) {
            std::vector<VertexId> v;
            for (auto x : f.vertices()) v.push_back(perm[x]);
            mapped.emplace_back(std::move(v));
        }
        std::sort(mapped.begin(), mapped.end());
        if (mapped == target) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace

TEST(ParseFacetText, Basic) {
    const auto parsed = parse_facet_text("a b c\nd e\n");
    EXPECT_EQ(parsed.complex, Complex::from_facets({{"a", "b", "c"}, {"d", "e"}}));
    EXPECT_TRUE(parsed.warnings.empty());
}

TEST(ParseFacetText, CommentsAndDuplicates) {
    const auto parsed = parse_facet_text("# note\na b\nb a\n");
    EXPECT_EQ(parsed.complex, Complex::from_facets({{"a", "b"}}));
}

TEST(ParseFacetText, WhitespaceAndTrailingComments) {
    const auto parsed = parse_facet_text("  a\tb   # edge\r\n\n   \n c  d\n#tail");
    EXPECT_EQ(parsed.complex, Complex::from_facets({{"a", "b"}, {"c", "d"}}));
}

TEST(ParseFacetText, EmptyAfterCommentsIsVoidWithWarning) {
    const auto parsed = parse_facet_text("# nothing here\n\n");
    EXPECT_TRUE(parsed.complex.is_void());
    EXPECT_EQ(parsed.warnings.size(), 1u);
    EXPECT_TRUE(parse_facet_text("").complex.is_void());
}

TEST(ParseFacetFile, ReadsFixtureAndMatchesGenerator) {
    const auto parsed = parse_facet_file(SERRECHECK_TEST_DATA_DIR "/rp2.facets");
    const auto& K = parsed.complex;
    const auto G = rp2_minimal();
    for (const auto& F : {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(3)})
        EXPECT_EQ(homology_profile(K, F), homology_profile(G, F));
    EXPECT_EQ(K.f_vector(), G.f_vector());
    EXPECT_TRUE(isomorphic_by_search(K, G));
}

TEST(ParseFacetFile, MissingFileThrows) {
    EXPECT_THROW(parse_facet_file("/nonexistent/definitely/missing.facets"), std::runtime_error);
}

TEST(WriteFacetText, RoundTripsCorpus) {
    for (const auto& [name, K] : testcorpus::full()) {
        const auto text = write_facet_text(K);
        EXPECT_EQ(parse_facet_text(text).complex, K) << name;
    }
    EXPECT_EQ(write_facet_text(Complex{}), "");
    EXPECT_THROW(write_facet_text(Complex::empty_face_complex()), std::invalid_argument);
}
