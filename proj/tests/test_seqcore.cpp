#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>

#include "strand/codon.hpp"
#include "strand/kmer.hpp"
#include "strand/sequence.hpp"

#include "support/test_util.hpp"

using namespace strand;

TEST_CASE("normalize uppercases and validates") {
    CHECK(normalize("aagtcattaca").str() == "AAGTCATTACA");
    CHECK(normalize("").empty());
    CHECK(normalize("AUG").str() == "ATG");
    CHECK(normalize("augUAAtag").str() == "ATGTAATAG");
}

TEST_CASE("normalize rejects symbols outside the alphabet") {
    try {
        normalize("ACGNT");
        FAIL("expected invalid_symbol");
    } catch (const invalid_symbol& e) {
        CHECK(e.position() == 3);
        CHECK(e.symbol() == 'N');
    }
    CHECK_THROWS_AS(normalize("ACG T"), invalid_symbol);
    CHECK_THROWS_AS(normalize("123"), invalid_symbol);
}

TEST_CASE("alphabet code map is the fixed bijection") {
    CHECK(base_code('A') == 0);
    CHECK(base_code('C') == 1);
    CHECK(base_code('G') == 2);
    CHECK(base_code('T') == 3);
    for (unsigned c = 0; c < 4; ++c)
        CHECK(base_code(base_char(c)) == static_cast<int>(c));
}

TEST_CASE("kmer encoding packs most-significant base first") {
    CHECK(encode_kmer("A").code == 0);
    CHECK(encode_kmer("A").k == 1);
    CHECK(encode_kmer("AAG").code == 2);  // 0b000010
    CHECK(encode_kmer("T").code == 3);
    CHECK(decode_kmer(encode_kmer("TACA")) == "TACA");
}

TEST_CASE("kmer encoding rejects out-of-range k") {
    const std::string too_long(32, 'A');
    CHECK_THROWS_AS(encode_kmer(too_long), k_too_large);
    CHECK_THROWS_AS(encode_kmer(""), std::invalid_argument);
    CHECK_NOTHROW(encode_kmer(std::string(31, 'T')));
}

TEST_CASE("kmer round-trip holds over random words") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 10000; ++i) {
        const unsigned k = 2 + static_cast<unsigned>(rng() % 30);  // 2..31
        const Sequence s = testsupport::random_sequence(rng, k);
        const Kmer km = encode_kmer(s.view());
        CHECK(km.k == k);
        CHECK(decode_kmer(km) == s.str());
    }
}

TEST_CASE("kmers_of enumerates consecutive windows") {
    const Sequence s = normalize("AAGTCATTACA");
    const std::vector<std::string> expected{"AAGT", "AGTC", "GTCA", "TCAT",
                                            "CATT", "ATTA", "TTAC", "TACA"};
    const auto kmers = kmers_of(s, 4);
    REQUIRE(kmers.size() == expected.size());
    for (std::size_t i = 0; i < kmers.size(); ++i) CHECK(kmers[i].str() == expected[i]);

    CHECK(kmers_of(normalize("AAG"), 4).empty());
    REQUIRE(kmers_of(normalize("AAGT"), 4).size() == 1);
    CHECK(kmers_of(normalize("AAGT"), 4)[0].str() == "AAGT");
    CHECK_THROWS_AS(kmers_of(s, 1), std::invalid_argument);
}

TEST_CASE("kmers_of window count and overlap properties") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const std::size_t len = rng() % 100;
        const unsigned k = 2 + static_cast<unsigned>(rng() % 30);
        const Sequence s = testsupport::random_sequence(rng, len);
        const auto kmers = kmers_of(s, k);
        const std::size_t expected = len >= k ? len - k + 1 : 0;
        REQUIRE(kmers.size() == expected);
        for (std::size_t w = 0; w + 1 < kmers.size(); ++w) {
            // consecutive windows overlap by exactly k-1 bases
            CHECK(kmers[w].str().substr(1) == kmers[w + 1].str().substr(0, k - 1));
        }
    }
}

TEST_CASE("standard codon table") {
    const CodonTable& t = CodonTable::standard();
    CHECK(t.start() == "ATG");
    CHECK(t.is_stop("TAA"));
    CHECK(t.is_stop("TAG"));
    CHECK(t.is_stop("TGA"));
    CHECK_FALSE(t.is_stop("ATG"));
    CHECK_FALSE(t.is_stop("AAA"));
}

TEST_CASE("codon table validates its invariants") {
    CHECK_THROWS_AS(CodonTable("AT", {"TAA", "TAG", "TGA"}), std::invalid_argument);
    CHECK_THROWS_AS(CodonTable("ATG", {"TAA", "TAA", "TGA"}), std::invalid_argument);
    CHECK_THROWS_AS(CodonTable("TAA", {"TAA", "TAG", "TGA"}), std::invalid_argument);
    CHECK_THROWS_AS(CodonTable("AUG", {"TAA", "TAG", "TGA"}), std::invalid_argument);
}
