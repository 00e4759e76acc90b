#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "brauerkit/cipher/bridges.hpp"
#include "brauerkit/cipher/friedman.hpp"
#include "support.hpp"

using namespace brauerkit;
using namespace brauerkit::cipher;

namespace {

const std::string mdpi_cipher = "OOPAELRIXFGGBWDODDEPK";

std::int64_t brute_force_pairs(const std::string& s) {
    std::int64_t same = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < s.size(); ++j)
            if (i != j && s[i] == s[j]) ++same;
    return same;
}

std::string joined(const BrauerConfiguration::word_type& w) {
    std::string out;
    for (const auto& v : w) out += v.label();
    return out;
}

}  // namespace

TEST_CASE("vigenere worked example") {
    auto key = VigenereKey::from_text("MDPI");
    CHECK(vigenere_encrypt("classicalcryptography", key) == mdpi_cipher);
    CHECK(vigenere_decrypt(mdpi_cipher, key) == "CLASSICALCRYPTOGRAPHY");
    CHECK(vigenere_encrypt("HELLO", VigenereKey::from_text("AAA")) == "HELLO");
    CHECK_THROWS_AS(VigenereKey::from_text(""), error);
    try {
        (void)vigenere_encrypt("AB CD", key);
        FAIL("expected parse error");
    } catch (const parse_error& e) {
        CHECK(e.offset() == 2);
    }
    CHECK(Alphabet::english().normalize("ab, cd!") == "ABCD");
}

TEST_CASE("vigenere round trip on random inputs") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        auto plain = testsupport::uniform_sample(rng, 1 + rng() % 60);
        auto k = testsupport::random_key(rng, 1 + rng() % 9);
        auto key = VigenereKey::from_text(k);
        auto c = vigenere_encrypt(plain, key);
        CHECK(c == testsupport::oracle_vigenere(plain, k));
        CHECK(vigenere_decrypt(c, key) == plain);
    }
}

TEST_CASE("block transposition") {
    BlockPermutation pi({3, 4, 1, 2});
    CHECK(pi.apply(std::string("CRYP")) == "YPCR");
    CHECK(pi.apply(std::string("TOGR")) == "GRTO");
    CHECK(pi.inverse().apply(std::string("YPCR")) == "CRYP");
    CHECK(BlockPermutation::identity(4).apply(std::string("ABCD")) == "ABCD");
    CHECK_THROWS_AS(BlockPermutation({1, 1, 2}), error);
    CHECK_THROWS_AS(pi.apply(std::string("ABC")), error);

    auto blocks = split_blocks("CRYPTOGRAPHY", {4, 4, 4});
    std::vector<BlockPermutation> perms(3, pi);
    auto c = transposition_encrypt(blocks, perms);
    CHECK(c == "YPCRGRTOHYAP");
    CHECK(transposition_decrypt(split_blocks(c, {4, 4, 4}), perms) == "CRYPTOGRAPHY");
    CHECK_THROWS_AS(split_blocks("ABCDE", {2, 2}), error);
}

TEST_CASE("transposition round trip on random inputs") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 200; ++i) {
        std::vector<std::size_t> sizes;
        std::vector<BlockPermutation> perms;
        std::size_t total = 0;
        for (int b = 0; b < 1 + static_cast<int>(rng() % 5); ++b) {
            std::size_t s = 1 + rng() % 6;
            std::vector<std::size_t> p(s);
            std::iota(p.begin(), p.end(), 1);
            std::shuffle(p.begin(), p.end(), rng);
            sizes.push_back(s);
            perms.emplace_back(p);
            total += s;
        }
        auto plain = testsupport::uniform_sample(rng, total);
        auto c = transposition_encrypt(split_blocks(plain, sizes), perms);
        CHECK(transposition_decrypt(split_blocks(c, sizes), perms) == plain);
    }
}

TEST_CASE("route reading") {
    auto g = Grid::from_rows({"CRA", "RGP", "YOH", "PTY"});
    CHECK(route_read(g, RouteSpec::column_boustrophedon(4, 3)) == "CRYPTOGRAPHY");
    CHECK(route_read(g, RouteSpec::row_major(4, 3)) == "CRARGPYOHPTY");
    CHECK(route_read(Grid::from_rows({"Q"}), RouteSpec::row_major(1, 1)) == "Q");
    CHECK(route_write("CRYPTOGRAPHY", RouteSpec::column_boustrophedon(4, 3)) == g);
    CHECK_THROWS_AS(RouteSpec(2, 2, {{0, 0}, {0, 1}, {1, 0}}), error);
    CHECK_THROWS_AS(RouteSpec(1, 2, {{0, 0}, {0, 0}}), error);
}

TEST_CASE("index of coincidence") {
    CHECK(index_of_coincidence(std::string("AAAA")) == Rational(1));
    CHECK(index_of_coincidence(std::string("ABCDEFG")) == Rational(0));
    CHECK(index_of_coincidence(mdpi_cipher) == Rational(18, 420));
    CHECK(brute_force_pairs(mdpi_cipher) == 18);
    CHECK(to_fraction_string(index_of_coincidence(mdpi_cipher)) == "3/70");
    CHECK_THROWS_AS(index_of_coincidence(std::string("A")), error);

    std::mt19937_64 rng(13);
    for (int i = 0; i < 50; ++i) {
        auto s = testsupport::uniform_sample(rng, 2 + rng() % 40);
        auto ioc = index_of_coincidence(s);
        auto n = static_cast<std::int64_t>(s.size());
        CHECK(ioc == Rational(brute_force_pairs(s), n * (n - 1)));
        auto t = s;
        std::shuffle(t.begin(), t.end(), rng);
        CHECK(index_of_coincidence(t) == ioc);
    }
}

TEST_CASE("mutual index") {
    CHECK(mutual_index(std::string("A"), std::string("A")) == Rational(1));
    CHECK(mutual_index(std::string("AB"), std::string("CD")) == Rational(0));
    CHECK_THROWS_AS(mutual_index(std::string(""), std::string("A")), error);

    std::mt19937_64 rng(14);
    auto a = Alphabet::english().encode(testsupport::english_sample(rng, 400));
    auto b = Alphabet::english().encode(testsupport::english_sample(rng, 400));
    for (int s = 0; s < 26; ++s) {
        CHECK(mutual_index_shift(a, b, s, 26) == mutual_index_shift(b, a, mod(-s, 26), 26));
    }
    const int true_shift = 9;
    residues shifted = b;
    for (auto& x : shifted) x = mod(x + true_shift, 26);
    int best = 0;
    for (int s = 1; s < 26; ++s)
        if (mutual_index_shift(a, shifted, s, 26) > mutual_index_shift(a, shifted, best, 26)) best = s;
    CHECK(best == mod(-true_shift, 26));
}

TEST_CASE("coincidence report shape") {
    auto r = coincidence_report(Alphabet::english().encode(mdpi_cipher), 4, 26);
    CHECK(r.per_list_ioc.size() == 4);
    CHECK(r.mic_table.size() == 6);
    CHECK(r.mic_table.front().by_shift.size() == 26);
    for (const auto& row : r.mic_table)
        for (const auto& v : row.by_shift) CHECK((v >= Rational(0) && v <= Rational(1)));
}

TEST_CASE("friedman key length") {
    std::mt19937_64 rng(15);
    auto plain = testsupport::english_sample(rng, 800);
    auto c = testsupport::oracle_vigenere(plain, "QUIZ");
    auto ranking = friedman_keylength(c, 10);
    REQUIRE(ranking.size() == 10);
    CHECK(ranking.front().m == 4);
    auto it = std::find_if(ranking.begin(), ranking.end(), [](const auto& k) { return k.m == 8; });
    REQUIRE(it != ranking.end());
    if (it->flagged) CHECK(it->flagged_divisors == std::vector<std::size_t>{4});

    auto caesar = testsupport::oracle_vigenere(testsupport::english_sample(rng, 1000), "H");
    auto one = friedman_keylength(caesar, 1);
    CHECK(std::abs(to_double(one.front().per_list_ioc[0]) - 0.065) <= 0.01);

    auto noise = testsupport::uniform_sample(rng, 2000);
    for (const auto& k : friedman_keylength(noise, 6)) {
        CHECK_FALSE(k.flagged);
        for (const auto& v : k.per_list_ioc) CHECK(std::abs(to_double(v) - 1.0 / 26) < 0.01);
    }
    CHECK_THROWS_AS(friedman_keylength(std::string("ABCDE"), 3), error);
}

TEST_CASE("difference systems") {
    auto k = solve_differences(3, {{1, 0, 3}, {2, 1, 12}}, 0, 26);
    CHECK(k == residues{0, 3, 15});
    CHECK_THROWS_AS(solve_differences(3, {{1, 0, 3}}, 0, 26), error);
    try {
        (void)solve_differences(3, {{1, 0, 3}, {2, 1, 12}, {2, 0, 1}}, 0, 26);
        FAIL("expected inconsistency");
    } catch (const error& e) {
        CHECK(std::string(e.what()).find("cycle residual 12") != std::string::npos);
    }
}

TEST_CASE("friedman key recovery") {
    std::mt19937_64 rng(16);
    auto plain = testsupport::english_sample(rng, 800);
    auto c = testsupport::oracle_vigenere(plain, "MDPI");
    auto rec = friedman_recover_key(c, 4);
    REQUIRE(rec.candidates.size() == 26);
    bool found = false;
    for (std::size_t i = 0; i < 3; ++i) found = found || rec.candidates[i].key.to_text() == "MDPI";
    CHECK(found);
    CHECK(rec.equations.size() == 6);

    auto caesar = friedman_recover_key(testsupport::english_sample(rng, 300), 1);
    CHECK(caesar.candidates.front().key.to_text() == "A");
    CHECK(caesar.cycle_residual == 0);
}

TEST_CASE("vigenere split configuration") {
    auto c = vigenere_to_config(mdpi_cipher, 4);
    REQUIRE(c.polygon_count() == 4);
    CHECK(c.polygons()[0].word().size() == 6);
    CHECK(joined(c.polygons()[0].word()) == "OEXBDK");
    CHECK(joined(c.polygons()[1].word()) == "OLFWD");
    CHECK(joined(c.polygons()[2].word()) == "PRGDE");
    CHECK(joined(c.polygons()[3].word()) == "AIGOP");
    CHECK(dim_lambda(c) == 35);
    CHECK(dim_center(c) == 14);
    CHECK(build_quiver(c).loop_count() == 9);
    CHECK(brauer_ioc(mdpi_cipher, 4) == Rational(27, 420));

    auto abab = vigenere_to_config("ABAB", 2);
    CHECK(dim_lambda(abab) == 8);
    CHECK_FALSE(is_connected(abab));
    CHECK_THROWS_AS(dim_center(abab), error);
    CHECK(build_quiver(abab).loop_count() == 4);
    CHECK(testsupport::oracle_dim_lambda({{"A", "A"}, {"B", "B"}}) == 8);

    CHECK_THROWS_AS(vigenere_to_config("ABCD", 4), error);
}

TEST_CASE("theorem verdicts on the worked example") {
    auto v1 = check_theorem_v1(mdpi_cipher, 4);
    CHECK_FALSE(v1.precondition);
    CHECK(v1.violating.size() == 9);
    CHECK(*v1.lhs == Rational(35));
    CHECK(v1.rhs == Rational(26));
    CHECK(*v1.gap() == Rational(9));
    CHECK_FALSE(v1.holds());

    auto v2 = check_theorem_v2(mdpi_cipher, 4);
    CHECK_FALSE(v2.precondition);
}

TEST_CASE("theorem permutation on the worked grid") {
    BlockPermutation pi({3, 4, 1, 2});
    auto v = check_theorem_permutation("CRYPTOGRAPHY", {pi, pi, pi});
    CHECK(v.ciphertext == "YPCRGRTOHYAP");
    CHECK(v.holds());
    CHECK(v.plain.dim_lambda == testsupport::oracle_dim_lambda({{"C", "R", "Y", "P"}, {"T", "O", "G", "R"},
                                                                {"A", "P", "H", "Y"}}));
    auto id = check_theorem_permutation("CRYPTOGRAPHY", std::vector<BlockPermutation>(3, BlockPermutation::identity(4)));
    CHECK(id.ciphertext == "CRYPTOGRAPHY");
    CHECK(id.holds());
}

TEST_CASE("dim gap equals singleton count") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 300; ++i) {
        const std::size_t m = 1 + rng() % 6;
        auto text = testsupport::uniform_sample(rng, 2 * m + rng() % 40);
        auto c = vigenere_to_config(text, m);
        auto counts = symbol_counts(text);
        std::int64_t pairs = 0, singles = 0;
        for (const auto& [ch, f] : counts) {
            pairs += f * (f - 1);
            singles += f == 1 ? 1 : 0;
        }
        CHECK(dim_lambda(c) - (2 * static_cast<std::int64_t>(m) + pairs) == singles);
    }
}

TEST_CASE("invariants survive a uniform re-encryption") {
    std::mt19937_64 rng(18);
    for (int i = 0; i < 100; ++i) {
        const std::size_t m = 1 + rng() % 5;
        auto text = testsupport::english_sample(rng, 2 * m + rng() % 50);
        auto again = testsupport::oracle_vigenere(text, std::string(m, static_cast<char>('A' + rng() % 26)));
        CHECK(invariants(vigenere_to_config(text, m)) == invariants(vigenere_to_config(again, m)));
    }
}

TEST_CASE("per-list shifts can split a shared character") {
    auto before = invariants(vigenere_to_config("AAAA", 2));
    auto after = invariants(vigenere_to_config(testsupport::oracle_vigenere("AAAA", "AB"), 2));
    CHECK(before.dim_lambda == 16);
    CHECK(after.dim_lambda == 8);
}
