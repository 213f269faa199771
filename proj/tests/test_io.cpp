#include <doctest.h>

#include <sstream>

#include "bicover/generators.hpp"
#include "bicover/io.hpp"
#include "helpers.hpp"

using namespace bicover;

TEST_CASE("bhg parse and write") {
    std::istringstream in(
        "c a triangle\n"
        "p bhg 3 3 2\n"
        "e 1 2\n"
        "e 2 3\n"
        "e 1 3\n");
    auto pr = read_bhg(in);
    CHECK(pr.graph.n() == 3);
    CHECK(pr.graph.k() == 2);
    CHECK(pr.graph.m() == 3);
    CHECK(pr.duplicates_removed == 0);

    std::ostringstream out;
    write_bhg(out, pr.graph);
    CHECK(out.str() == "p bhg 3 3 2\ne 1 2\ne 1 3\ne 2 3\n");
}

TEST_CASE("bhg rejects and warns") {
    {
        std::istringstream in("p bhg 3 2 2\ne 1 2\ne 1 2\n");
        auto pr = read_bhg(in);
        CHECK(pr.duplicates_removed == 1);
        CHECK(pr.graph.m() == 1);
    }
    {
        std::istringstream in("p bhg 4 1 3\ne 1 2\n"); // non-uniform edge
        CHECK_THROWS_AS(read_bhg(in), InvalidInput);
    }
    {
        std::istringstream in("p bhg 3 1 2\ne 1 4\n"); // out of range
        CHECK_THROWS_AS(read_bhg(in), InvalidInput);
    }
    {
        std::istringstream in("p bhg 3 2 2\ne 1 2\n"); // m mismatch
        CHECK_THROWS_AS(read_bhg(in), InvalidInput);
    }
    {
        std::istringstream in("p graph 3 1 2\ne 1 2\n");
        CHECK_THROWS_AS(read_bhg(in), InvalidInput);
    }
}

TEST_CASE("bhg round trip is the identity on canonical instances") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        auto g = testutil::random_instance(seed);
        std::ostringstream out;
        write_bhg(out, g);
        std::istringstream in(out.str());
        auto pr = read_bhg(in);
        CHECK(pr.graph == g);
        CHECK(pr.duplicates_removed == 0);
    }
}

TEST_CASE("cover JSON format") {
    Cover c;
    c.colorings.push_back(Bicoloring::from_pattern(4, 0b0110));
    c.colorings.push_back(Bicoloring::from_pattern(4, 0b0011));
    auto j = cover_to_json(4, c);
    CHECK(j.dump() == R"({"n":4,"x":2,"colorings":["0110","1100"]})");

    int n = 0;
    auto back = cover_from_json(j, &n);
    CHECK(n == 4);
    CHECK(back == c);

    auto bad = j;
    bad["x"] = 3;
    CHECK_THROWS_AS(cover_from_json(bad), InvalidInput);
    CHECK_THROWS_AS(cover_from_json(ordered_json::parse(R"({"n":3,"colorings":["01"]})")),
                    InvalidInput);
}

TEST_CASE("certificate JSON format") {
    CoverCertificate cert;
    cert.valid = false;
    cert.witness = {0, -1, 1};
    auto j = certificate_to_json(cert);
    CHECK(j.dump() == R"({"valid":false,"witness":[1,0,2]})");
    auto back = certificate_from_json(j);
    CHECK(back.valid == cert.valid);
    CHECK(back.witness == cert.witness);
}

TEST_CASE("bicoloring string encoding is vertex-indexed") {
    // character i of the string is the color of vertex i+1 (1-based files)
    auto b = Bicoloring::from_pattern(5, 0b00101);
    CHECK(b.to_string() == "10100");
    CHECK(b.bit(0) == 1);
    CHECK(b.bit(4) == 0);
}
