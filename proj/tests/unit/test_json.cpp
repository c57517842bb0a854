#include <doctest.h>

#include <limits>

#include "wlp/error.hpp"
#include "wlp/json_io.hpp"

using namespace wlp;

TEST_CASE("groups") {
    CHECK(builtin_group("Z_12")->order() == 12);
    CHECK(builtin_group("S3")->order() == 6);
    CHECK_FALSE(builtin_group("S3")->is_abelian());
    CHECK_THROWS_AS(builtin_group("Z_13"), ParameterError);
    CHECK_THROWS_AS(builtin_group("Q8"), ParameterError);

    const auto s3 = builtin_group("S3");
    const auto back = group_from_json(group_to_json(*s3));
    CHECK(std::equal(back->table().begin(), back->table().end(), s3->table().begin(), s3->table().end()));
    CHECK(group_from_json(json{{"builtin", "Z_3"}})->order() == 3);
    CHECK(group_from_json(json("Z_4"))->order() == 4);
    CHECK_THROWS_AS(group_from_json(json{{"order", 2}, {"table", {{0, 1}}}}), ParameterError);
    CHECK_THROWS_AS(group_from_json(json{{"order", 2}, {"table", {{0, 1}, {1, 1}}}}), Error);
}

TEST_CASE("weights") {
    for (const auto& w : {Weight::polynomial(2.5), Weight::subexp(0.5), Weight::exppoly(3.0), Weight::constant(),
                          Weight::tabulated(-1, {2.0, 1.0, 2.0})}) {
        const auto back = weight_from_json(weight_to_json(w));
        CHECK(back.family() == w.family());
        for (std::int64_t n = -1; n <= 1; ++n) CHECK(back(n) == w(n));
    }
    const auto g = Weight::tabulated(builtin_group("Z_3"), {1.0, 2.0, 2.0});
    const auto gb = weight_from_json(weight_to_json(g));
    CHECK_FALSE(gb.on_integers());
    CHECK(gb.at(2) == 2.0);

    CHECK(weight_from_json(json::parse(R"({"family": "polynomial", "params": {"a": 2}, "domain": "Z"})"))(3) == 9.0);
    CHECK_THROWS_AS(weight_from_json(json::parse(R"({"family": "polynomial"})")), ParameterError);
    CHECK_THROWS_AS(weight_from_json(json::parse(R"({"family": "cubic", "params": {}})")), ParameterError);
    CHECK_THROWS_AS(weight_from_json(json::parse(R"({"family": "subexp", "params": {"gamma": 1.5}})")),
                    ParameterError);
    CHECK_THROWS_AS(
        weight_from_json(json::parse(R"({"family": "polynomial", "params": {"a": 1}, "domain": {"group": "Z_3"}})")),
        ParameterError);
}

TEST_CASE("sequences") {
    const TruncSeq f(-2, {cplx(1, 2), 0.5, cplx(0, -1)});
    CHECK(truncseq_from_json(truncseq_to_json(f)) == f);
    CHECK(truncseq_from_json(json::parse(R"({"lo": 3, "values": [1, [0, 2]]})")) == TruncSeq(3, {1.0, cplx(0, 2)}));
    CHECK_THROWS_AS(truncseq_from_json(json::parse(R"({"values": [1]})")), ParameterError);
    CHECK_THROWS_AS(truncseq_from_json(json::parse(R"({"lo": 0, "values": ["x"]})")), ParameterError);
}

TEST_CASE("numbers") {
    CHECK(number(1.5) == json(1.5));
    CHECK(number(std::numeric_limits<double>::infinity()) == json("inf"));
    CHECK(number(-std::numeric_limits<double>::infinity()) == json("-inf"));
    CHECK(number(std::nan("")) == json("nan"));
}
