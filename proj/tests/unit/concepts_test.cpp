#include <doctest.h>

#include <sstream>

#include "teachdim/concepts.hpp"

using namespace teachdim;

namespace {

ConceptClass tiny() {
    return ConceptClass(3, {{"a", {1}}, {"b", {2}}, {"dup", {1}}});
}

}  // namespace

TEST_SUITE("concepts") {

TEST_CASE("construction normalizes and groups extensionally") {
    ConceptClass c(4, {{"a", {3, 1, 1}}, {"b", {1, 3}}, {"c", {}}});
    CHECK(c.at(0).elements == std::vector<std::uint64_t>{1, 3});
    CHECK(c.size() == 3);
    CHECK(c.distinct_count() == 2);
    CHECK(c.same_extension(0, 1));
    CHECK_FALSE(c.same_extension(0, 2));
    CHECK(c.group_reps() == std::vector<std::size_t>{0, 2});
    CHECK(c.find("b") == 1);
    CHECK(c.find("missing") == -1);
}

TEST_CASE("construction rejects bad input") {
    CHECK_THROWS_AS(ConceptClass(0, {{"a", {}}}), parse_error);
    CHECK_THROWS_AS(ConceptClass(2, {}), parse_error);
    CHECK_THROWS_AS(ConceptClass(2, {{"a", {2}}}), parse_error);  // element out of domain
    CHECK_THROWS_AS(ConceptClass(2, {{"a", {0}}, {"a", {1}}}), parse_error);
    CHECK_THROWS_AS(ConceptClass(2, {{"", {0}}}), parse_error);
}

TEST_CASE("samples") {
    Sample s = make_sample({2, 0}, {1});
    REQUIRE(s.size() == 3);
    CHECK(s.items[0].element == 0);
    CHECK(s.items[0].label == Label::positive);
    CHECK(s.items[1].label == Label::negative);
    CHECK_THROWS_AS(make_sample({0}, {0}), internal_error);

    Sample m = label_by_membership({1, 3}, {0, 1, 3});
    CHECK(m.items[0].label == Label::negative);
    CHECK(m.items[1].label == Label::positive);
    CHECK(m.items[2].label == Label::positive);

    CHECK(consistent({1, 3}, m));
    CHECK_FALSE(consistent({1}, m));
    CHECK(consistent({}, Sample{}));
}

TEST_CASE("text format round-trips") {
    ConceptClass c = tiny();
    std::string text = emit_class_string(c, "gadget lk k=2 mult=1");
    std::istringstream in(text);
    std::string manifest;
    ConceptClass back = parse_class(in, &manifest);
    CHECK(manifest == "gadget lk k=2 mult=1");
    CHECK(back.domain_size() == c.domain_size());
    REQUIRE(back.size() == c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        CHECK(back.at(i).name == c.at(i).name);
        CHECK(back.at(i).elements == c.at(i).elements);
    }
    CHECK(emit_class_string(back, "gadget lk k=2 mult=1") == text);
}

TEST_CASE("emitted text is the documented shape") {
    ConceptClass c(3, {{"x", {0, 2}}, {"empty", {}}});
    CHECK(emit_class_string(c) == "domain 3\nconcept x: 0 2\nconcept empty:\n");
}

TEST_CASE("parser accepts comments, blanks, and both colon styles") {
    std::istringstream in(
        "# plain comment\n"
        "\n"
        "domain 4\n"
        "concept a: 0 1\n"
        "concept b : 3\n");
    ConceptClass c = parse_class(in);
    CHECK(c.size() == 2);
    CHECK(c.at(1).elements == std::vector<std::uint64_t>{3});
}

TEST_CASE("parser reports errors with line numbers") {
    auto bad = [](const std::string& text) {
        std::istringstream in(text);
        return parse_class(in);
    };
    CHECK_THROWS_AS(bad("concept a: 0\n"), parse_error);          // concept before domain
    CHECK_THROWS_AS(bad("domain 2\ndomain 2\n"), parse_error);    // repeated domain
    CHECK_THROWS_AS(bad("domain 2\nconcept a: x\n"), parse_error);
    CHECK_THROWS_AS(bad("domain 2\nwhatever\n"), parse_error);
    CHECK_THROWS_AS(bad(""), parse_error);
    try {
        bad("domain 2\nconcept a 0 1\n");
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("manifest is only taken from a leading gadget comment") {
    std::istringstream in("# not a manifest\ndomain 2\nconcept a: 0\n");
    std::string manifest = "stale";
    parse_class(in, &manifest);
    CHECK(manifest.empty());
}

TEST_CASE("disjoint union tags families apart") {
    ConceptClass f0(3, {{"a", {0, 1}}, {"b", {2}}});
    ConceptClass f1(2, {{"a", {0, 1}}});
    ConceptClass u = disjoint_union({f0, f1}, 1000);
    REQUIRE(u.size() == 3);
    CHECK(u.find("a@0") == 0);
    CHECK(u.find("a@1") == 2);
    // join(F, {i}) = {2x : x in F} u {2i+1}
    CHECK(u.at(0).elements == std::vector<std::uint64_t>{0, 1, 2});
    CHECK(u.at(1).elements == std::vector<std::uint64_t>{1, 4});
    CHECK(u.at(2).elements == std::vector<std::uint64_t>{0, 2, 3});
    // equal extensions from different families stay distinct
    CHECK(u.distinct_count() == 3);
    CHECK_THROWS_AS(disjoint_union({f0, f1}, 3), bound_error);
}

}  // TEST_SUITE
