#include "doctest.h"

#include "lenslift/catalog.hpp"

using namespace lenslift;

namespace {

std::string name_of(const BraidWord& w) {
    const auto id = identify(fingerprint_of_closure(w));
    return id ? id->display() : "unidentified";
}

} // namespace

TEST_CASE("half-twist closure table") {
    // t = 1, 2
    CHECK(name_of(BraidWord(1, {})) == "0_1");
    CHECK(name_of(power(delta(2), 0)) == "0_1 u 0_1");
    CHECK(name_of(power(delta(2), 1)) == "0_1");
    CHECK(name_of(power(delta(2), 2)) == "L2a1");
    CHECK(name_of(power(delta(2), 3)) == "3_1");
    CHECK(name_of(power(delta(2), 4)) == "L4a1");
    CHECK(name_of(power(delta(2), 5)) == "5_1");
    CHECK(name_of(power(delta(2), 6)) == "L6a3");
    // t = 3
    CHECK(name_of(power(delta(3), 0)) == "0_1 u 0_1 u 0_1");
    CHECK(name_of(power(delta(3), 1)) == "L2a1");
    CHECK(name_of(power(delta(3), 2)) == "L6n1");
    CHECK(name_of(power(delta(3), 3)) == "L9n15");
    // t = 4, 5
    CHECK(name_of(power(delta(4), 0)) == "0_1 u 0_1 u 0_1 u 0_1");
    CHECK(name_of(power(delta(4), 1)) == "L4a1");
    CHECK(name_of(power(delta(5), 0)) == "0_1 u 0_1 u 0_1 u 0_1 u 0_1");
    CHECK(name_of(power(delta(5), 1)) == "L8n3");
}

TEST_CASE("negative powers identify as mirrors") {
    CHECK(name_of(power(delta(2), -3)) == "m(3_1)");
    CHECK(name_of(power(delta(2), -4)) == "m(L4a1)");
    CHECK(name_of(power(delta(2), -1)) == "0_1");   // amphichiral
    CHECK(name_of(power(delta(2), -2)) == "L2a1");  // amphichiral
}

TEST_CASE("catalog entries are pairwise distinct") {
    const auto& entries = catalog();
    for (size_t i = 0; i < entries.size(); ++i)
        for (size_t j = i + 1; j < entries.size(); ++j)
            CHECK(entries[i].fp != entries[j].fp);
}

TEST_CASE("same names from different presentations") {
    CHECK(fingerprint_of_closure(power(delta(2), 2)) ==
          fingerprint_of_closure(delta(3)));
    CHECK(fingerprint_of_closure(power(delta(2), 4)) ==
          fingerprint_of_closure(delta(4)));
}

TEST_CASE("unidentified links return nothing") {
    CHECK(!identify(fingerprint_of_closure(power(delta(3), 4))));
    CHECK(!identify(fingerprint_of_closure(BraidWord(2, std::vector<int>(7, 1)))));
}

TEST_CASE("aliases") {
    CHECK(catalog_alias("L2a1") == "Hopf link");
    CHECK(catalog_alias("3_1") == "trefoil");
    CHECK(catalog_alias("L6n1").empty());
}
