#include "akns/reference.hpp"

#include "akns/hamiltonian.hpp"
#include "akns/operators.hpp"

#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

using namespace akns;

namespace {

const std::vector<HierarchyLevel>& levels3() {
    static const std::vector<HierarchyLevel> lv = derive_levels(3);
    return lv;
}

// Expected classification of one report: every item is Match except the
// listed (index, erratum id) pairs, which must be ErratumMatch; nothing may
// be a novel mismatch.
void check_classes(const ReferenceReport& rep, std::size_t n_items,
                   const std::vector<std::pair<std::size_t, std::string>>& errata) {
    REQUIRE(rep.items.size() == n_items);
    for (const RefComparison& c : rep.items) {
        CAPTURE(c.item);
        CAPTURE(c.detail);
        CHECK(c.cls != RefClass::Mismatch);
    }
    CHECK(rep.clean());
    CHECK(rep.count(RefClass::Match) + rep.count(RefClass::ErratumMatch) ==
          static_cast<int>(n_items));
    CHECK(rep.count(RefClass::ErratumMatch) == static_cast<int>(errata.size()));
    for (const auto& [idx, id] : errata) {
        CAPTURE(idx);
        REQUIRE(idx < rep.items.size());
        CHECK(rep.items[idx].cls == RefClass::ErratumMatch);
        CHECK(rep.items[idx].erratum_id == id);
    }
}

}  // namespace

TEST_CASE("errata ledger is well formed and queryable") {
    const auto& ledger = errata_ledger();
    CHECK(ledger.size() == 30);
    std::set<std::string> ids;
    for (const ErratumEntry& e : ledger) {
        CAPTURE(e.id);
        CHECK(!e.id.empty());
        CHECK(!e.location.empty());
        CHECK(!e.printed.empty());
        CHECK(!e.derived.empty());
        CHECK(!e.note.empty());
        CHECK(ids.insert(e.id).second);  // ids are unique
    }
    CHECK(erratum("level-list-f1").location == "level list, f1");
    CHECK(erratum("second-structure-entry-66").location ==
          "second structure table, entry (6,6)");
    CHECK_THROWS_AS(erratum("no-such-id"), std::out_of_range);
}

TEST_CASE("shipped errata data file matches the embedded ledger byte for byte") {
    std::ifstream in(AKNS_DATA_DIR "/errata.json", std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == errata_ledger_json().dump(2) + "\n");
}

TEST_CASE("levels 1..3 match the reference list up to the four ledgered errata") {
    const ReferenceReport rep = compare_levels(levels3());
    // Item order: per level a, b, c, e, f, g, rho, delta.
    check_classes(rep, 24,
                  {{4, "level-list-f1"},
                   {5, "level-list-g1"},
                   {12, "level-list-f2"},
                   {13, "level-list-g2"}});
    CHECK(rep.count(RefClass::Match) == 20);
}

TEST_CASE("second flow matches the reference display up to the six ledgered row errata") {
    const ReferenceReport rep = compare_flow2(levels3());
    check_classes(rep, 6,
                  {{0, "second-flow-p-row"},
                   {1, "second-flow-q-row"},
                   {2, "second-flow-alpha-row"},
                   {3, "second-flow-beta-row"},
                   {4, "second-flow-r-row"},
                   {5, "second-flow-s-row"}});
    CHECK(rep.count(RefClass::Match) == 0);
}

TEST_CASE("time matrix for the second flow matches the reference entries") {
    const ReferenceReport rep = compare_time_matrix2(levels3());
    // Item order: row-major (i,j), 1-based in the labels.  The diagonal
    // carries the omitted modification term; (1,4), (3,4) inherit the f2
    // erratum, (2,3), (4,3) the g2 erratum, and all six odd positions the
    // halved-derivative erratum.
    check_classes(rep, 25,
                  {{0, "time-matrix-modification"},
                   {6, "time-matrix-modification"},
                   {12, "time-matrix-modification"},
                   {18, "time-matrix-modification"},
                   {3, "level-list-f2"},
                   {13, "level-list-f2"},
                   {7, "level-list-g2"},
                   {17, "level-list-g2"},
                   {4, "time-matrix-odd-entries"},
                   {9, "time-matrix-odd-entries"},
                   {20, "time-matrix-odd-entries"},
                   {21, "time-matrix-odd-entries"},
                   {22, "time-matrix-odd-entries"},
                   {23, "time-matrix-odd-entries"}});
    CHECK(rep.count(RefClass::Match) == 11);
}

TEST_CASE("first structure table matches the composed product up to one ledgered erratum") {
    const ReferenceReport rep = compare_first_structure();
    // The miscoefficiented block recurs at (1,2), (1,6) and (5,2).
    check_classes(rep, 36,
                  {{1, "first-structure-entry-12"},
                   {5, "first-structure-entry-12"},
                   {25, "first-structure-entry-12"}});
    CHECK(rep.count(RefClass::Match) == 33);
}

TEST_CASE("second structure table matches the composed product up to eleven ledgered errata") {
    const ReferenceReport rep = compare_second_structure();
    check_classes(rep, 36,
                  {{1, "second-structure-entry-12"},
                   {5, "second-structure-entry-16"},
                   {6, "second-structure-entry-21"},
                   {10, "second-structure-entry-25"},
                   {27, "second-structure-entry-54"},
                   {29, "second-structure-entry-56"},
                   {31, "second-structure-entry-62"},
                   {32, "second-structure-entry-63"},
                   {33, "second-structure-entry-64"},
                   {34, "second-structure-entry-65"},
                   {35, "second-structure-entry-66"}});
    CHECK(rep.count(RefClass::Match) == 25);
}

TEST_CASE("corrected second structure table equals the derived composition entrywise") {
    const NonlocalOperator& corrected = corrected_second_structure_table();
    const NonlocalOperator& derived = second_structure_operator();
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) {
            CAPTURE(i);
            CAPTURE(j);
            CHECK(corrected.at(i, j) == derived.at(i, j));
        }
    }
}

TEST_CASE("reference reports serialize deterministically") {
    const ReferenceReport rep = compare_levels(levels3());
    const nlohmann::json j1 = to_json(rep);
    const nlohmann::json j2 = to_json(compare_levels(levels3()));
    CHECK(j1.dump() == j2.dump());
    CHECK(j1["subject"] == "levels 1..3 against the reference list");
    CHECK(j1["matches"] == 20);
    CHECK(j1["erratum_matches"] == 4);
    CHECK(j1["mismatches"] == 0);
    CHECK(j1["items"].size() == 24);
    CHECK(j1["items"][4]["class"] == "erratum-match");
    CHECK(j1["items"][4]["erratum"] == "level-list-f1");

    // Ledger JSON has the full record for every entry.
    const nlohmann::json ledger = errata_ledger_json();
    CHECK(ledger.is_array());
    CHECK(ledger.size() == 30);
    for (const auto& e : ledger) {
        CHECK(e.contains("id"));
        CHECK(e.contains("location"));
        CHECK(e.contains("printed"));
        CHECK(e.contains("derived"));
        CHECK(e.contains("note"));
    }
}
