#pragma once
// Embedded reference data -- the level lists, the second flow, the time
// matrix for the second flow, and the two structure-operator tables as they
// appear in the reference text -- together with the three-class comparison
// policy used everywhere derived objects are checked against that text:
//
//   Match         the derived object equals the reference form exactly;
//   ErratumMatch  it differs, but equals the ledgered corrected form, so the
//                 difference is a known transcription error in the text;
//   Mismatch      it differs in an unledgered way (a novel discrepancy --
//                 always a failure for the caller to surface, never silent).
//
// The errata ledger itself is embedded here (errata_ledger) and shipped as
// data/errata.json; a test keeps the file and the table in sync.  Every
// corrected form the ledger mentions is certified by tests: corrected level
// and flow entries re-derive through the recursion, corrected operator cells
// equal the machine-composed products.

#include "akns/hierarchy.hpp"
#include "akns/nonlocal.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace akns {

// One ledgered discrepancy between the reference text and the derived result.
struct ErratumEntry {
    std::string id;        // stable slug, e.g. "level-list-f1"
    std::string location;  // descriptive place in the text, e.g. "level list, f1"
    std::string printed;   // the form as printed (engine syntax where exact)
    std::string derived;   // the machine-derived form it should read
    std::string note;      // what differs and how the correction was certified
};

// The embedded ledger, in a fixed order (source of truth for data/errata.json).
const std::vector<ErratumEntry>& errata_ledger();

// Lookup by id; throws std::out_of_range for unknown ids.
const ErratumEntry& erratum(const std::string& id);

// The ledger as JSON (array of objects with sorted keys; serialize with
// dump(2) for the shipped data file).
nlohmann::json errata_ledger_json();

enum class RefClass { Match, ErratumMatch, Mismatch };

std::string to_text(RefClass cls);

struct RefComparison {
    std::string item;        // e.g. "level 2, f"
    RefClass cls = RefClass::Mismatch;
    std::string erratum_id;  // set when cls == ErratumMatch
    std::string detail;      // derived-minus-printed difference when Mismatch
};

struct ReferenceReport {
    std::string subject;
    std::vector<RefComparison> items;

    [[nodiscard]] int count(RefClass cls) const;
    // True when no item is a novel (unledgered) mismatch.
    [[nodiscard]] bool clean() const { return count(RefClass::Mismatch) == 0; }
};

nlohmann::json to_json(const ReferenceReport& rep);

// Levels 1..3 against the reference list (24 items; requires levels
// derived through 3 with symbolic mu).
ReferenceReport compare_levels(const std::vector<HierarchyLevel>& levels);

// The n = 2 flow against the reference display (6 items; requires levels
// through 3, symbolic mu).
ReferenceReport compare_flow2(const std::vector<HierarchyLevel>& levels);

// The n = 2 time matrix against the reference entry list (25 items;
// requires levels through 3, symbolic mu).
ReferenceReport compare_time_matrix2(const std::vector<HierarchyLevel>& levels);

// The first-structure table against the composed product (36 items).
ReferenceReport compare_first_structure();

// The second-structure table against the composed product (36 items).
ReferenceReport compare_second_structure();

// The corrected second-structure table: the reference table with the eleven
// ledgered cell corrections applied.  A test certifies it equals the derived
// composition at every entry.
const NonlocalOperator& corrected_second_structure_table();

}  // namespace akns
