#pragma once

// Flat per-semigroup verification records and their serializations.
//
// CSV columns (fixed order, `;`-joined generators, booleans as 0/1):
//   generators,m,e,c,c_prime,genus,type,wilf_num,wilf_den,thm1_num,thm1_den,
//   wilf_ok,thm1_ok,type_ok,is_equality
// JSON adds the remaining fields (apery_ok, downset_ok, degenerate) and
// serializes rationals as [numerator, denominator] pairs, null when
// degenerate. The degenerate row (the full semigroup N) uses 0/0 rational
// sentinels in CSV, since that format has no null.

#include "wilf/semigroup.hpp"
#include "wilf/types.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wilf {

struct VerificationRecord {
    std::vector<Int> generators;  // minimal generators, ascending
    Int multiplicity = 0;
    Int embedding_dimension = 0;
    Int conductor = 0;
    Int c_prime = 0;
    Int genus = 0;
    Int type = 0;
    bool degenerate = false;                 // true only for N
    std::optional<Rational> wilf_quotient;   // empty when degenerate
    std::optional<Rational> thm1_bound;      // empty when degenerate
    bool wilf_ok = false;
    bool thm1_ok = false;
    bool type_ok = false;
    bool apery_ok = false;
    bool downset_ok = false;
    bool is_equality = false;

    bool any_violation() const {
        return !(wilf_ok && thm1_ok && type_ok && apery_ok && downset_ok);
    }

    bool operator==(const VerificationRecord&) const = default;
};

// Runs every check on one semigroup. The degenerate record (N) carries
// vacuously-true flags and empty rationals.
VerificationRecord make_record(const NumericalSemigroup& sg);

// --- CSV ---------------------------------------------------------------

std::string csv_header();
std::string to_csv_row(const VerificationRecord& rec);
// Parses a row produced by to_csv_row. Throws std::invalid_argument on
// malformed input.
VerificationRecord record_from_csv_row(std::string_view row);

// --- JSON --------------------------------------------------------------

// One JSON object per record, field order fixed, no whitespace (JSON-lines
// friendly).
std::string to_json_line(const VerificationRecord& rec);
VerificationRecord record_from_json(std::string_view text);

}  // namespace wilf
