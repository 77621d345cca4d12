#pragma once

#include <string>

#include <json.hpp>

#include "trivar/datum.hpp"
#include "trivar/lnd.hpp"
#include "trivar/polynomial.hpp"

namespace trivar {

// Input document shape (all exponent/partition numbers are integers,
// rationals are strings like "-3/2" with no spaces, "/1" omitted):
//   {
//     "type": "1" | "2",
//     "r": int, "m": int,
//     "n": [n_q, ...],             // tuple sizes, q = 1 (Type 1) or 0 (Type 2)
//     "l": [[l_q1, ...], ...],     // exponent tuples, aligned with "n"
//     "A": ["a_1", ...]            // Type 1: the r constants
//          | [[row0...], [row1...]] // Type 2: 2 x (r+1) matrix by rows
//   }
// Structural problems (bad JSON, wrong types, ragged matrix rows, "n"
// contradicting "l") throw ParseError; a well-formed document that denotes
// a mathematically invalid datum parses fine and is left to validate().
TrinomialDatum parse_input_document(const std::string& text);

nlohmann::ordered_json datum_to_json(const TrinomialDatum& d);

nlohmann::ordered_json validation_to_json(const ValidationReport& rep);

// The classify report, keys in fixed order: valid, rigidity, rationality,
// ell, heavy_set, case_tag, witness.  Pure function of (datum, witness
// request, bound), so identical inputs produce byte-identical output.
// witness_failed (optional out) flags a constructed-but-unverified witness.
nlohmann::ordered_json classification_report(const TrinomialDatum& d, bool with_witness,
                                             int bound, bool* witness_failed = nullptr);

// Same content rendered as plain text for terminal use.
std::string classification_text(const nlohmann::ordered_json& report);

} // namespace trivar
