#pragma once

#include <string>

#include "apolar/engine.hpp"

namespace apolar {

/// One degree of a graded character as "X[4] + 2*X[3,1] + X[2,2]";
/// partitions appear in canonical order, zero multiplicities are dropped,
/// an empty sum renders as "0".
std::string degree_term_str(const GradedCharacter& g, int k);

/// One line per degree, "3: X[4] + 2*X[3,1] + ...", degrees 0..top.
std::string character_table_str(const GradedCharacter& g, int top);

/// Space-separated coefficient list "1 4 9 12", padded with zeros up to
/// degree top.
std::string hilbert_line_str(const TPoly& h, int top);

/// Plain-text verification transcript: one line per degree plus a final
/// AGREE / DISAGREE line.
std::string verification_str(const VerificationReport& r);

// JSON renderings (schemas documented in the README). Characters are
// objects keyed by the partition string, each value the per-degree
// multiplicity array.
std::string character_report_json_str(const CharacterReport& r);
std::string graded_character_json_str(const GradedCharacter& g, int top);
std::string hilbert_json_str(const Partition& mu, int d, const TPoly& h);
std::string kostka_json_str(const Partition& lambda, const Partition& mu, const TPoly& k);
std::string waring_json_str(const Partition& mu, int d);
std::string verification_json_str(const VerificationReport& r);

}  // namespace apolar
