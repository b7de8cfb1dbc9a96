#pragma once

#include "cache.hpp"

#include "tricm/cmcheck.hpp"
#include "tricm/complex.hpp"
#include "tricm/ideals.hpp"

#include <string>
#include <vector>

namespace tricm::cli {

// Integers go out as decimal strings so nothing is lost to double precision.
std::string dec(const BigInt& v);
std::string dec(long long v);
std::string dec(unsigned long long v);
std::string dec(std::size_t v);
std::string dec(int v);
std::string dec(unsigned v);

Json to_json(const FieldSpec& field);
Json to_json(const CmVerdict& v);
Json to_json(const BettiTable& t);
Json to_json(const RegularityVerdict& v);
Json to_json(const HsopSequence& seq, const std::vector<std::string>& labels);
Json integer_list(const std::vector<BigInt>& values);

/// "(1, 36, 378)" style rendering for terminal output.
std::string tuple_text(const std::vector<BigInt>& values);
std::string tuple_text(const std::vector<std::size_t>& values);
std::string tuple_text(const Json& decimal_strings);

/// The report with its timings removed, for equality checks.
Json without_timings(Json report);

}  // namespace tricm::cli
