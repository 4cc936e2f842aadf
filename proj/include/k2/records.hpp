#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "k2/fourrank.hpp"

namespace k2::records {

/// One line of survey or query output. Round-trips losslessly between the
/// CSV and JSON encodings.
struct OutputRecord {
    int64_t d;
    int t;
    std::vector<int64_t> primes;
    bool two_is_norm;
    bool minus_one_is_norm;
    int64_t v;
    int rank;
    int a;
    int a_prime;
    int four_rank;

    bool operator==(const OutputRecord&) const = default;
};

OutputRecord make_record(const fourrank::FieldSpec& spec, const fourrank::RankReport& report);

/// Exactly: d,t,primes,two_is_norm,minus_one_is_norm,v,rank,a,a_prime,four_rank
std::string csv_header();

/// One CSV line, LF-terminated by the caller. Integers in decimal, booleans
/// as true/false, primes joined with ';'.
std::string to_csv_row(const OutputRecord& r);

std::string to_json(const OutputRecord& r);

OutputRecord from_csv_row(std::string_view line);
OutputRecord from_json(const std::string& text);

}  // namespace k2::records
