#include "k2/records.hpp"

#include <charconv>
#include <stdexcept>

#include "json.hpp"

namespace k2::records {

namespace {

int64_t parse_int(std::string_view s) {
    int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw std::invalid_argument("bad integer field: " + std::string(s));
    return v;
}

bool parse_bool(std::string_view s) {
    if (s == "true") return true;
    if (s == "false") return false;
    throw std::invalid_argument("bad boolean field: " + std::string(s));
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    size_t start = 0;
    while (true) {
        size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

}  // namespace

OutputRecord make_record(const fourrank::FieldSpec& spec, const fourrank::RankReport& report) {
    OutputRecord r;
    r.d = report.d;
    r.t = report.t;
    r.primes = spec.primes;
    r.two_is_norm = spec.two_is_norm;
    r.minus_one_is_norm = spec.minus_one_is_norm;
    r.v = report.v;
    r.rank = report.rank;
    r.a = report.a;
    r.a_prime = report.a_prime;
    r.four_rank = report.four_rank;
    return r;
}

std::string csv_header() {
    return "d,t,primes,two_is_norm,minus_one_is_norm,v,rank,a,a_prime,four_rank";
}

std::string to_csv_row(const OutputRecord& r) {
    std::string primes;
    for (size_t i = 0; i < r.primes.size(); ++i) {
        if (i) primes += ';';
        primes += std::to_string(r.primes[i]);
    }
    std::string out;
    out += std::to_string(r.d);
    out += ',';
    out += std::to_string(r.t);
    out += ',';
    out += primes;
    out += ',';
    out += r.two_is_norm ? "true" : "false";
    out += ',';
    out += r.minus_one_is_norm ? "true" : "false";
    out += ',';
    out += std::to_string(r.v);
    out += ',';
    out += std::to_string(r.rank);
    out += ',';
    out += std::to_string(r.a);
    out += ',';
    out += std::to_string(r.a_prime);
    out += ',';
    out += std::to_string(r.four_rank);
    return out;
}

std::string to_json(const OutputRecord& r) {
    nlohmann::ordered_json j;
    j["d"] = r.d;
    j["t"] = r.t;
    j["primes"] = r.primes;
    j["two_is_norm"] = r.two_is_norm;
    j["minus_one_is_norm"] = r.minus_one_is_norm;
    j["v"] = r.v;
    j["rank"] = r.rank;
    j["a"] = r.a;
    j["a_prime"] = r.a_prime;
    j["four_rank"] = r.four_rank;
    return j.dump();
}

OutputRecord from_csv_row(std::string_view line) {
    auto fields = split(line, ',');
    if (fields.size() != 10) throw std::invalid_argument("csv row needs 10 fields");
    OutputRecord r;
    r.d = parse_int(fields[0]);
    r.t = static_cast<int>(parse_int(fields[1]));
    if (!fields[2].empty())
        for (auto part : split(fields[2], ';')) r.primes.push_back(parse_int(part));
    r.two_is_norm = parse_bool(fields[3]);
    r.minus_one_is_norm = parse_bool(fields[4]);
    r.v = parse_int(fields[5]);
    r.rank = static_cast<int>(parse_int(fields[6]));
    r.a = static_cast<int>(parse_int(fields[7]));
    r.a_prime = static_cast<int>(parse_int(fields[8]));
    r.four_rank = static_cast<int>(parse_int(fields[9]));
    return r;
}

OutputRecord from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    OutputRecord r;
    r.d = j.at("d").get<int64_t>();
    r.t = j.at("t").get<int>();
    r.primes = j.at("primes").get<std::vector<int64_t>>();
    r.two_is_norm = j.at("two_is_norm").get<bool>();
    r.minus_one_is_norm = j.at("minus_one_is_norm").get<bool>();
    r.v = j.at("v").get<int64_t>();
    r.rank = j.at("rank").get<int>();
    r.a = j.at("a").get<int>();
    r.a_prime = j.at("a_prime").get<int>();
    r.four_rank = j.at("four_rank").get<int>();
    return r;
}

}  // namespace k2::records
