#include "crashcast/records.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <map>
#include <sstream>

#include "crashcast/error.hpp"

namespace crashcast {

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string> split_csv(std::string_view line) {
    std::vector<std::string> fields;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = line.find(',', pos);
        if (comma == std::string_view::npos) {
            fields.emplace_back(trim(line.substr(pos)));
            break;
        }
        fields.emplace_back(trim(line.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return fields;
}

std::optional<int> parse_int(std::string_view s) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return value;
}

}  // namespace

std::string_view to_token(Role r) {
    switch (r) {
        case Role::Driver: return "driver";
        case Role::Passenger: return "passenger";
    }
    return "";
}

std::string_view to_token(Helmet h) {
    switch (h) {
        case Helmet::Worn: return "worn";
        case Helmet::NotWorn: return "not_worn";
        case Helmet::Unknown: return "unknown";
    }
    return "";
}

std::string_view to_token(Severity s) {
    switch (s) {
        case Severity::Fatality: return "fatality";
        case Severity::SuspectedSerious: return "suspected_serious";
        case Severity::NonIncapacitating: return "non_incapacitating";
        case Severity::PossibleInjury: return "possible_injury";
        case Severity::NotInjured: return "not_injured";
        case Severity::UnknownInjury: return "unknown_injury";
    }
    return "";
}

std::optional<Role> parse_role(std::string_view token) {
    std::string t = lower(token);
    if (t == "driver") return Role::Driver;
    if (t == "passenger") return Role::Passenger;
    return std::nullopt;
}

std::optional<Helmet> parse_helmet(std::string_view token) {
    std::string t = lower(token);
    if (t == "worn") return Helmet::Worn;
    if (t == "not_worn") return Helmet::NotWorn;
    if (t == "unknown") return Helmet::Unknown;
    return std::nullopt;
}

std::optional<Severity> parse_severity(std::string_view token) {
    std::string t = lower(token);
    if (t == "fatality") return Severity::Fatality;
    if (t == "suspected_serious") return Severity::SuspectedSerious;
    if (t == "non_incapacitating") return Severity::NonIncapacitating;
    if (t == "possible_injury") return Severity::PossibleInjury;
    if (t == "not_injured") return Severity::NotInjured;
    if (t == "unknown_injury") return Severity::UnknownInjury;
    return std::nullopt;
}

AgeBucket bucket_age(int age) {
    if (age < kMinAge || age > kMaxAge)
        throw std::invalid_argument("age out of range 0-99: " + std::to_string(age));
    if (age <= 29) return AgeBucket::Under30;
    if (age <= 39) return AgeBucket::Thirties;
    if (age <= 49) return AgeBucket::Forties;
    return AgeBucket::FiftyPlus;
}

AgeRange bucket_range(AgeBucket bucket) {
    switch (bucket) {
        case AgeBucket::Under30: return {0, 29};
        case AgeBucket::Thirties: return {30, 39};
        case AgeBucket::Forties: return {40, 49};
        case AgeBucket::FiftyPlus: return {50, 99};
    }
    throw std::invalid_argument("bad age bucket");
}

std::vector<CrashCondition> enumerate_conditions() {
    std::vector<CrashCondition> out;
    out.reserve(kSeverityCount * kHelmetCount * kHelmetCount);
    for (int s = 0; s < kSeverityCount; ++s)
        for (int dh = 0; dh < kHelmetCount; ++dh)
            for (int ph = 0; ph < kHelmetCount; ++ph)
                out.push_back({static_cast<Severity>(s), static_cast<Helmet>(dh),
                               static_cast<Helmet>(ph)});
    return out;
}

bool RecordFilter::matches(const PersonRecord& r) const {
    if (age_min && r.age < *age_min) return false;
    if (age_max && r.age > *age_max) return false;
    if (year_min && r.year < *year_min) return false;
    if (year_max && r.year > *year_max) return false;
    if (role && r.role != *role) return false;
    if (severities && !severities->contains(r.severity)) return false;
    if (helmets && !helmets->contains(r.helmet)) return false;
    return true;
}

RecordFilter RecordFilter::for_bucket(AgeBucket bucket) {
    AgeRange range = bucket_range(bucket);
    RecordFilter f;
    f.age_min = range.min;
    f.age_max = range.max;
    return f;
}

std::string RecordFilter::describe() const {
    std::ostringstream out;
    auto sep = [&out, first = true]() mutable {
        if (!first) out << ' ';
        first = false;
    };
    if (role) {
        sep();
        out << "role=" << to_token(*role);
    }
    if (severities) {
        sep();
        out << "severity=";
        bool first = true;
        for (Severity s : *severities) {
            if (!first) out << '|';
            first = false;
            out << to_token(s);
        }
    }
    if (helmets) {
        sep();
        out << "helmet=";
        bool first = true;
        for (Helmet h : *helmets) {
            if (!first) out << '|';
            first = false;
            out << to_token(h);
        }
    }
    if (age_min || age_max) {
        sep();
        out << "age=" << (age_min ? std::to_string(*age_min) : "0") << '-'
            << (age_max ? std::to_string(*age_max) : "99");
    }
    if (year_min || year_max) {
        sep();
        out << "year=" << (year_min ? std::to_string(*year_min) : "*") << '-'
            << (year_max ? std::to_string(*year_max) : "*");
    }
    std::string s = out.str();
    return s.empty() ? "all" : s;
}

std::vector<PersonRecord> parse_records(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError(1, "missing header row");
    if (!line.empty() && line.back() == '\r') line.pop_back();

    // The header names the columns; order is free but all five must be present.
    std::map<std::string, std::size_t> columns;
    auto header = split_csv(line);
    for (std::size_t i = 0; i < header.size(); ++i) columns[lower(header[i])] = i;
    for (const char* name : {"year", "age", "role", "helmet", "severity"})
        if (!columns.contains(name))
            throw ParseError(1, std::string("header missing column '") + name + "'");

    std::vector<PersonRecord> records;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        auto fields = split_csv(line);
        if (fields.size() != header.size())
            throw ParseError(line_no, "expected " + std::to_string(header.size()) +
                                          " fields, got " + std::to_string(fields.size()));

        PersonRecord r;
        auto field = [&](const char* name) -> const std::string& {
            return fields[columns.at(name)];
        };
        auto year = parse_int(field("year"));
        if (!year) throw ParseError(line_no, "bad year '" + field("year") + "'");
        r.year = *year;

        auto age = parse_int(field("age"));
        if (!age) throw ParseError(line_no, "bad age '" + field("age") + "'");
        if (*age < kMinAge || *age > kMaxAge)
            throw ParseError(line_no, "age out of range 0-99: " + field("age"));
        r.age = *age;

        auto role = parse_role(field("role"));
        if (!role) throw ParseError(line_no, "unrecognized role '" + field("role") + "'");
        r.role = *role;

        auto helmet = parse_helmet(field("helmet"));
        if (!helmet)
            throw ParseError(line_no, "unrecognized helmet state '" + field("helmet") + "'");
        r.helmet = *helmet;

        auto severity = parse_severity(field("severity"));
        if (!severity)
            throw ParseError(line_no, "unrecognized severity '" + field("severity") + "'");
        r.severity = *severity;

        records.push_back(r);
    }
    return records;
}

std::string serialize_records(const std::vector<PersonRecord>& records) {
    std::ostringstream out;
    out << "year,age,role,helmet,severity\n";
    for (const PersonRecord& r : records)
        out << r.year << ',' << r.age << ',' << to_token(r.role) << ',' << to_token(r.helmet)
            << ',' << to_token(r.severity) << '\n';
    return out.str();
}

YearlySeries aggregate_yearly(const std::vector<PersonRecord>& records,
                              const RecordFilter& filter) {
    std::map<int, double> by_year;
    for (const PersonRecord& r : records)
        if (filter.matches(r)) by_year[r.year] += 1.0;
    if (by_year.empty()) throw DataError("empty slice: no records match " + filter.describe());

    YearlySeries series;
    series.start_year = by_year.begin()->first;
    int last = by_year.rbegin()->first;
    series.counts.assign(static_cast<std::size_t>(last - series.start_year) + 1, 0.0);
    for (auto [year, count] : by_year)
        series.counts[static_cast<std::size_t>(year - series.start_year)] = count;
    return series;
}

YearlySeries parse_series(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError(1, "missing header row");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto header = split_csv(line);
    if (header.size() != 2 || lower(header[0]) != "year" || lower(header[1]) != "count")
        throw ParseError(1, "expected header 'year,count'");

    YearlySeries series;
    std::size_t line_no = 1;
    bool first = true;
    int expected_year = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        auto fields = split_csv(line);
        if (fields.size() != 2) throw ParseError(line_no, "expected 2 fields");
        auto year = parse_int(fields[0]);
        if (!year) throw ParseError(line_no, "bad year '" + fields[0] + "'");
        double count = 0.0;
        try {
            std::size_t used = 0;
            count = std::stod(fields[1], &used);
            if (used != fields[1].size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw ParseError(line_no, "bad count '" + fields[1] + "'");
        }
        if (count < 0.0) throw ParseError(line_no, "negative count");
        if (first) {
            series.start_year = *year;
            expected_year = *year;
            first = false;
        }
        if (*year != expected_year)
            throw ParseError(line_no, "years must be contiguous and ascending");
        ++expected_year;
        series.counts.push_back(count);
    }
    if (series.counts.empty()) throw DataError("series file has no data rows");
    return series;
}

std::string serialize_series(const YearlySeries& series) {
    std::ostringstream out;
    out << "year,count\n";
    for (std::size_t i = 0; i < series.counts.size(); ++i) {
        out << series.year_at(i) << ',';
        double c = series.counts[i];
        if (c == static_cast<double>(static_cast<long long>(c)))
            out << static_cast<long long>(c);
        else
            out << c;
        out << '\n';
    }
    return out.str();
}

}  // namespace crashcast
