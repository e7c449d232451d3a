#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "crashcast/series.hpp"

namespace crashcast {

enum class Role { Driver, Passenger };

enum class Helmet { Worn, NotWorn, Unknown };

enum class Severity {
    Fatality,
    SuspectedSerious,
    NonIncapacitating,
    PossibleInjury,
    NotInjured,
    UnknownInjury
};

inline constexpr int kRoleCount = 2;
inline constexpr int kHelmetCount = 3;
inline constexpr int kSeverityCount = 6;

inline constexpr int kMinAge = 0;
inline constexpr int kMaxAge = 99;

// Canonical lowercase tokens, as used in record files.
std::string_view to_token(Role r);
std::string_view to_token(Helmet h);
std::string_view to_token(Severity s);

// Case-insensitive; returns nullopt for unrecognized tokens.
std::optional<Role> parse_role(std::string_view token);
std::optional<Helmet> parse_helmet(std::string_view token);
std::optional<Severity> parse_severity(std::string_view token);

// One person involved in one crash; the ingestion atom.
struct PersonRecord {
    int year = 0;
    int age = 0;  // whole years, 0-99
    Role role = Role::Driver;
    Helmet helmet = Helmet::Unknown;
    Severity severity = Severity::UnknownInjury;

    bool operator==(const PersonRecord&) const = default;
};

// Four buckets partitioning ages 0-99.
enum class AgeBucket { Under30, Thirties, Forties, FiftyPlus };

struct AgeRange {
    int min;
    int max;  // inclusive
};

AgeBucket bucket_age(int age);
AgeRange bucket_range(AgeBucket bucket);
inline constexpr std::array<AgeBucket, 4> kAllAgeBuckets = {
    AgeBucket::Under30, AgeBucket::Thirties, AgeBucket::Forties, AgeBucket::FiftyPlus};

// One cell of the severity x driver-helmet x passenger-helmet condition space.
struct CrashCondition {
    Severity severity;
    Helmet driver_helmet;
    Helmet passenger_helmet;

    bool operator==(const CrashCondition&) const = default;
    auto operator<=>(const CrashCondition&) const = default;
};

// All 54 conditions in lexicographic (severity, driver_helmet, passenger_helmet) order.
std::vector<CrashCondition> enumerate_conditions();

// Conjunctive record predicate; an empty filter matches everything.
struct RecordFilter {
    std::optional<int> age_min;
    std::optional<int> age_max;
    std::optional<int> year_min;
    std::optional<int> year_max;
    std::optional<Role> role;
    std::optional<std::set<Severity>> severities;
    std::optional<std::set<Helmet>> helmets;

    bool matches(const PersonRecord& r) const;

    static RecordFilter for_bucket(AgeBucket bucket);

    // Human-readable summary, e.g. "role=driver age=13-19"; "all" when empty.
    std::string describe() const;
};

// Record file: CSV with header "year,age,role,helmet,severity" (columns may be
// reordered; the header names the schema). Throws ParseError naming the line.
std::vector<PersonRecord> parse_records(std::istream& in);

// Canonical form: header + one row per record, canonical column order and tokens.
std::string serialize_records(const std::vector<PersonRecord>& records);

// Counts matching records per year between the first and last matching year;
// in-between years with no matches appear as 0. Throws DataError on an empty slice.
YearlySeries aggregate_yearly(const std::vector<PersonRecord>& records,
                              const RecordFilter& filter);

// Series file: CSV with header "year,count".
YearlySeries parse_series(std::istream& in);
std::string serialize_series(const YearlySeries& series);

}  // namespace crashcast
