#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "crashcast/error.hpp"
#include "crashcast/plot.hpp"
#include "crashcast/probability.hpp"
#include "crashcast/records.hpp"
#include "crashcast/report.hpp"

namespace {

using crashcast::DataError;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitData = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Whole-document write: the content is fully built before the file is opened,
// so a failed run never leaves a partial file behind.
void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot write " + path);
    out << content;
    if (!out) throw DataError("write failed for " + path);
}

crashcast::YearlySeries load_series(const std::string& path) {
    std::istringstream in(read_file(path));
    return crashcast::parse_series(in);
}

struct FilterFlags {
    std::string role;
    std::vector<std::string> severities;
    std::vector<std::string> helmets;
    std::optional<int> age_min, age_max, year_min, year_max;

    void attach(CLI::App* cmd) {
        cmd->add_option("--role", role, "driver or passenger")
            ->check(CLI::IsMember({"driver", "passenger"}, CLI::ignore_case));
        cmd->add_option("--severity", severities, "severity token (repeatable)");
        cmd->add_option("--helmet", helmets, "helmet token (repeatable)");
        cmd->add_option("--age-min", age_min)->check(CLI::Range(0, 99));
        cmd->add_option("--age-max", age_max)->check(CLI::Range(0, 99));
        cmd->add_option("--year-min", year_min);
        cmd->add_option("--year-max", year_max);
    }

    crashcast::RecordFilter build() const {
        crashcast::RecordFilter f;
        f.age_min = age_min;
        f.age_max = age_max;
        f.year_min = year_min;
        f.year_max = year_max;
        if (!role.empty()) {
            auto r = crashcast::parse_role(role);
            if (!r) throw DataError("unrecognized role '" + role + "'");
            f.role = *r;
        }
        if (!severities.empty()) {
            std::set<crashcast::Severity> set;
            for (const auto& tok : severities) {
                auto s = crashcast::parse_severity(tok);
                if (!s) throw DataError("unrecognized severity '" + tok + "'");
                set.insert(*s);
            }
            f.severities = std::move(set);
        }
        if (!helmets.empty()) {
            std::set<crashcast::Helmet> set;
            for (const auto& tok : helmets) {
                auto h = crashcast::parse_helmet(tok);
                if (!h) throw DataError("unrecognized helmet state '" + tok + "'");
                set.insert(*h);
            }
            f.helmets = std::move(set);
        }
        return f;
    }
};

unsigned seed_from_env() {
    if (const char* s = std::getenv("CRASHCAST_SEED")) {
        try {
            return static_cast<unsigned>(std::stoul(s));
        } catch (const std::exception&) {
            throw DataError("CRASHCAST_SEED is not a number");
        }
    }
    return 12345u;
}

json sub_document(const crashcast::AnalysisBundle& bundle,
                  const std::vector<std::string>& drop) {
    json doc = json::parse(crashcast::render_report(bundle));
    for (const auto& key : drop) doc.erase(key);
    return doc;
}

int run(int argc, char** argv) {
    CLI::App app{"crash-fatality statistics and forecasting toolkit"};
    app.require_subcommand(1);

    // ingest: records CSV -> filtered yearly series CSV
    auto* ingest = app.add_subcommand("ingest", "aggregate person records into a yearly series");
    std::string records_path, out_path;
    FilterFlags filter_flags;
    ingest->add_option("--records", records_path, "person-record CSV")->required();
    ingest->add_option("--out", out_path, "output path (stdout if absent)");
    filter_flags.attach(ingest);

    // describe: mean/stddev and optional normality test
    auto* describe = app.add_subcommand("describe", "descriptive statistics for a series");
    std::string series_path;
    bool with_normality = false;
    int null_sim = 0;
    describe->add_option("--series", series_path, "series CSV")->required();
    describe->add_flag("--normality", with_normality, "run the normality test");
    describe->add_option("--null-sim", null_sim,
                         "Monte Carlo null calibration with this many replicates")
        ->check(CLI::Range(0, 1000000));
    describe->add_option("--out", out_path, "output path (stdout if absent)");

    // trend / ses / report share the bundle machinery
    auto* trend = app.add_subcommand("trend", "linear trend fit, accuracy and forecasts");
    auto* ses = app.add_subcommand("ses", "exponential smoothing fit and forecasts");
    auto* report = app.add_subcommand("report", "full analysis bundle");
    std::optional<double> alpha;
    int horizon = 4;
    double confidence = 0.95;
    bool report_normality = false;
    for (CLI::App* cmd : {trend, ses, report}) {
        cmd->add_option("--series", series_path, "series CSV")->required();
        cmd->add_option("--horizon", horizon)->check(CLI::Range(1, 1000));
        cmd->add_option("--out", out_path, "output path (stdout if absent)");
    }
    for (CLI::App* cmd : {ses, report}) {
        cmd->add_option("--alpha", alpha, "smoothing constant; absent means optimize")
            ->check(CLI::Range(1e-9, 2.0));
        cmd->add_option("--confidence", confidence)
            ->check(CLI::Range(1e-9, 1.0 - 1e-9));
    }
    report->add_flag("--normality", report_normality, "include the normality test");

    // prob: law-of-total-probability combinator
    auto* prob = app.add_subcommand("prob", "total probability over branches");
    std::vector<std::string> branch_specs;
    prob->add_option("--branch", branch_specs, "conditional,prior (repeatable)")
        ->required();
    prob->add_option("--out", out_path, "output path (stdout if absent)");

    // plot: SVG chart of series, fit and forecast band
    auto* plot = app.add_subcommand("plot", "render the smoothing plot as SVG");
    plot->add_option("--series", series_path, "series CSV")->required();
    plot->add_option("--alpha", alpha, "smoothing constant; absent means optimize")
        ->check(CLI::Range(1e-9, 2.0));
    plot->add_option("--horizon", horizon)->check(CLI::Range(1, 1000));
    plot->add_option("--confidence", confidence)->check(CLI::Range(1e-9, 1.0 - 1e-9));
    plot->add_option("--out", out_path, "output SVG path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*ingest) {
            std::istringstream in(read_file(records_path));
            auto records = crashcast::parse_records(in);
            auto series = crashcast::aggregate_yearly(records, filter_flags.build());
            write_output(out_path, crashcast::serialize_series(series));
            return kExitOk;
        }

        if (*describe) {
            auto series = load_series(series_path);
            auto stats = crashcast::mean_stddev(series.counts);
            json doc;
            doc["metadata"] = {{"source", series_path}};
            doc["descriptive"] = {{"n", series.size()},
                                  {"mean", stats.mean},
                                  {"stddev", stats.stddev}};
            if (with_normality || null_sim > 0) {
                auto nr = crashcast::anderson_darling(series.counts);
                doc["normality"] = {{"n", nr.n},       {"a2", nr.a2},
                                    {"a2_star", nr.a2_star}, {"p_value", nr.p_value},
                                    {"p_floored", nr.p_floored}};
                if (null_sim > 0) {
                    // Monte Carlo p-value: share of null replicates whose
                    // statistic exceeds the observed one.
                    std::mt19937 rng(seed_from_env());
                    std::normal_distribution<double> normal(0.0, 1.0);
                    std::vector<double> draw(series.size());
                    int exceed = 0;
                    for (int rep = 0; rep < null_sim; ++rep) {
                        for (double& v : draw) v = normal(rng);
                        if (crashcast::anderson_darling(draw).a2_star >= nr.a2_star) ++exceed;
                    }
                    doc["normality"]["monte_carlo"] = {
                        {"replicates", null_sim},
                        {"seed", seed_from_env()},
                        {"p_value", static_cast<double>(exceed) / null_sim}};
                }
            }
            write_output(out_path, doc.dump(2) + "\n");
            return kExitOk;
        }

        if (*trend || *ses || *report) {
            auto series = load_series(series_path);
            crashcast::BundleOptions options;
            options.alpha = alpha;
            options.horizon = horizon;
            options.confidence = confidence;
            options.with_normality = report_normality;
            options.source = series_path;
            auto bundle = crashcast::make_bundle(series, options);
            json doc;
            if (*trend)
                doc = sub_document(bundle, {"ses"});
            else if (*ses)
                doc = sub_document(bundle, {"trend"});
            else
                doc = sub_document(bundle, {});
            write_output(out_path, doc.dump(2) + "\n");
            return kExitOk;
        }

        if (*prob) {
            std::vector<crashcast::ProbabilityBranch> branches;
            json listed = json::array();
            for (const auto& spec : branch_specs) {
                double cond = 0.0, prior = 0.0;
                if (std::sscanf(spec.c_str(), "%lf,%lf", &cond, &prior) != 2) {
                    std::cerr << "bad --branch '" << spec << "', expected conditional,prior\n";
                    return kExitUsage;
                }
                branches.push_back({cond, prior});
                listed.push_back({{"conditional", cond}, {"prior", prior}});
            }
            double total = crashcast::total_probability(branches);
            json doc;
            doc["branches"] = listed;
            doc["total_probability"] = crashcast::round_probability(total);
            doc["raw"] = {{"total_probability", total}};
            write_output(out_path, doc.dump(2) + "\n");
            return kExitOk;
        }

        if (*plot) {
            auto series = load_series(series_path);
            double a = alpha ? *alpha : crashcast::optimize_alpha(series);
            auto fit = crashcast::ses_fit(series, a);
            auto forecast = crashcast::ses_forecast(fit, horizon, confidence);
            write_output(out_path, crashcast::render_plot(series, fit.smoothed, forecast));
            return kExitOk;
        }
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
