#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <climits>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "hpmbs/errors.hpp"
#include "hpmbs/exact_pricing.hpp"
#include "hpmbs/hpm_series.hpp"
#include "hpmbs/surfaces.hpp"
#include "hpmbs/validation.hpp"

namespace hpmbs::cli {
namespace {

using nlohmann::json;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Contract { single, basket, quanto };

// Configuration keys; flags use the same names with '-' for '_'.
const std::vector<std::string> kNumberKeys = {
    "spot",   "s1",     "s2",     "strike",  "rate",  "vol",   "sigma1",    "sigma2",
    "rho",    "alpha1", "q1",     "q2",      "r1",    "r2",    "q",         "maturity",
    "valuation_time",   "s_min",  "s_max",   "s1_min", "s1_max", "s2_min", "s2_max",
    "t_min",  "t_max"};
const std::vector<std::string> kIntegerKeys = {"order", "threads", "s_points", "s1_points",
                                               "s2_points", "t_points"};
const std::vector<std::string> kStringKeys = {"contract", "method", "profile"};

const std::set<std::string> kSingleKeys = {"spot", "strike", "rate", "vol", "maturity", "valuation_time"};
const std::set<std::string> kBasketKeys = {"s1",     "s2", "strike", "rate",     "sigma1",        "sigma2",
                                           "rho",    "alpha1", "q1", "q2", "maturity", "valuation_time"};
const std::set<std::string> kQuantoKeys = {"s1", "s2", "sigma1", "sigma2",   "rho",           "r1",
                                           "r2", "q",  "strike", "maturity", "valuation_time"};

bool contains(const std::vector<std::string>& keys, const std::string& k) {
    return std::find(keys.begin(), keys.end(), k) != keys.end();
}

std::string flag_name(std::string key) {
    std::replace(key.begin(), key.end(), '_', '-');
    return "--" + key;
}

/// Merged settings: built-in defaults are supplied at the point of use, the
/// config file fills `values` first and flags overwrite it.
struct Config {
    std::map<std::string, json> values;

    [[nodiscard]] double number(const std::string& k, double fallback) const {
        const auto it = values.find(k);
        return it == values.end() ? fallback : it->second.get<double>();
    }

    [[nodiscard]] int integer(const std::string& k, int fallback) const {
        const auto it = values.find(k);
        return it == values.end() ? fallback : it->second.get<int>();
    }

    [[nodiscard]] std::string text(const std::string& k, const std::string& fallback) const {
        const auto it = values.find(k);
        return it == values.end() ? fallback : it->second.get<std::string>();
    }

    /// Fails on any key outside `allowed`.
    void restrict_to(const std::set<std::string>& allowed, const std::string& context) const {
        for (const auto& [k, v] : values) {
            if (allowed.count(k) == 0) {
                throw InputError("'" + k + "' does not apply to " + context);
            }
        }
    }
};

void set_checked(Config& cfg, const std::string& key, const json& v, const std::string& source) {
    if (contains(kNumberKeys, key)) {
        if (!v.is_number() || !std::isfinite(v.get<double>())) {
            throw InputError(source + ": '" + key + "' must be a finite number");
        }
    } else if (contains(kIntegerKeys, key)) {
        if (!v.is_number_integer() || v.get<long long>() < INT_MIN || v.get<long long>() > INT_MAX) {
            throw InputError(source + ": '" + key + "' must be an integer");
        }
    } else if (contains(kStringKeys, key)) {
        if (!v.is_string()) {
            throw InputError(source + ": '" + key + "' must be a string");
        }
    } else {
        throw InputError(source + ": unknown key '" + key + "'");
    }
    cfg.values[key] = v;
}

void load_config_file(Config& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot read config file '" + path + "'");
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError("config file '" + path + "' is not valid JSON: " + e.what());
    }
    if (!doc.is_object()) {
        throw InputError("config file '" + path + "' must contain a JSON object");
    }
    for (const auto& [k, v] : doc.items()) {
        set_checked(cfg, k, v, path);
    }
}

/// Flag storage for one subcommand. Values are copied into a Config after
/// parsing, so a flag only overrides the file when it was given.
struct FlagSet {
    std::map<std::string, double> numbers;
    std::map<std::string, long long> integers;
    std::map<std::string, std::string> strings;
    std::map<std::string, CLI::Option*> options;
    std::string config_path;
    CLI::Option* config_option = nullptr;

    void add(CLI::App& app, const std::vector<std::string>& keys) {
        for (const auto& k : keys) {
            CLI::Option* opt = nullptr;
            if (contains(kNumberKeys, k)) {
                opt = app.add_option(flag_name(k), numbers[k]);
            } else if (contains(kIntegerKeys, k)) {
                opt = app.add_option(flag_name(k), integers[k]);
            } else {
                opt = app.add_option(flag_name(k), strings[k]);
            }
            options[k] = opt;
        }
    }

    void add_config(CLI::App& app) {
        config_option = app.add_option("--config", config_path, "JSON config file; flags override it");
    }

    [[nodiscard]] Config merge() const {
        Config cfg;
        if (config_option != nullptr && config_option->count() > 0) {
            load_config_file(cfg, config_path);
        }
        for (const auto& [k, opt] : options) {
            if (opt->count() == 0) continue;
            if (numbers.count(k) != 0) {
                set_checked(cfg, k, numbers.at(k), "flag " + flag_name(k));
            } else if (integers.count(k) != 0) {
                set_checked(cfg, k, integers.at(k), "flag " + flag_name(k));
            } else {
                set_checked(cfg, k, strings.at(k), "flag " + flag_name(k));
            }
        }
        return cfg;
    }
};

Contract parse_contract(const std::string& s) {
    if (s == "single") return Contract::single;
    if (s == "basket") return Contract::basket;
    if (s == "quanto") return Contract::quanto;
    throw InputError("unknown contract '" + s + "' (expected single, basket or quanto)");
}

const char* contract_name(Contract c) {
    switch (c) {
        case Contract::single:
            return "single";
        case Contract::basket:
            return "basket";
        case Contract::quanto:
            return "quanto";
    }
    return "single";
}

PriceMethod parse_method(const std::string& s, Contract c) {
    PriceMethod m;
    if (s == "exact") {
        m = PriceMethod::exact;
    } else if (s == "hpm1") {
        m = PriceMethod::hpm1;
    } else if (s == "hpm2") {
        m = PriceMethod::hpm2;
    } else if (s == "basket-literal") {
        m = PriceMethod::basket_literal;
    } else {
        throw InputError("unknown method '" + s + "' (expected exact, hpm1, hpm2 or basket-literal)");
    }
    if (m == PriceMethod::hpm1 && c != Contract::single) {
        throw InputError("hpm1 applies to single-asset contracts only");
    }
    if (m == PriceMethod::basket_literal && c != Contract::basket) {
        throw InputError("basket-literal applies to basket contracts only");
    }
    return m;
}

const std::set<std::string>& contract_keys(Contract c) {
    switch (c) {
        case Contract::single:
            return kSingleKeys;
        case Contract::basket:
            return kBasketKeys;
        case Contract::quanto:
            return kQuantoKeys;
    }
    return kSingleKeys;
}

VanillaOptionSpec vanilla_from(const Config& cfg) {
    VanillaOptionSpec s;
    s.spot = cfg.number("spot", s.spot);
    s.strike = cfg.number("strike", s.strike);
    s.rate = cfg.number("rate", s.rate);
    s.vol = cfg.number("vol", s.vol);
    s.maturity = cfg.number("maturity", s.maturity);
    s.valuation_time = cfg.number("valuation_time", s.valuation_time);
    s.validate();
    return s;
}

// Two-asset geometric basket; the correlation defaults to zero.
BasketSpec basket_from(const Config& cfg) {
    BasketSpec b = BasketSpec::two_asset(
        cfg.number("s1", 40.0), cfg.number("s2", 40.0), cfg.number("sigma1", 0.1),
        cfg.number("sigma2", 0.3), cfg.number("rho", 0.0), cfg.number("alpha1", 0.5),
        cfg.number("rate", 0.05), cfg.number("strike", 40.0), cfg.number("maturity", 0.5),
        cfg.number("valuation_time", 0.0), cfg.number("q1", 0.0), cfg.number("q2", 0.0));
    (void)reduce_basket(b);
    return b;
}

QuantoSpec quanto_from(const Config& cfg) {
    QuantoSpec q;
    q.s1 = cfg.number("s1", q.s1);
    q.s2 = cfg.number("s2", q.s2);
    q.sigma1 = cfg.number("sigma1", q.sigma1);
    q.sigma2 = cfg.number("sigma2", q.sigma2);
    q.rho = cfg.number("rho", q.rho);
    q.r1 = cfg.number("r1", q.r1);
    q.r2 = cfg.number("r2", q.r2);
    q.q = cfg.number("q", q.q);
    q.strike = cfg.number("strike", q.strike);
    q.maturity = cfg.number("maturity", q.maturity);
    q.valuation_time = cfg.number("valuation_time", q.valuation_time);
    (void)reduce_quanto(q);
    return q;
}

SweepOptions sweep_from(const Config& cfg) {
    SweepOptions o;
    o.threads = cfg.integer("threads", 0);
    if (o.threads < 0) {
        throw InputError("threads must be >= 0 (0 uses every hardware thread)");
    }
    o.order = cfg.integer("order", kDefaultSeriesOrder);
    check_series_order(o.order);
    return o;
}

std::vector<double> axis_from(const Config& cfg, const std::string& prefix, double lo, double hi,
                              int points) {
    const double a = cfg.number(prefix + "_min", lo);
    const double b = cfg.number(prefix + "_max", hi);
    const int n = cfg.integer(prefix + "_points", points);
    if (n < 2) {
        throw InputError(prefix + "_points must be at least 2");
    }
    if (!(a < b)) {
        throw InputError(prefix + "_min must be below " + prefix + "_max");
    }
    return linspace(a, b, n);
}

std::set<std::string> axis_keys(std::initializer_list<const char*> prefixes) {
    std::set<std::string> out;
    for (const char* p : prefixes) {
        out.insert(std::string(p) + "_min");
        out.insert(std::string(p) + "_max");
        out.insert(std::string(p) + "_points");
    }
    return out;
}

std::string fmt(double v, const char* format = "%.17g") {
    char buf[40];
    std::snprintf(buf, sizeof buf, format, v);
    return buf;
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void emit(PriceSurface& surface, const std::string& out_path, bool timestamp, std::ostream& out) {
    surface.validate();
    if (timestamp) {
        surface.metadata.push_back({"timestamp", utc_timestamp()});
    }
    if (out_path.empty()) {
        surface.write_csv(out);
        return;
    }
    std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw IoError("cannot open '" + out_path + "' for writing");
    }
    surface.write_csv(file);
    file.flush();
    if (!file) {
        throw IoError("failed writing '" + out_path + "'");
    }
}

// price -----------------------------------------------------------------

void print_line(std::ostream& out, const std::string& key, const std::string& value) {
    out << key << ": " << value << '\n';
}

int cmd_price(const std::string& contract_arg, const FlagSet& flags, std::ostream& out) {
    const Config cfg = flags.merge();
    const Contract c = parse_contract(contract_arg.empty() ? cfg.text("contract", "single") : contract_arg);
    std::set<std::string> allowed = contract_keys(c);
    allowed.insert({"contract", "method", "order", "threads"});
    cfg.restrict_to(allowed, std::string("price ") + contract_name(c));
    const PriceMethod method = parse_method(cfg.text("method", "exact"), c);
    const SweepOptions sweep = sweep_from(cfg);
    const bool series = method == PriceMethod::hpm2 || method == PriceMethod::basket_literal;

    double price = 0.0;
    double exact = 0.0;
    std::vector<std::pair<std::string, double>> params;
    switch (c) {
        case Contract::single: {
            const VanillaOptionSpec s = vanilla_from(cfg);
            exact = bs_put(s).value;
            price = method == PriceMethod::hpm1   ? price_single_hpm1(s).value
                    : method == PriceMethod::hpm2 ? price_single_hpm2(s, sweep.order).value
                                                  : exact;
            params = {{"spot", s.spot},         {"strike", s.strike},     {"rate", s.rate},
                      {"vol", s.vol},           {"maturity", s.maturity}, {"valuation_time", s.valuation_time}};
            break;
        }
        case Contract::basket: {
            const BasketSpec b = basket_from(cfg);
            exact = basket_put_exact(b).value;
            if (method != PriceMethod::exact) {
                const auto variant =
                    method == PriceMethod::hpm2 ? BasketVariant::generalized : BasketVariant::literal;
                price = price_basket_hpm(b, sweep.order, variant).value;
            } else {
                price = exact;
            }
            params = {{"s1", b.spots[0]},
                      {"s2", b.spots[1]},
                      {"sigma1", std::sqrt(b.cov(0, 0))},
                      {"sigma2", std::sqrt(b.cov(1, 1))},
                      {"a12", b.cov(0, 1)},
                      {"alpha1", b.weights[0]},
                      {"q1", b.dividends[0]},
                      {"q2", b.dividends[1]},
                      {"rate", b.rate},
                      {"strike", b.strike},
                      {"maturity", b.maturity},
                      {"valuation_time", b.valuation_time}};
            break;
        }
        case Contract::quanto: {
            const QuantoSpec q = quanto_from(cfg);
            exact = quanto_put_exact(q).value;
            price = method == PriceMethod::hpm2 ? price_quanto_hpm(q, sweep.order).value : exact;
            params = {{"s1", q.s1},     {"s2", q.s2},   {"sigma1", q.sigma1},     {"sigma2", q.sigma2},
                      {"rho", q.rho},   {"r1", q.r1},   {"r2", q.r2},             {"q", q.q},
                      {"strike", q.strike}, {"maturity", q.maturity}, {"valuation_time", q.valuation_time}};
            break;
        }
    }

    print_line(out, "contract", contract_name(c));
    print_line(out, "method", std::string(method_name(method)));
    if (series) {
        print_line(out, "order", std::to_string(sweep.order));
    }
    for (const auto& [k, v] : params) {
        print_line(out, k, fmt(v, "%.12g"));
    }
    print_line(out, "price", fmt(price));
    if (method != PriceMethod::exact) {
        print_line(out, "exact", fmt(exact));
        print_line(out, "deviation", fmt(price - exact));
    }
    return kOk;
}

// figure / grid ------------------------------------------------------------

int cmd_figure(int figure, const FlagSet& flags, const std::string& out_path, bool timestamp,
               std::ostream& out) {
    if (figure < 1 || figure > 6) {
        throw InputError("figure must be 1..6");
    }
    const Config cfg = flags.merge();
    std::set<std::string> allowed = {"order", "threads"};
    std::set<std::string> axes;
    if (figure <= 2) {
        allowed.insert({"strike", "rate", "vol", "maturity"});
        axes = figure == 1 ? axis_keys({"s"}) : axis_keys({"s", "t"});
        if (figure == 1) allowed.insert("valuation_time");
    } else {
        allowed = contract_keys(figure <= 4 ? Contract::basket : Contract::quanto);
        allowed.erase("s1");
        allowed.erase("s2");
        allowed.insert({"order", "threads"});
        axes = axis_keys({"s1", "s2"});
    }
    allowed.insert(axes.begin(), axes.end());
    cfg.restrict_to(allowed, "figure " + std::to_string(figure));
    const SweepOptions sweep = sweep_from(cfg);

    PriceSurface surface;
    if (figure <= 2) {
        const VanillaOptionSpec base = vanilla_from(cfg);
        if (figure == 1) {
            surface = single_curve_surface(base, axis_from(cfg, "s", 1.0, 100.0, 201), sweep);
        } else {
            const auto spots = axis_from(cfg, "s", 1.0, 100.0, 101);
            const auto times = axis_from(cfg, "t", 0.0, base.maturity, 51);
            surface = single_error_surface(base, spots, times, sweep);
        }
    } else {
        const auto s1 = axis_from(cfg, "s1", 20.0, 60.0, 41);
        const auto s2 = axis_from(cfg, "s2", 20.0, 60.0, 41);
        const bool error = figure % 2 == 0;
        surface = figure <= 4 ? basket_surface(basket_from(cfg), s1, s2, error, sweep)
                              : quanto_surface(quanto_from(cfg), s1, s2, error, sweep);
    }
    surface.metadata.insert(surface.metadata.begin(), {"figure", std::to_string(figure)});
    emit(surface, out_path, timestamp, out);
    return kOk;
}

int cmd_grid(const std::string& contract_arg, const FlagSet& flags, const std::string& out_path,
             bool timestamp, std::ostream& out) {
    const Config cfg = flags.merge();
    const Contract c = parse_contract(contract_arg.empty() ? cfg.text("contract", "single") : contract_arg);
    std::set<std::string> allowed = contract_keys(c);
    allowed.insert({"contract", "method", "order", "threads"});
    const std::set<std::string> axes = c == Contract::single ? axis_keys({"s"}) : axis_keys({"s1", "s2"});
    allowed.insert(axes.begin(), axes.end());
    allowed.erase(c == Contract::single ? "spot" : "s1");
    allowed.erase("s2");
    cfg.restrict_to(allowed, std::string("grid ") + contract_name(c));
    const PriceMethod method = parse_method(cfg.text("method", "exact"), c);
    const SweepOptions sweep = sweep_from(cfg);

    PriceSurface surface;
    if (c == Contract::single) {
        surface = single_method_surface(vanilla_from(cfg), axis_from(cfg, "s", 1.0, 100.0, 201), method, sweep);
    } else {
        const auto s1 = axis_from(cfg, "s1", 20.0, 60.0, 41);
        const auto s2 = axis_from(cfg, "s2", 20.0, 60.0, 41);
        surface = c == Contract::basket ? basket_method_surface(basket_from(cfg), s1, s2, method, sweep)
                                        : quanto_method_surface(quanto_from(cfg), s1, s2, method, sweep);
    }
    emit(surface, out_path, timestamp, out);
    return kOk;
}

// validate -----------------------------------------------------------------

int cmd_validate(const FlagSet& flags, bool mutate_phi2, bool measure, const std::vector<int>& criteria,
                 std::ostream& out) {
    const Config cfg = flags.merge();
    cfg.restrict_to({"profile"}, "validate");
    if (measure) {
        for (const auto& v : validation::measure_regression_values()) {
            out << v.name << " = " << fmt(v.value) << '\n';
        }
        return kOk;
    }
    validation::SuiteOptions opts;
    const std::string profile = cfg.text("profile", "default");
    if (profile == "strict") {
        opts.profile = validation::Profile::strict;
    } else if (profile != "default") {
        throw InputError("unknown profile '" + profile + "' (expected default or strict)");
    }
    if (mutate_phi2) {
        opts.generalized_terms = validation::mutated_phi2_terms();
    }
    std::vector<validation::CheckResult> results;
    if (criteria.empty()) {
        results = validation::run_suite(opts);
    } else {
        for (int k : criteria) {
            if (k < 1 || k > validation::kCriterionCount) {
                throw InputError("criterion must be 1.." + std::to_string(validation::kCriterionCount));
            }
            auto part = validation::run_criterion(k, opts);
            results.insert(results.end(), part.begin(), part.end());
        }
    }
    validation::print_table(out, results);
    std::size_t failed = 0;
    for (const auto& r : results) {
        if (r.status == validation::Status::fail) ++failed;
    }
    if (failed == 0) {
        out << "all checks passed\n";
        return kOk;
    }
    out << failed << (failed == 1 ? " check failed\n" : " checks failed\n");
    return kValidationFailure;
}

std::vector<std::string> contract_flag_keys() {
    std::vector<std::string> keys;
    for (const auto* set : {&kSingleKeys, &kBasketKeys, &kQuantoKeys}) {
        for (const auto& k : *set) {
            if (!contains(keys, k)) keys.push_back(k);
        }
    }
    return keys;
}

std::vector<std::string> with(std::vector<std::string> keys, std::initializer_list<const char*> extra) {
    for (const char* k : extra) keys.emplace_back(k);
    return keys;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"European put pricing: closed forms, perturbation series and validation"};
    app.name("hpmbs");
    app.require_subcommand(1);

    const std::vector<std::string> contract_keys_all = contract_flag_keys();
    const std::vector<std::string> axis_all = {"s_min", "s_max", "s_points", "s1_min", "s1_max", "s1_points",
                                               "s2_min", "s2_max", "s2_points", "t_min", "t_max", "t_points"};

    std::string price_contract;
    FlagSet price_flags;
    CLI::App* price = app.add_subcommand("price", "Price one contract");
    price->add_option("contract", price_contract, "single, basket or quanto");
    price_flags.add(*price, with(contract_keys_all, {"method", "order", "threads"}));
    price_flags.add_config(*price);

    int figure_id = 0;
    std::string figure_out;
    bool figure_timestamp = false;
    FlagSet figure_flags;
    CLI::App* figure = app.add_subcommand("figure", "Write the data behind one of the six result plots as CSV");
    figure->add_option("id", figure_id, "1..6")->required();
    figure->add_option("--out", figure_out, "CSV path (default: stdout)");
    figure->add_flag("--timestamp", figure_timestamp, "Record the UTC generation time in the metadata");
    std::vector<std::string> figure_keys = axis_all;
    for (const auto& k : contract_keys_all) {
        if (k != "spot" && k != "s1" && k != "s2") figure_keys.push_back(k);
    }
    figure_flags.add(*figure, with(figure_keys, {"order", "threads"}));
    figure_flags.add_config(*figure);

    std::string grid_contract;
    std::string grid_out;
    bool grid_timestamp = false;
    FlagSet grid_flags;
    CLI::App* grid = app.add_subcommand("grid", "Sweep one pricing method over a spot grid as CSV");
    grid->add_option("contract", grid_contract, "single, basket or quanto");
    grid->add_option("--out", grid_out, "CSV path (default: stdout)");
    grid->add_flag("--timestamp", grid_timestamp, "Record the UTC generation time in the metadata");
    std::vector<std::string> grid_keys = axis_all;
    for (const auto& k : contract_keys_all) {
        if (k != "spot" && k != "s1" && k != "s2") grid_keys.push_back(k);
    }
    grid_flags.add(*grid, with(grid_keys, {"method", "order", "threads"}));
    grid_flags.add_config(*grid);

    bool mutate_phi2 = false;
    bool measure = false;
    std::vector<int> criteria;
    FlagSet validate_flags;
    CLI::App* validate = app.add_subcommand("validate", "Run the acceptance checks; exit 1 if any fails");
    validate_flags.add(*validate, {"profile"});
    validate_flags.add_config(*validate);
    validate->add_flag("--mutate-phi2", mutate_phi2, "Corrupt one series coefficient (mutation test)");
    validate->add_flag("--measure", measure, "Print the current regression constants and exit");
    validate->add_option("--criterion", criteria, "Run only these criteria");

    std::vector<const char*> argv{"hpmbs"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kBadInput;
    }

    try {
        if (price->parsed()) return cmd_price(price_contract, price_flags, out);
        if (figure->parsed()) return cmd_figure(figure_id, figure_flags, figure_out, figure_timestamp, out);
        if (grid->parsed()) return cmd_grid(grid_contract, grid_flags, grid_out, grid_timestamp, out);
        return cmd_validate(validate_flags, mutate_phi2, measure, criteria, out);
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << '\n';
        return kBadInput;
    }
}

}  // namespace hpmbs::cli
