#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "vinc/evaluate.hpp"
#include "vinc/oracle.hpp"
#include "vinc/scheme.hpp"
#include "vinc/survey.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitNoScheme = 3;
constexpr int kExitMismatch = 4;

using ordered_json = nlohmann::ordered_json;

std::vector<vinc::VincularPattern> parse_patterns_arg(const std::string& text) {
    auto patterns = vinc::parse_pattern_set(text);
    if (patterns.empty()) throw std::invalid_argument("empty pattern set");
    return patterns;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// Enumerate and oracle-check accept either a pattern set or a path to a
// previously written scheme file; anything naming a readable file is a file.
bool looks_like_file(const std::string& source) {
    std::error_code ec;
    return std::filesystem::is_regular_file(source, ec);
}

ordered_json scheme_json(const vinc::Scheme& scheme) {
    return ordered_json::parse(vinc::serialize(scheme));
}

ordered_json letters_json(const vinc::Permutation& p) {
    return ordered_json(p.letters());
}

void print_blockers(const vinc::NoScheme& failure, const vinc::DiscoveryParams& params) {
    std::cout << "no scheme within depth " << params.max_depth << " at max gap norm "
              << params.max_gap_norm << "\n";
    std::cout << "blocking prefixes:\n";
    for (const vinc::Permutation& p : failure.blocking) std::cout << "  " << p.str() << "\n";
}

struct CommonOptions {
    vinc::DiscoveryParams params;
    bool json = false;
};

const CLI::Range kAtLeastOne{1, std::numeric_limits<int>::max()};
const CLI::Range kAtLeastZero{0, std::numeric_limits<int>::max()};

void add_discovery_flags(CLI::App* sub, CommonOptions& opts) {
    sub->add_option("-d,--depth", opts.params.max_depth, "Maximum prefix length searched")
        ->check(kAtLeastOne);
    sub->add_option("-M,--max-gap-norm", opts.params.max_gap_norm,
                    "Maximum norm of gap vectors considered")
        ->check(kAtLeastZero);
}

int run_discover(const std::string& patterns_text, const CommonOptions& opts,
                 bool try_reverse, const std::string& out_path) {
    auto patterns = parse_patterns_arg(patterns_text);
    vinc::FallbackOutcome outcome;
    if (try_reverse) {
        outcome = vinc::discover_with_reverse(patterns, opts.params);
    } else {
        outcome = {vinc::discover(patterns, opts.params), false};
    }

    if (const auto* failure = std::get_if<vinc::NoScheme>(&outcome.result)) {
        if (opts.json) {
            ordered_json doc;
            doc["patterns"] = ordered_json::array();
            for (const auto& p : patterns) doc["patterns"].push_back(p.str());
            doc["max_depth"] = opts.params.max_depth;
            doc["max_gap_norm"] = opts.params.max_gap_norm;
            doc["blocking"] = ordered_json::array();
            for (const auto& p : failure->blocking) doc["blocking"].push_back(letters_json(p));
            std::cout << doc.dump(2) << "\n";
        } else {
            print_blockers(*failure, opts.params);
        }
        return kExitNoScheme;
    }

    const auto& scheme = std::get<vinc::Scheme>(outcome.result);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot write file: " + out_path);
        out << vinc::serialize(scheme);
    }
    if (opts.json) {
        ordered_json doc;
        doc["variant"] = outcome.used_reverse ? "reverse" : "direct";
        doc["scheme"] = scheme_json(scheme);
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "scheme for " << vinc::format_pattern_set(scheme.patterns);
        if (outcome.used_reverse)
            std::cout << " (reverse of " << vinc::format_pattern_set(patterns) << ")";
        std::cout << "\n";
        std::cout << "depth " << scheme.depth() << ", " << scheme.triples.size()
                  << " triples, max gap norm " << scheme.max_gap_norm << "\n";
        if (!out_path.empty()) std::cout << "written to " << out_path << "\n";
    }
    return 0;
}

// Raw patterns are discovered on the fly. Plain counting may fall back to the
// reversed set, which shares the same sequence; inversion counts may not,
// since reversal reshuffles them.
int obtain_scheme(const std::string& source, const CommonOptions& opts, bool allow_reverse,
                  vinc::Scheme& scheme) {
    if (looks_like_file(source)) {
        scheme = vinc::deserialize(slurp(source));
        return 0;
    }
    auto patterns = parse_patterns_arg(source);
    vinc::FallbackOutcome outcome;
    if (allow_reverse) {
        outcome = vinc::discover_with_reverse(patterns, opts.params);
    } else {
        outcome = {vinc::discover(patterns, opts.params), false};
    }
    if (const auto* failure = std::get_if<vinc::NoScheme>(&outcome.result)) {
        print_blockers(*failure, opts.params);
        return kExitNoScheme;
    }
    scheme = std::get<vinc::Scheme>(outcome.result);
    if (outcome.used_reverse)
        std::cerr << "note: using scheme for the reversed set "
                  << vinc::format_pattern_set(scheme.patterns) << "\n";
    return 0;
}

int run_enumerate(const std::string& source, int n_max, const CommonOptions& opts,
                  bool by_inversions) {
    vinc::Scheme scheme;
    if (int status = obtain_scheme(source, opts, !by_inversions, scheme)) return status;
    vinc::Evaluator evaluator(std::move(scheme));

    if (by_inversions) {
        ordered_json rows = ordered_json::array();
        for (int n = 0; n <= n_max; ++n) {
            const vinc::QPolynomial row = evaluator.count_by_inversions(n);
            if (opts.json) {
                ordered_json cells = ordered_json::array();
                for (const vinc::BigInt& c : row.coeffs) cells.push_back(c.str());
                rows.push_back(std::move(cells));
            } else {
                for (size_t i = 0; i < row.coeffs.size(); ++i)
                    std::cout << (i ? " " : "") << row.coeffs[i];
                std::cout << "\n";
            }
        }
        if (opts.json) std::cout << rows.dump(2) << "\n";
        return 0;
    }

    std::vector<vinc::BigInt> values = evaluator.sequence(n_max);
    if (opts.json) {
        ordered_json doc = ordered_json::array();
        for (const vinc::BigInt& v : values) doc.push_back(v.str());
        std::cout << doc.dump(2) << "\n";
    } else {
        for (const vinc::BigInt& v : values) std::cout << v << "\n";
    }
    return 0;
}

int run_oracle_check(const std::string& source, int n_max, int oracle_limit,
                     const CommonOptions& opts) {
    if (n_max > oracle_limit)
        throw std::invalid_argument("n exceeds the oracle limit; raise --oracle-limit");
    vinc::Scheme scheme;
    if (int status = obtain_scheme(source, opts, true, scheme)) return status;
    vinc::Evaluator evaluator(scheme);

    ordered_json doc;
    if (opts.json) {
        doc["patterns"] = ordered_json::array();
        for (const auto& p : scheme.patterns) doc["patterns"].push_back(p.str());
        doc["n_max"] = n_max;
        doc["values"] = ordered_json::array();
    }
    for (int n = 1; n <= n_max; ++n) {
        vinc::BigInt from_scheme = evaluator.count(n);
        long long from_brute = vinc::brute_count(n, scheme.patterns, oracle_limit);
        if (from_scheme != vinc::BigInt(from_brute)) {
            if (opts.json) {
                doc["ok"] = false;
                doc["first_divergence"] = n;
                doc["scheme_value"] = from_scheme.str();
                doc["brute_value"] = std::to_string(from_brute);
                std::cout << doc.dump(2) << "\n";
            } else {
                std::cout << "n=" << n << ": scheme " << from_scheme << ", brute force "
                          << from_brute << ": mismatch\n";
            }
            return kExitMismatch;
        }
        if (opts.json) {
            doc["values"].push_back(from_scheme.str());
        } else {
            std::cout << "n=" << n << ": " << from_scheme << " ok\n";
        }
    }
    if (opts.json) {
        doc["ok"] = true;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "all " << n_max << " values match brute force\n";
    }
    return 0;
}

enum class ShapeKind { Length, BlockType, SetType };

struct SurveyShape {
    ShapeKind kind;
    int length = 0;
    std::vector<int> parts;
};

std::vector<int> parse_int_list(const std::string& inner) {
    std::vector<int> parts;
    std::istringstream in(inner);
    std::string piece;
    while (std::getline(in, piece, ',')) {
        size_t pos = 0;
        int value = std::stoi(piece, &pos);
        while (pos < piece.size() && std::isspace(static_cast<unsigned char>(piece[pos])))
            ++pos;
        if (pos != piece.size()) throw std::invalid_argument("bad list entry: " + piece);
        parts.push_back(value);
    }
    if (parts.empty()) throw std::invalid_argument("empty list");
    return parts;
}

SurveyShape parse_shape(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw std::invalid_argument("empty survey shape");
    try {
        if (s.front() == '(' && s.back() == ')')
            return {ShapeKind::BlockType, 0, parse_int_list(s.substr(1, s.size() - 2))};
        if (s.front() == '{' && s.back() == '}')
            return {ShapeKind::SetType, 0, parse_int_list(s.substr(1, s.size() - 2))};
        size_t pos = 0;
        int length = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("");
        return {ShapeKind::Length, length, {}};
    } catch (const std::exception&) {
        throw std::invalid_argument(
            "survey shape must be a length like 3, a block type like (2,2), or a set "
            "type like {2,3}");
    }
}

bool within_budget(const SurveyShape& shape) {
    switch (shape.kind) {
        case ShapeKind::Length:
            return shape.length <= 4;
        case ShapeKind::BlockType: {
            int total = 0;
            for (int b : shape.parts) total += b;
            return total <= 4;
        }
        case ShapeKind::SetType: {
            if (shape.parts.size() == 1) return shape.parts.front() <= 4;
            if (shape.parts.size() > 2) return false;
            for (int len : shape.parts)
                if (len > 3) return false;
            return true;
        }
    }
    return false;
}

int run_survey(const std::string& shape_text, const CommonOptions& opts, bool slow) {
    SurveyShape shape = parse_shape(shape_text);
    if (!slow && !within_budget(shape))
        throw std::invalid_argument("budget exceeded; pass --slow for large surveys");

    vinc::SurveyReport report;
    switch (shape.kind) {
        case ShapeKind::Length:
            report = vinc::survey_patterns_of_length(shape.length, opts.params);
            break;
        case ShapeKind::BlockType:
            report = vinc::survey_block_type(shape.parts, opts.params);
            break;
        case ShapeKind::SetType:
            report = vinc::survey_set_type(shape.parts, opts.params);
            break;
    }

    if (opts.json) {
        ordered_json doc;
        doc["descriptor"] = report.class_descriptor;
        doc["total"] = report.classes_total;
        doc["successful"] = report.classes_successful;
        doc["classes"] = ordered_json::array();
        for (const vinc::SurveyClass& c : report.classes) {
            ordered_json entry;
            entry["representative"] = ordered_json::array();
            for (const auto& p : c.representative) entry["representative"].push_back(p.str());
            entry["members"] = c.members;
            entry["scheme"] = c.success;
            if (c.success) {
                entry["depth"] = c.depth;
                entry["via_reverse"] = c.used_reverse;
            }
            doc["classes"].push_back(std::move(entry));
        }
        std::cout << doc.dump(2) << "\n";
        return 0;
    }

    std::cout << report.class_descriptor << ": " << report.classes_total << " classes, "
              << report.classes_successful << " with schemes (depth "
              << opts.params.max_depth << ", max gap norm " << opts.params.max_gap_norm
              << ")\n";
    size_t width = 0;
    for (const vinc::SurveyClass& c : report.classes)
        width = std::max(width, vinc::format_pattern_set(c.representative).size());
    for (const vinc::SurveyClass& c : report.classes) {
        std::string rep = vinc::format_pattern_set(c.representative);
        std::cout << "  " << rep << std::string(width - rep.size(), ' ') << "  members "
                  << c.members << "  ";
        if (c.success) {
            std::cout << "depth " << c.depth;
            if (c.used_reverse) std::cout << " (via reverse)";
        } else {
            std::cout << "no scheme";
        }
        std::cout << "\n";
    }
    return 0;
}

int run_classify(const std::string& patterns_text, int n_max, const CommonOptions& opts) {
    auto patterns = parse_patterns_arg(patterns_text);
    vinc::WilfClassReport report = vinc::classify(patterns, n_max, opts.params);

    if (opts.json) {
        ordered_json doc;
        doc["n_max"] = report.n_max;
        doc["groups"] = ordered_json::array();
        for (const auto& group : report.groups) {
            ordered_json entry;
            entry["patterns"] = ordered_json::array();
            for (const auto& p : group.patterns) entry["patterns"].push_back(p.str());
            entry["values"] = ordered_json::array();
            for (const vinc::BigInt& v : group.values) entry["values"].push_back(v.str());
            doc["groups"].push_back(std::move(entry));
        }
        doc["unclassifiable"] = ordered_json::array();
        for (const auto& p : report.unclassifiable) doc["unclassifiable"].push_back(p.str());
        doc["witnesses"] = report.witnesses;
        std::cout << doc.dump(2) << "\n";
        return 0;
    }

    for (size_t i = 0; i < report.groups.size(); ++i) {
        const auto& group = report.groups[i];
        std::cout << "group " << i + 1 << ": "
                  << vinc::format_pattern_set(group.patterns) << "\n  ";
        for (size_t n = 0; n < group.values.size(); ++n)
            std::cout << (n ? ", " : "") << group.values[n];
        std::cout << "\n";
    }
    for (const auto& p : report.unclassifiable) std::cout << "no scheme: " << p.str() << "\n";
    for (size_t i = 0; i < report.groups.size(); ++i)
        for (size_t j = i + 1; j < report.groups.size(); ++j)
            std::cout << "groups " << i + 1 << " and " << j + 1 << " first diverge at n="
                      << report.witnesses[i][j] << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Enumeration schemes for vincular pattern avoidance"};
    app.require_subcommand(1);
    int status = 0;

    CommonOptions discover_opts;
    std::string discover_patterns;
    std::string discover_out;
    bool discover_reverse = false;
    auto* discover = app.add_subcommand("discover", "Search for an enumeration scheme");
    discover->add_option("patterns", discover_patterns, "Comma-separated vincular patterns")
        ->required();
    add_discovery_flags(discover, discover_opts);
    discover->add_flag("--try-reverse", discover_reverse,
                       "Fall back to the reversed pattern set");
    discover->add_option("--out", discover_out, "Write the scheme as JSON to this path");
    discover->add_flag("--json", discover_opts.json, "Emit JSON on standard output");
    discover->callback([&] {
        status = run_discover(discover_patterns, discover_opts, discover_reverse,
                              discover_out);
    });

    CommonOptions enum_opts;
    std::string enum_spec;
    int enum_n = 0;
    bool enum_inversions = false;
    auto* enumerate = app.add_subcommand("enumerate", "Count avoiders up to a length");
    enumerate->add_option("patterns", enum_spec, "Pattern set, or path to a scheme file")
        ->required();
    enumerate->add_option("n", enum_n, "Largest length to count")
        ->required()
        ->check(kAtLeastOne);
    add_discovery_flags(enumerate, enum_opts);
    enumerate->add_flag("--by-inversions", enum_inversions,
                        "Refine each count by inversion number");
    enumerate->add_flag("--json", enum_opts.json, "Emit JSON on standard output");
    enumerate->callback(
        [&] { status = run_enumerate(enum_spec, enum_n, enum_opts, enum_inversions); });

    CommonOptions oracle_opts;
    std::string oracle_spec;
    int oracle_n = 8;
    int oracle_limit = vinc::kDefaultOracleLimit;
    auto* oracle = app.add_subcommand("oracle-check",
                                      "Compare scheme counts against brute force");
    oracle->add_option("patterns", oracle_spec, "Pattern set, or path to a scheme file")
        ->required();
    oracle->add_option("--n", oracle_n, "Largest length to compare")
        ->check(kAtLeastOne);
    oracle->add_option("--oracle-limit", oracle_limit,
                       "Upper bound on brute-force length");
    add_discovery_flags(oracle, oracle_opts);
    oracle->add_flag("--json", oracle_opts.json, "Emit JSON on standard output");
    oracle->callback(
        [&] { status = run_oracle_check(oracle_spec, oracle_n, oracle_limit, oracle_opts); });

    CommonOptions survey_opts;
    std::string survey_shape;
    bool survey_slow = false;
    auto* survey = app.add_subcommand("survey",
                                      "Run discovery across symmetry classes of patterns");
    survey->add_option("shape", survey_shape,
                       "Pattern length (3), block type ((2,2)), or set type ({2,3})")
        ->required();
    add_discovery_flags(survey, survey_opts);
    survey->add_flag("--slow", survey_slow, "Allow surveys beyond the default budget");
    survey->add_flag("--json", survey_opts.json, "Emit JSON on standard output");
    survey->callback([&] { status = run_survey(survey_shape, survey_opts, survey_slow); });

    CommonOptions classify_opts;
    std::string classify_patterns;
    int classify_n = 15;
    auto* classify = app.add_subcommand("classify",
                                        "Group patterns by their counting sequences");
    classify->add_option("patterns", classify_patterns, "Comma-separated vincular patterns")
        ->required();
    classify->add_option("--n", classify_n, "Length up to which sequences are compared")
        ->check(kAtLeastOne);
    add_discovery_flags(classify, classify_opts);
    classify->add_flag("--json", classify_opts.json, "Emit JSON on standard output");
    classify->callback(
        [&] { status = run_classify(classify_patterns, classify_n, classify_opts); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return status;
}
