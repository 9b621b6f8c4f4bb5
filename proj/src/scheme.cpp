#include "vinc/scheme.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "vinc/scenario.hpp"

namespace vinc {

namespace {

std::string display(const Permutation& p) {
    return p.size() == 0 ? std::string("<empty>") : p.str();
}

bool basis_order(const GapVector& a, const GapVector& b) {
    if (a.norm() != b.norm()) return a.norm() < b.norm();
    return a.comps < b.comps;
}

void canonicalize_basis(GapBasis& basis) {
    std::sort(basis.vectors.begin(), basis.vectors.end(), basis_order);
    basis.vectors.erase(std::unique(basis.vectors.begin(), basis.vectors.end()),
                        basis.vectors.end());
}

}  // namespace

int Scheme::depth() const {
    int d = 0;
    for (const auto& [p, triple] : triples) d = std::max(d, p.size());
    return d;
}

const SchemeTriple& Scheme::at(const Permutation& p) const {
    auto it = triples.find(p);
    if (it == triples.end())
        throw std::out_of_range("no scheme triple for prefix " + display(p));
    return it->second;
}

DiscoveryResult discover(const std::vector<VincularPattern>& patterns,
                         const DiscoveryParams& params) {
    if (params.max_depth < 0 || params.max_gap_norm < 0)
        throw std::invalid_argument("discovery bounds must be non-negative");

    DeletionSearch search(patterns, params.max_gap_norm);
    Scheme scheme;
    scheme.patterns = normalize_patterns(patterns);
    scheme.max_gap_norm = params.max_gap_norm;

    std::set<Permutation, LenLexLess> pending;
    std::set<Permutation, LenLexLess> blocked;
    pending.insert(Permutation{});
    while (!pending.empty()) {
        Permutation p = *pending.begin();
        pending.erase(pending.begin());
        if (scheme.has(p) || blocked.count(p)) continue;

        GapBasis basis = search.basis(p);
        if (basis.contains_zero()) {
            scheme.triples.emplace(p, SchemeTriple{p, std::move(basis), {}});
            continue;
        }
        if (auto rd = search.find_rd_set(p)) {
            Permutation image = delete_positions(p, *rd);
            scheme.triples.emplace(p, SchemeTriple{p, std::move(basis), std::move(*rd)});
            if (!scheme.has(image)) pending.insert(image);
            continue;
        }
        if (p.size() < params.max_depth) {
            scheme.triples.emplace(p, SchemeTriple{p, std::move(basis), {}});
            for (const Permutation& c : children(p))
                if (!scheme.has(c)) pending.insert(c);
        } else {
            blocked.insert(p);
        }
    }
    if (!blocked.empty()) return NoScheme{{blocked.begin(), blocked.end()}};
    return scheme;
}

FallbackOutcome discover_with_reverse(const std::vector<VincularPattern>& patterns,
                                      const DiscoveryParams& params) {
    DiscoveryResult direct = discover(patterns, params);
    if (std::holds_alternative<Scheme>(direct)) return {std::move(direct), false};
    DiscoveryResult reversed = discover(reverse_patterns(patterns), params);
    if (std::holds_alternative<Scheme>(reversed)) return {std::move(reversed), true};
    return {std::move(direct), false};
}

ValidationReport validate(const Scheme& scheme) {
    ValidationReport report;
    auto note = [&](std::string msg) { report.problems.push_back(std::move(msg)); };

    if (!scheme.has(Permutation{})) note("missing empty-prefix triple");

    for (const auto& [p, triple] : scheme.triples) {
        if (triple.prefix != p) {
            note("triple keyed " + display(p) + " stores prefix " +
                 display(triple.prefix));
            continue;
        }
        for (const GapVector& v : triple.gap_basis.vectors)
            if (v.size() != p.size() + 1)
                note("gap vector " + v.str() + " at prefix " + display(p) +
                     " has the wrong length");

        const std::vector<int>& rd = triple.rd;
        bool rd_shape = std::is_sorted(rd.begin(), rd.end()) &&
                        std::adjacent_find(rd.begin(), rd.end()) == rd.end() &&
                        (rd.empty() || (rd.front() >= 1 && rd.back() <= p.size()));
        if (!rd_shape) {
            note("deletion set at prefix " + display(p) +
                 " is not a set of prefix positions");
            continue;
        }
        if (!rd.empty()) {
            Permutation image = delete_positions(p, rd);
            if (!scheme.has(image))
                note("missing deletion image " + display(image) + " for prefix " +
                     display(p));
        } else if (!triple.gap_basis.contains_zero()) {
            for (const Permutation& c : children(p))
                if (!scheme.has(c))
                    note("missing child " + display(c) + " of " + display(p));
        }
    }
    return report;
}

namespace {

enum class GuaranteeShape { consecutive, tail };

GuaranteeShape classify_for_guarantee(const VincularPattern& pat) {
    std::vector<int> run;
    for (int j = 1; j < pat.size(); ++j) run.push_back(j);
    if (pat.adjacencies() == run) return GuaranteeShape::consecutive;
    if (!run.empty()) {
        run.pop_back();
        if (pat.adjacencies() == run) return GuaranteeShape::tail;
    }
    throw std::invalid_argument(
        "guaranteed construction needs fully adjacent patterns, or fully "
        "adjacent except for a free final letter: " + pat.str());
}

bool front_iso(const Permutation& p, const Permutation& sigma, int m) {
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
            if ((p.letter(i) < p.letter(j)) != (sigma.letter(i) < sigma.letter(j)))
                return false;
    return true;
}

// For a prefix whose front matches the adjacent part of a tail pattern, the
// slot of free values that would complete a copy.
int completing_slot(const Permutation& p, const VincularPattern& pat) {
    int t = pat.size();
    int below = 0;
    for (int j = 1; j < t; ++j)
        if (pat.sigma().letter(j) < pat.sigma().letter(t)) ++below;
    std::vector<int> head(p.letters().begin(), p.letters().begin() + (t - 1));
    std::sort(head.begin(), head.end());
    int lo = below == 0 ? 0 : head[below - 1];
    int slot = 1;
    for (int v : p.letters())
        if (v <= lo) ++slot;
    return slot;
}

}  // namespace

Scheme guaranteed_scheme(const std::vector<VincularPattern>& patterns, bool minimize) {
    if (patterns.empty())
        throw std::invalid_argument("guaranteed construction needs at least one pattern");
    std::vector<VincularPattern> pats = normalize_patterns(patterns);
    std::vector<GuaranteeShape> shapes;
    int depth = 0;
    for (const VincularPattern& pat : pats) {
        GuaranteeShape shape = classify_for_guarantee(pat);
        shapes.push_back(shape);
        int resolved = shape == GuaranteeShape::consecutive ? pat.size() : pat.size() - 1;
        depth = std::max(depth, resolved);
    }

    Scheme scheme;
    scheme.patterns = pats;
    scheme.max_gap_norm = 1;

    std::vector<Permutation> level = {Permutation{}};
    for (int len = 0; len <= depth; ++len) {
        for (const Permutation& p : level) {
            SchemeTriple triple{p, GapBasis{{}, 1}, {}};
            bool dead = false;
            bool all_grant = p.size() >= 1;
            for (size_t i = 0; i < pats.size(); ++i) {
                const VincularPattern& pat = pats[i];
                int t = pat.size();
                if (contains(p, pat)) {
                    dead = true;
                    triple.gap_basis.vectors.emplace_back(
                        std::vector<int>(p.size() + 1, 0));
                    continue;
                }
                if (shapes[i] == GuaranteeShape::consecutive) {
                    if (front_iso(p, pat.sigma(), std::min(t, p.size())))
                        all_grant = false;
                } else if (front_iso(p, pat.sigma(), std::min(t - 1, p.size()))) {
                    if (p.size() >= t - 1) {
                        std::vector<int> e(p.size() + 1, 0);
                        e[completing_slot(p, pat) - 1] = 1;
                        triple.gap_basis.vectors.emplace_back(std::move(e));
                    } else {
                        all_grant = false;
                    }
                }
            }
            canonicalize_basis(triple.gap_basis);
            if (minimize) {
                std::vector<GapVector> kept;
                for (const GapVector& v : triple.gap_basis.vectors) {
                    bool minimal = true;
                    for (const GapVector& u : triple.gap_basis.vectors)
                        if (u != v && v.dominates(u)) minimal = false;
                    if (minimal) kept.push_back(v);
                }
                triple.gap_basis.vectors = std::move(kept);
            }
            if (!dead && all_grant) triple.rd = {1};
            scheme.triples.emplace(p, std::move(triple));
        }
        if (len == depth) break;
        std::vector<Permutation> next;
        for (const Permutation& p : level)
            for (Permutation& c : children(p)) next.push_back(std::move(c));
        level = std::move(next);
    }
    return scheme;
}

Scheme complement_scheme(const Scheme& scheme) {
    Scheme out;
    out.patterns = normalize_patterns(complement_patterns(scheme.patterns));
    out.max_gap_norm = scheme.max_gap_norm;
    for (const auto& [p, triple] : scheme.triples) {
        SchemeTriple t;
        t.prefix = p.complemented();
        t.rd = triple.rd;
        t.gap_basis.max_norm = triple.gap_basis.max_norm;
        for (const GapVector& v : triple.gap_basis.vectors)
            t.gap_basis.vectors.emplace_back(
                std::vector<int>(v.comps.rbegin(), v.comps.rend()));
        canonicalize_basis(t.gap_basis);
        Permutation key = t.prefix;
        out.triples.emplace(std::move(key), std::move(t));
    }
    return out;
}

std::string serialize(const Scheme& scheme) {
    nlohmann::ordered_json doc;
    auto pats = nlohmann::ordered_json::array();
    for (const VincularPattern& pat : scheme.patterns) pats.push_back(pat.str());
    doc["patterns"] = std::move(pats);
    doc["max_gap_norm"] = scheme.max_gap_norm;
    auto triples = nlohmann::ordered_json::array();
    for (const auto& [p, triple] : scheme.triples) {
        nlohmann::ordered_json t;
        t["prefix"] = p.letters();
        auto basis = nlohmann::ordered_json::array();
        for (const GapVector& v : triple.gap_basis.vectors) basis.push_back(v.comps);
        t["gap_basis"] = std::move(basis);
        t["rd"] = triple.rd;
        triples.push_back(std::move(t));
    }
    doc["triples"] = std::move(triples);
    return doc.dump(2) + "\n";
}

Scheme deserialize(const std::string& text) {
    auto fail = [](const std::string& msg) -> void {
        throw std::invalid_argument("scheme document: " + msg);
    };

    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("scheme document: ") + e.what());
    }
    if (!doc.is_object()) fail("top level must be an object");
    for (const char* key : {"patterns", "max_gap_norm", "triples"})
        if (!doc.contains(key)) fail(std::string("missing key \"") + key + "\"");

    Scheme scheme;
    if (!doc["patterns"].is_array()) fail("\"patterns\" must be an array");
    std::vector<VincularPattern> pats;
    for (const auto& entry : doc["patterns"]) {
        if (!entry.is_string()) fail("pattern entries must be strings");
        try {
            pats.push_back(parse_pattern(entry.get<std::string>()));
        } catch (const std::invalid_argument& e) {
            fail(e.what());
        }
    }
    scheme.patterns = normalize_patterns(std::move(pats));

    if (!doc["max_gap_norm"].is_number_integer() || doc["max_gap_norm"].get<int>() < 0)
        fail("\"max_gap_norm\" must be a non-negative integer");
    scheme.max_gap_norm = doc["max_gap_norm"].get<int>();

    if (!doc["triples"].is_array()) fail("\"triples\" must be an array");
    for (const auto& entry : doc["triples"]) {
        if (!entry.is_object()) fail("triple entries must be objects");
        for (const char* key : {"prefix", "gap_basis", "rd"})
            if (!entry.contains(key))
                fail(std::string("triple missing key \"") + key + "\"");

        if (!entry["prefix"].is_array()) fail("\"prefix\" must be an array");
        SchemeTriple triple;
        try {
            triple.prefix = Permutation(entry["prefix"].get<std::vector<int>>());
        } catch (const std::exception& e) {
            fail(std::string("bad prefix: ") + e.what());
        }
        int k = triple.prefix.size();

        if (!entry["gap_basis"].is_array()) fail("\"gap_basis\" must be an array");
        triple.gap_basis.max_norm = scheme.max_gap_norm;
        for (const auto& vec : entry["gap_basis"]) {
            if (!vec.is_array()) fail("gap vectors must be arrays");
            GapVector g;
            try {
                g = GapVector(vec.get<std::vector<int>>());
            } catch (const std::exception& e) {
                fail(std::string("bad gap vector: ") + e.what());
            }
            if (g.size() != k + 1)
                fail("gap vector " + g.str() + " has the wrong length for prefix " +
                     display(triple.prefix));
            for (int c : g.comps)
                if (c < 0) fail("gap vector entries must be non-negative");
            if (g.norm() > scheme.max_gap_norm)
                fail("gap vector " + g.str() + " exceeds max_gap_norm");
            triple.gap_basis.vectors.push_back(std::move(g));
        }

        if (!entry["rd"].is_array()) fail("\"rd\" must be an array");
        try {
            triple.rd = entry["rd"].get<std::vector<int>>();
        } catch (const std::exception& e) {
            fail(std::string("bad rd set: ") + e.what());
        }
        std::sort(triple.rd.begin(), triple.rd.end());
        if (std::adjacent_find(triple.rd.begin(), triple.rd.end()) != triple.rd.end())
            fail("rd set repeats a position");
        if (!triple.rd.empty() && (triple.rd.front() < 1 || triple.rd.back() > k))
            fail("rd set leaves the prefix positions");

        if (scheme.has(triple.prefix))
            fail("duplicate prefix " + display(triple.prefix));
        Permutation key = triple.prefix;
        scheme.triples.emplace(std::move(key), std::move(triple));
    }

    ValidationReport report = validate(scheme);
    if (!report.ok()) {
        std::string joined;
        for (const std::string& p : report.problems) {
            if (!joined.empty()) joined += "; ";
            joined += p;
        }
        fail(joined);
    }
    return scheme;
}

}  // namespace vinc
