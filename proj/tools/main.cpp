#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kromatic/classical.hpp"
#include "kromatic/engines.hpp"
#include "kromatic/ptableaux.hpp"
#include "kromatic/serialize.hpp"
#include "kromatic/table1.hpp"

namespace {

using namespace kromatic;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

Partition parse_partition_arg(const std::string& s) {
    if (s.empty() || s == "[]") return Partition{};
    if (s[0] == '[') return Partition(json::parse(s).get<std::vector<int>>());
    std::vector<int> parts;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t next = s.find(',', pos);
        if (next == std::string::npos) next = s.size();
        parts.push_back(std::stoi(s.substr(pos, next - pos)));
        pos = next + 1;
    }
    return Partition(parts);
}

void emit(const json& out, bool pretty_json_off, const std::string& pretty_text, bool pretty) {
    if (pretty)
        std::cout << pretty_text;
    else
        std::cout << out.dump(pretty_json_off ? -1 : 2) << "\n";
}

std::string pretty_terms_text(const json& terms) {
    std::string out;
    for (const auto& t : terms) {
        Partition la(t.at("partition").get<std::vector<int>>());
        out += "  " + la.to_string() + ": " + t.at("coeff").get<std::string>() + "\n";
    }
    if (terms.empty()) out += "  (empty)\n";
    return out;
}

// family generator usable by expandFiltered
std::function<Series(const Partition&, int)> family_gen(BasisId b) {
    return [b](const Partition& la, int cap) { return family_series(b, la, cap); };
}

Series graph_series(const WeightedGraph& wg, const std::string& engine, int cap) {
    if (engine == "direct") return kromatic_direct(wg, cap);
    Expansion ex = engine == "delcon" ? kromatic_delcon(wg) : kromatic_covers_truncated(wg, cap);
    return realize_expansion(ex, cap);
}

int cmd_expand(const std::string& gspec, const std::string& basis, int degree,
               const std::string& engine, bool pretty, bool compact) {
    WeightedGraph wg = parse_graph_spec(gspec);
    int cap = degree >= 0 ? degree : wg.total_weight() + 3;
    auto bid = basis_from_string(basis);
    if (!bid) {
        std::cerr << "unknown basis: " << basis << "\n";
        return kExitUsage;
    }
    json expansion;
    expansion["basis"] = basis_to_string(*bid);
    std::string engine_used = engine == "auto" ? "covers" : engine;

    if (*bid == BasisId::dualGrothS) {
        std::cerr << "the graph series is truncated, and the dual family has "
                     "unbounded index for any fixed degree; expansion undefined\n";
        return kExitUsage;
    }
    if (*bid == BasisId::kMonomial) {
        if (engine_used == "direct") {
            expansion["terms"] = terms_to_json(
                expand_filtered(kromatic_direct(wg, cap), family_gen(BasisId::kMonomial)));
            expansion["finite"] = false;
        } else {
            Expansion ex = engine_used == "delcon" ? kromatic_delcon(wg) : kromatic_covers(wg);
            if (degree >= 0) {
                for (auto it = ex.begin(); it != ex.end();)
                    it = it->first.size() > cap ? ex.erase(it) : std::next(it);
                expansion["finite"] = false;
            } else {
                expansion["finite"] = true;
            }
            expansion["terms"] = terms_to_json(ex);
        }
    } else {
        Series f = graph_series(wg, engine_used, cap);
        if (is_classical(*bid)) {
            expansion["terms"] = terms_to_json(convert_classical(f, *bid));
        } else if (*bid == BasisId::grothS) {
            Coeffs coeffs;
            for (int d = 0; d <= cap; ++d)
                for (const Partition& la : partitions_of(d))
                    if (Rat c = groth_coefficient(f, la); c != 0) coeffs[la] = c;
            expansion["terms"] = terms_to_json(coeffs);
        } else {
            expansion["terms"] = terms_to_json(expand_filtered(f, family_gen(*bid)));
        }
        expansion["finite"] = false;
    }
    expansion["degreeCap"] = cap;

    json out;
    out["graph"] = graph_to_json(wg);
    out["engine"] = engine_used;
    out["expansion"] = expansion;
    std::string text = "expansion of " + gspec + " in basis " + basis_to_string(*bid) +
                       " (cap " + std::to_string(cap) + ", engine " + engine_used + ")\n" +
                       pretty_terms_text(expansion["terms"]);
    emit(out, compact, text, pretty);
    return 0;
}

int cmd_table1(const std::string& golden_path, bool pretty, bool compact) {
    json golden = load_json_file(golden_path.empty() ? default_golden_path() : golden_path);
    Table1Result res = check_table1(golden);
    std::string text;
    for (const auto& row : res.report["rows"]) {
        text += row["graph"].get<std::string>();
        text += row["pass"].get<bool>() ? ": pass\n" : ": FAIL\n";
        for (const char* field : {"mbarDiff", "pDiff"})
            for (const auto& d : row[field]) {
                Partition la(d.at("partition").get<std::vector<int>>());
                text += std::string("  ") + field + " " + la.to_string() + ": expected " +
                        d["expected"].get<std::string>() + ", got " +
                        d["actual"].get<std::string>() + "\n";
            }
        if (!row["enginesMatch"].get<bool>()) text += "  cover and recursive engines disagree\n";
    }
    text += res.pass ? "all rows pass\n" : "MISMATCH\n";
    emit(res.report, compact, text, pretty);
    return res.pass ? 0 : kExitFail;
}

int cmd_compare(const std::string& spec_a, const std::string& spec_b, int degree, bool pretty,
                bool compact) {
    WeightedGraph a = parse_graph_spec(spec_a);
    WeightedGraph b = parse_graph_spec(spec_b);
    int cap = degree >= 0 ? degree : std::max(a.total_weight(), b.total_weight()) + 3;

    Series xa = chromatic_sym(a, a.total_weight());
    Series xb = chromatic_sym(b, b.total_weight());
    bool chrom_eq = a.total_weight() == b.total_weight() && xa.terms() == xb.terms();

    Expansion ea = kromatic_covers_truncated(a, cap);
    Expansion eb = kromatic_covers_truncated(b, cap);
    bool krom_eq = ea == eb;

    json out;
    out["left"] = graph_to_json(a);
    out["right"] = graph_to_json(b);
    out["degreeCap"] = cap;
    out["chromaticEqual"] = chrom_eq;
    out["kromaticEqualUpToD"] = krom_eq;
    out["witness"] = nullptr;
    if (!krom_eq) {
        std::map<Partition, std::pair<Int, Int>, PartitionCanonicalLess> both;
        for (const auto& [la, c] : ea) both[la].first = c;
        for (const auto& [la, c] : eb) both[la].second = c;
        for (const auto& [la, cc] : both)
            if (cc.first != cc.second) {
                json w;
                w["partition"] = la.parts();
                w["left"] = cc.first.get_str();
                w["right"] = cc.second.get_str();
                out["witness"] = w;
                break;
            }
    }
    std::string text = "chromatic equal: " + std::string(chrom_eq ? "yes" : "no") +
                       "\nkromatic equal up to degree " + std::to_string(cap) + ": " +
                       (krom_eq ? "yes" : "no") + "\n";
    if (!out["witness"].is_null())
        text += "witness " + Partition(out["witness"]["partition"].get<std::vector<int>>()).to_string() +
                ": " + out["witness"]["left"].get<std::string>() + " vs " +
                out["witness"]["right"].get<std::string>() + "\n";
    emit(out, compact, text, pretty);
    return 0;
}

int cmd_trees(int max_n, int degree, bool pretty, bool compact) {
    if (max_n < 1 || max_n > 9) {
        std::cerr << "tree search supports 1 <= max-n <= 9\n";
        return kExitUsage;
    }
    std::vector<Graph> classes = trees_up_to(max_n);
    std::map<std::string, std::vector<size_t>> groups;
    for (size_t i = 0; i < classes.size(); ++i) {
        WeightedGraph wg(classes[i]);
        std::string key;
        if (degree >= 0) {
            key = json(terms_to_json(kromatic_covers_truncated(wg, degree))).dump();
        } else {
            json prof = json::array();
            for (const auto& [hist, c] : stable_profile(wg))
                prof.push_back(json::array({hist, c}));
            key = prof.dump();
        }
        groups[key].push_back(i);
    }
    json collisions = json::array();
    for (const auto& [key, members] : groups)
        if (members.size() > 1) {
            json grp = json::array();
            for (size_t i : members) grp.push_back(graph_to_json(WeightedGraph(classes[i])));
            collisions.push_back(grp);
        }
    json out;
    out["maxN"] = max_n;
    out["treeClasses"] = classes.size();
    out["comparison"] = degree >= 0 ? "truncated" : "full";
    out["collisionGroups"] = collisions;
    std::string text = std::to_string(classes.size()) + " tree classes up to " +
                       std::to_string(max_n) + " vertices, " +
                       std::to_string(collisions.size()) + " collision groups\n";
    emit(out, compact, text, pretty);
    return collisions.empty() ? 0 : kExitFail;
}

int cmd_positivity(const std::string& gspec, const std::string& family, int degree, bool pretty,
                   bool compact) {
    WeightedGraph wg = parse_graph_spec(gspec);
    int cap = degree >= 0 ? degree : wg.total_weight() + 3;
    auto bid = basis_from_string(family);
    bool supported = bid && (*bid == BasisId::grothS || *bid == BasisId::kElemTableau ||
                             *bid == BasisId::kElemGraph || *bid == BasisId::kPower);
    if (!supported) {
        std::cerr << "positivity families: gs, ket, keg, kp\n";
        return kExitUsage;
    }
    Series f = graph_series(wg, "covers", cap);
    Coeffs coeffs;
    if (*bid == BasisId::grothS) {
        for (int d = 0; d <= cap; ++d)
            for (const Partition& la : partitions_of(d))
                if (Rat c = groth_coefficient(f, la); c != 0) coeffs[la] = c;
    } else {
        coeffs = expand_filtered(f, family_gen(*bid));
    }
    json out;
    out["graph"] = graph_to_json(wg);
    out["family"] = basis_to_string(*bid);
    out["degreeCap"] = cap;
    out["coefficients"] = terms_to_json(coeffs);
    const std::pair<const Partition, Rat>* worst = nullptr;
    for (const auto& entry : coeffs)
        if (entry.second < 0 && (!worst || entry.second < worst->second)) worst = &entry;
    if (worst) {
        json w;
        w["partition"] = worst->first.parts();
        w["coeff"] = rat_to_string(worst->second);
        out["mostNegative"] = w;
    } else {
        out["mostNegative"] = nullptr;
    }
    out["nonnegative"] = worst == nullptr;
    std::string text = "expansion of " + gspec + " over family " + basis_to_string(*bid) +
                       " up to degree " + std::to_string(cap) + "\n" +
                       pretty_terms_text(out["coefficients"]);
    text += worst ? "most negative: " + worst->first.to_string() + ": " +
                        rat_to_string(worst->second) + "\n"
                  : "all coefficients nonnegative\n";
    emit(out, compact, text, pretty);
    return 0;
}

json cell_to_json(const Cell& c) {
    json out;
    out["type"] = c.in_poset ? "poset" : "int";
    out["value"] = c.value;
    return out;
}

std::string cell_text(const Cell& c) {
    return c.in_poset ? "e" + std::to_string(c.value) : std::to_string(c.value);
}

int cmd_tableaux(const std::string& pspec, const std::string& shape_arg, bool count_only,
                 bool pretty, bool compact) {
    Poset p = parse_poset_spec(pspec);
    Partition shape = parse_partition_arg(shape_arg);
    std::vector<PTableau> tabs = enumerate_p_tableaux(p, shape);
    json out;
    out["poset"] = poset_to_json(p);
    out["shape"] = shape.parts();
    out["count"] = tabs.size();
    std::string text = std::to_string(tabs.size()) + " tableaux of shape " + shape.to_string() + "\n";
    if (!count_only) {
        json list = json::array();
        for (const PTableau& t : tabs) {
            json jt;
            jt["inner"] = t.inner.parts();
            json rows = json::array();
            for (const auto& row : t.rows) {
                json r = json::array();
                for (const Cell& c : row) r.push_back(cell_to_json(c));
                rows.push_back(r);
            }
            jt["rows"] = rows;
            list.push_back(jt);
            for (const auto& row : t.rows) {
                text += " ";
                for (const Cell& c : row) text += " " + cell_text(c);
                text += "\n";
            }
            text += "\n";
        }
        out["tableaux"] = list;
    }
    emit(out, compact, text, pretty);
    return 0;
}

int cmd_involution(const std::string& pspec, const std::string& shape_arg, bool pretty,
                   bool compact) {
    Poset p = parse_poset_spec(pspec);
    Partition shape = parse_partition_arg(shape_arg);
    TheoremCheck res = verify_theorem(p, shape);
    bool three_one_free = is_31_free(p);
    // the signed sum always matches the series coefficient; the tableau count
    // joins them exactly on (3+1)-free posets
    bool ok = Rat(res.signed_sum) == res.groth_coeff &&
              (!three_one_free || res.signed_sum == res.tableau_count);
    json out;
    out["poset"] = poset_to_json(p);
    out["shape"] = shape.parts();
    out["signedSum"] = res.signed_sum.get_str();
    out["tableauCount"] = res.tableau_count.get_str();
    out["grothCoeff"] = rat_to_string(res.groth_coeff);
    out["threePlusOneFree"] = three_one_free;
    out["allEqual"] = res.all_equal;
    std::string text = "signed array sum: " + res.signed_sum.get_str() +
                       "\ntableau count:    " + res.tableau_count.get_str() +
                       "\nseries coeff:     " + rat_to_string(res.groth_coeff) + "\n" +
                       (res.all_equal ? "all equal\n" : "NOT all equal\n");
    emit(out, compact, text, pretty);
    return ok ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    if (const char* tc = std::getenv("KROMATIC_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(tc, &end, 10);
        if (end == tc || *end != '\0' || v < 1) {
            std::cerr << "KROMATIC_THREADS must be a positive integer\n";
            return kExitUsage;
        }
    }

    CLI::App app{"Kromatic symmetric function toolkit"};
    app.require_subcommand(1);
    bool pretty = false;
    bool compact = false;
    app.add_flag("--pretty", pretty, "human-readable output instead of JSON");
    app.add_flag("--compact", compact, "single-line JSON");

    std::string gspec, gspec2, basis = "km", engine = "auto", golden, pspec, shape_arg, family;
    int degree = -1, max_n = 7;
    bool count_only = false;

    CLI::App* expand = app.add_subcommand("expand", "expand a graph series in a basis");
    expand->add_option("graph", gspec, "graph spec: name, inline JSON, or @file")->required();
    expand->add_option("--basis", basis, "m|maug|e|h|p|s|gs|gsd|km|ket|keg|kp");
    expand->add_option("--degree", degree, "degree cap (default total weight + 3)");
    expand->add_option("--engine", engine, "auto|direct|covers|delcon")
        ->check(CLI::IsMember({"auto", "direct", "covers", "delcon"}));

    CLI::App* table1 = app.add_subcommand("table1", "recompute the five reference rows");
    table1->add_option("--golden", golden, "path to the golden file");

    CLI::App* compare = app.add_subcommand("compare", "compare two graphs");
    compare->add_option("left", gspec, "first graph spec")->required();
    compare->add_option("right", gspec2, "second graph spec")->required();
    compare->add_option("--degree", degree, "comparison degree cap");

    CLI::App* trees = app.add_subcommand("trees", "search tree classes for equal expansions");
    trees->add_option("--max-n", max_n, "largest tree size (<= 9)");
    trees->add_option("--degree", degree, "compare truncated at this degree instead of fully");

    CLI::App* positivity = app.add_subcommand("positivity", "coefficient sign report");
    positivity->add_option("graph", gspec, "graph spec")->required();
    positivity->add_option("--family", family, "gs|ket|keg|kp")->required();
    positivity->add_option("--degree", degree, "degree cap");

    CLI::App* tableaux = app.add_subcommand("tableaux", "enumerate poset tableaux");
    tableaux->add_option("--poset", pspec, "poset spec: chain:n, sums like 2+1, JSON, @file")
        ->required();
    tableaux->add_option("--shape", shape_arg, "partition, e.g. [2,1] or 2,1")->required();
    tableaux->add_flag("--count-only", count_only, "omit the tableau list");

    CLI::App* involution = app.add_subcommand("involution", "signed arrays vs tableaux vs series");
    involution->add_option("--poset", pspec, "poset spec")->required();
    involution->add_option("--shape", shape_arg, "partition")->required();

    for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (expand->parsed()) return cmd_expand(gspec, basis, degree, engine, pretty, compact);
        if (table1->parsed()) return cmd_table1(golden, pretty, compact);
        if (compare->parsed()) return cmd_compare(gspec, gspec2, degree, pretty, compact);
        if (trees->parsed()) return cmd_trees(max_n, degree, pretty, compact);
        if (positivity->parsed()) return cmd_positivity(gspec, family, degree, pretty, compact);
        if (tableaux->parsed()) return cmd_tableaux(pspec, shape_arg, count_only, pretty, compact);
        if (involution->parsed()) return cmd_involution(pspec, shape_arg, pretty, compact);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
