#include "lenslift/alexander.hpp"
#include "lenslift/bracket.hpp"
#include "lenslift/catalog.hpp"
#include "lenslift/json_io.hpp"
#include "lenslift/lift.hpp"
#include "lenslift/normal_form.hpp"
#include "lenslift/search.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace lenslift;
using nlohmann::json;

namespace {

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const char* kHelp =
    "lenslift -- links in lens spaces and their lifts to the 3-sphere\n"
    "\n"
    "usage: lenslift <command> [flags]\n"
    "\n"
    "commands:\n"
    "  lift    -p P -q Q -b \"t=N w...\"   lift of the braid-presented link\n"
    "          [--construction theorem|reduced]\n"
    "  invariants -b \"t=N w...\"          invariants of the braid closure in S^3\n"
    "  identify   -b \"t=N w...\" | --pd FILE   catalog lookup\n"
    "  solve   -h H -pmax N               solve k.p + 2q - p = H\n"
    "  search  [-tmax N] [-lmax N] [-pmax N]   lens links with equal lifts\n"
    "  cable   -i I -j J                  the cabled pair over the Hopf example\n"
    "  catalog [print|verify|write PATH]  the named-link catalog\n"
    "\n"
    "common flags: --format json|table (default table), --threads N\n"
    "environment: LENSLIFT_CATALOG overrides the catalog file for verify\n";

struct Args {
    std::string command;
    std::map<std::string, std::string> flags;
    std::vector<std::string> positional;

    bool has(const std::string& k) const { return flags.count(k) != 0; }

    std::string str(const std::string& k) const {
        auto it = flags.find(k);
        if (it == flags.end()) throw Usage("missing required flag " + k);
        return it->second;
    }

    int num(const std::string& k) const {
        const std::string v = str(k);
        try {
            size_t used = 0;
            const int n = std::stoi(v, &used);
            if (used != v.size()) throw std::invalid_argument("");
            return n;
        } catch (const std::exception&) {
            throw Usage("flag " + k + " needs an integer, got '" + v + "'");
        }
    }

    int num_or(const std::string& k, int dflt) const {
        return has(k) ? num(k) : dflt;
    }
};

Args parse_args(int argc, char** argv) {
    Args a;
    if (argc < 2) throw Usage("no command given");
    a.command = argv[1];
    const std::vector<std::string> known = {
        "-p", "-q", "-b", "-h", "-pmax", "-tmax", "-lmax", "-i", "-j",
        "--pd", "--format", "--threads", "--construction"};
    for (int i = 2; i < argc; ++i) {
        const std::string tok = argv[i];
        if (tok.rfind("-", 0) == 0 && tok != "-") {
            if (std::find(known.begin(), known.end(), tok) == known.end())
                throw Usage("unknown flag " + tok);
            if (i + 1 >= argc) throw Usage("flag " + tok + " needs a value");
            a.flags[tok] = argv[++i];
        } else {
            a.positional.push_back(tok);
        }
    }
    if (a.has("--format")) {
        const std::string f = a.str("--format");
        if (f != "json" && f != "table") throw Usage("--format must be json or table");
    }
    if (a.has("--threads") && a.num("--threads") < 1)
        throw Usage("--threads must be at least 1");
    return a;
}

bool json_mode(const Args& a) { return a.has("--format") && a.str("--format") == "json"; }

std::string identification_line(const std::optional<Identification>& id) {
    if (!id) return "unidentified";
    std::string s = id->display();
    const std::string alias = catalog_alias(id->name);
    if (!alias.empty() && !id->mirror) s += " (" + alias + ")";
    return s;
}

std::string classes_str(const LensLinkClasses& c) {
    std::ostringstream os;
    os << "nu=" << c.nu << " delta=[";
    for (size_t i = 0; i < c.delta.size(); ++i)
        os << (i ? "," : "") << c.delta[i];
    os << "]";
    return os.str();
}

int cmd_lift(const Args& a) {
    const BraidWord b = parse_braid(a.str("-b"));
    const LensSpace lens(a.num("-p"), a.num("-q"));
    const std::string cons = a.has("--construction") ? a.str("--construction") : "reduced";
    if (cons != "theorem" && cons != "reduced")
        throw Usage("--construction must be theorem or reduced");

    const DiskDiagram disk = from_braid(b, lens);
    const LensLinkClasses classes = lens_closure_components(disk);
    const auto [literal, reduced] = lift_braid(b, lens);
    LiftResult lifted = cons == "theorem" ? lift_diagram(disk) : lift_diagram_reduced(disk);
    lifted.braid_form = reduced;
    const LinkFingerprint fp = fingerprint_of_closure(reduced);
    const auto id = identify(fp);

    if (json_mode(a)) {
        json j = lift_to_json(lifted);
        j["lens_link"] = classes_to_json(classes);
        j["lift_braid_literal"] = to_text(literal);
        j["lift_braid_reduced"] = to_text(reduced);
        j["lift_components"] = lift_component_count(classes, lens.p);
        j["lift_fingerprint"] = fingerprint_to_json(fp);
        j["identification"] = id ? json(id->display()) : json(nullptr);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "lens space:           " << lens.str() << "\n";
        std::cout << "braid:                " << to_text(b) << "\n";
        std::cout << "lens link:            " << classes_str(classes) << "\n";
        std::cout << "lift braid (reduced): " << to_text(reduced) << "\n";
        std::cout << "lift braid (literal): " << to_text(literal) << "\n";
        std::cout << "lift components:      " << lift_component_count(classes, lens.p)
                  << "\n";
        std::cout << "lift pd (" << cons << "): " << pd_to_json(lifted.diagram).dump()
                  << "\n";
        std::cout << "lift fingerprint:     " << fp.str() << "\n";
        std::cout << "identification:       " << identification_line(id) << "\n";
    }
    return 0;
}

int cmd_invariants(const Args& a) {
    const BraidWord b = parse_braid(a.str("-b"));
    const PlanarDiagram d = closure(b);
    const LinkFingerprint fp = fingerprint_of_closure(b);
    const Laurent br = kauffman_bracket_tl(b);
    const Laurent alex = alexander(b);
    const auto id = identify(fp);

    if (json_mode(a)) {
        json j{{"braid", to_text(b)},
               {"components", fp.components},
               {"bracket", br.str()},
               {"fingerprint", fingerprint_to_json(fp)},
               {"alexander", alex.str("t")},
               {"pd", pd_to_json(d)},
               {"identification", id ? json(id->display()) : json(nullptr)}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "braid:          " << to_text(b) << "\n";
        std::cout << "closure pd:     " << pd_to_json(d).dump() << "\n";
        std::cout << "components:     " << fp.components << "\n";
        std::cout << "bracket:        " << br.str() << "\n";
        std::cout << "fingerprint:    " << fp.str() << "\n";
        std::cout << "alexander:      " << alex.str("t") << "\n";
        std::cout << "identification: " << identification_line(id) << "\n";
    }
    return 0;
}

int cmd_identify(const Args& a) {
    std::optional<LinkFingerprint> fp;
    if (a.has("-b")) {
        fp = fingerprint_of_closure(parse_braid(a.str("-b")));
    } else if (a.has("--pd")) {
        std::ifstream in(a.str("--pd"));
        if (!in) throw std::runtime_error("cannot open " + a.str("--pd"));
        json j;
        in >> j;
        fp = fingerprint(pd_from_json(j));
    } else {
        throw Usage("identify needs -b or --pd");
    }
    const auto id = identify(*fp);
    if (json_mode(a)) {
        json j{{"fingerprint", fingerprint_to_json(*fp)},
               {"identification", id ? json(id->display()) : json(nullptr)}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << identification_line(id) << "\n";
    }
    return 0;
}

int cmd_solve(const Args& a) {
    const int h = a.num("-h");
    const int p_max = a.num("-pmax");
    const SolveResult r = solve_lift_equation(h, p_max);
    if (json_mode(a)) {
        json fams = json::array();
        for (const auto& f : r.families)
            fams.push_back({{"k", f.k},
                            {"parity", f.parity == 0 ? "any" : (f.parity == 1 ? "odd" : "even")},
                            {"q", f.describe()},
                            {"p_min", f.p_min}});
        json sols = json::array();
        for (const auto& s : r.solutions)
            sols.push_back({{"p", s.p}, {"q", s.q}, {"k", s.k}, {"coprime", s.coprime_valid}});
        std::cout << json{{"h", h}, {"families", fams}, {"solutions", sols}}.dump()
                  << "\n";
    } else {
        std::cout << "equation: k*p + 2q - p = " << h << "\n";
        std::cout << "families:\n";
        for (const auto& f : r.families) std::cout << "  " << f.describe() << "\n";
        std::cout << "solutions (p <= " << p_max << "):\n";
        for (const auto& s : r.solutions) {
            std::cout << "  p=" << s.p << " q=" << s.q << " k=" << s.k;
            if (!s.coprime_valid) std::cout << "  [not coprime]";
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_search(const Args& a) {
    const int tmax = a.num_or("-tmax", 3);
    const int lmax = a.num_or("-lmax", 6);
    const int pmax = a.num_or("-pmax", 9);
    const auto reports = collision_search(tmax, lmax, pmax);
    if (json_mode(a)) {
        for (const auto& r : reports) std::cout << collision_to_json(r).dump() << "\n";
    } else {
        std::cout << "collision reports (" << reports.size() << "):\n";
        for (const auto& r : reports) {
            std::cout << "  " << r.lens.str() << "  " << to_text(r.braid_a) << "  vs  "
                      << to_text(r.braid_b) << "\n";
            std::cout << "    separators: " << classes_str(r.classes_a) << "  |  "
                      << classes_str(r.classes_b)
                      << (r.separated ? "" : "  [indistinguishable]") << "\n";
            std::cout << "    lift: " << (r.lift_name ? *r.lift_name : "unidentified")
                      << "  " << r.lift_fp.str() << "\n";
        }
    }
    return 0;
}

int cmd_cable(const Args& a) {
    const int i = a.num("-i");
    const int j = a.num("-j");
    const CablePair pair = build_cable_pair(i, j);
    const DiskDiagram da = from_braid(pair.a, pair.lens);
    const DiskDiagram db = from_braid(pair.b, pair.lens);
    const LensLinkClasses ca = lens_closure_components(da);
    const LensLinkClasses cb = lens_closure_components(db);
    const LinkFingerprint fa = fingerprint_of_closure(lift_braid(pair.a, pair.lens).second);
    const LinkFingerprint fb = fingerprint_of_closure(lift_braid(pair.b, pair.lens).second);

    if (json_mode(a)) {
        json out{{"lens", {{"p", pair.lens.p}, {"q", pair.lens.q}}},
                 {"i", i},
                 {"j", j},
                 {"braid_a", to_text(pair.a)},
                 {"braid_b", to_text(pair.b)},
                 {"classes_a", classes_to_json(ca)},
                 {"classes_b", classes_to_json(cb)},
                 {"lift_fp_a", fingerprint_to_json(fa)},
                 {"lift_fp_b", fingerprint_to_json(fb)},
                 {"lift_fingerprints_equal", fa == fb}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "cable pair (i=" << i << ", j=" << j << ") in " << pair.lens.str()
                  << "\n";
        std::cout << "A: " << to_text(pair.a) << "\n   " << classes_str(ca) << "\n";
        std::cout << "B: " << to_text(pair.b) << "\n   " << classes_str(cb) << "\n";
        std::cout << "lift fingerprint A: " << fa.str() << "\n";
        std::cout << "lift fingerprint B: " << fb.str() << "\n";
        std::cout << "lift fingerprints equal: " << (fa == fb ? "yes" : "no") << "\n";
    }
    return 0;
}

std::string catalog_path(const Args& a) {
    if (a.positional.size() >= 2) return a.positional[1];
    if (const char* env = std::getenv("LENSLIFT_CATALOG")) return env;
    return "data/catalog.json";
}

int cmd_catalog(const Args& a) {
    const std::string sub = a.positional.empty() ? "print" : a.positional[0];
    if (sub == "print") {
        if (json_mode(a)) {
            std::cout << catalog_to_json().dump() << "\n";
        } else {
            for (const CatalogEntry& e : catalog()) {
                std::cout << e.name;
                if (!e.alias.empty()) std::cout << " (" << e.alias << ")";
                std::cout << "  <- closure of " << to_text(e.presentation) << "\n    "
                          << e.fp.str() << "\n";
            }
        }
        return 0;
    }
    if (sub == "write") {
        const std::string path = catalog_path(a);
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot write " + path);
        out << catalog_to_json().dump(2) << "\n";
        std::cout << "wrote " << path << "\n";
        return 0;
    }
    if (sub == "verify") {
        // Fingerprints are recomputed from the defining presentations on
        // load; verify cross-checks the serialized catalog against them.
        const std::string path = catalog_path(a);
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open catalog file " + path);
        json stored;
        in >> stored;
        const json fresh = catalog_to_json();
        if (stored != fresh) {
            std::cerr << "catalog mismatch: " << path
                      << " does not match recomputed fingerprints\n";
            return 1;
        }
        std::cout << "catalog verified: " << catalog().size()
                  << " entries match recomputed fingerprints\n";
        return 0;
    }
    throw Usage("catalog subcommand must be print, verify or write");
}

} // namespace

int main(int argc, char** argv) {
    try {
        const Args a = parse_args(argc, argv);
        if (a.command == "help" || a.command == "--help") {
            std::cout << kHelp;
            return 0;
        }
        if (a.command == "lift") return cmd_lift(a);
        if (a.command == "invariants") return cmd_invariants(a);
        if (a.command == "identify") return cmd_identify(a);
        if (a.command == "solve") return cmd_solve(a);
        if (a.command == "search") return cmd_search(a);
        if (a.command == "cable") return cmd_cable(a);
        if (a.command == "catalog") return cmd_catalog(a);
        throw Usage("unknown command '" + a.command + "'");
    } catch (const Usage& e) {
        std::cerr << "usage error: " << e.what() << "\n\n" << kHelp;
        return 2;
    } catch (const ResourceLimit& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
