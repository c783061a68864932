// Command-line front end: builds equipped Cardy-Frobenius algebras from
// group spec files, runs the verifier suites, evaluates correlators and
// Frobenius-Schur traces, and dumps algebra descriptions.
//
// Exit codes: 0 all checks pass, 1 a verification check failed, 2 the
// input could not be parsed, 3 the input parsed but names no valid object.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cfalg/builders.hpp"
#include "cfalg/errors.hpp"
#include "cfalg/frobenius.hpp"
#include "cfalg/group.hpp"
#include "cfalg/specio.hpp"
#include "cfalg/surfaces.hpp"

namespace {

using namespace cfalg;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitParseError = 2;
constexpr int kExitBuildError = 3;

struct Options {
    std::string group_path;
    std::string builder = "regular";
    std::string action_kind = "natural";
    std::string ring = "R";
    int n = 1;
    std::string mu = "1";
    std::string mu_class;
    bool no_equipment = false;
    int cap = kDefaultOrderCap;

    std::string surface_path;
    std::vector<std::string> reps;
    bool witnesses = false;
    bool decimal = false;
    bool timing = false;
};

GroupFile load_group(const Options& opt) {
    if (opt.group_path.empty()) {
        throw ParseError("this command requires --group");
    }
    return load_group_file(opt.group_path, opt.cap);
}

GroupAction make_action(const Options& opt, const GroupFile& file) {
    if (opt.action_kind == "natural") {
        return natural_action(file.group);
    }
    if (opt.action_kind == "regular") {
        return regular_action(file.group);
    }
    if (opt.action_kind == "coset") {
        if (!file.has_subgroup) {
            throw BuildError("the coset action requires a subgroup in the group spec");
        }
        return coset_action(file.group, file.subgroup);
    }
    throw ParseError("unknown action '" + opt.action_kind + "'");
}

EquippedCF build_algebra(const Options& opt) {
    EquippedCF cf = [&opt] {
        if (opt.builder == "division") {
            return division_model(parse_division_ring(opt.ring), opt.n,
                                  Rational::parse(opt.mu), opt.cap);
        }
        const GroupFile file = load_group(opt);
        if (opt.builder == "regular") {
            return regular_algebra(file.group);
        }
        if (opt.builder == "action") {
            const GroupAction act = make_action(opt, file);
            if (opt.mu_class.empty()) {
                return action_algebra(act);
            }
            const CenterData center = group_center(*file.group);
            return action_algebra(
                act, parse_element_spec(opt.mu_class, center.algebra.basis_labels()));
        }
        if (opt.builder == "hecke") {
            if (!file.has_subgroup) {
                throw BuildError("the hecke builder requires a subgroup in the group spec");
            }
            return hecke_algebra(file.group, file.subgroup);
        }
        throw ParseError("unknown builder '" + opt.builder + "'");
    }();
    if (opt.no_equipment) {
        cf.equipment.reset();
    }
    return cf;
}

class Timer {
  public:
    explicit Timer(bool enabled) : enabled_(enabled), start_(Clock::now()) {}
    ~Timer() {
        if (enabled_) {
            const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                Clock::now() - start_);
            std::cout << "time: " << ms.count() << " ms\n";
        }
    }

  private:
    using Clock = std::chrono::steady_clock;
    bool enabled_;
    Clock::time_point start_;
};

void print_report(const std::string& section, Report report, bool witnesses,
                  bool& all_pass) {
    report.sort_by_name();
    for (const CheckResult& c : report.checks) {
        std::cout << "check " << section << "/" << c.name << ": "
                  << (c.pass ? "pass" : "FAIL");
        if (!c.pass && witnesses && !c.witness.empty()) {
            std::cout << "  (" << c.witness << ")";
        }
        std::cout << "\n";
        all_pass = all_pass && c.pass;
    }
}

int cmd_verify(const Options& opt) {
    const Timer timer(opt.timing);
    const EquippedCF cf = build_algebra(opt);
    std::cout << "algebra: dim A = " << cf.A.dim() << ", dim B = " << cf.B.dim()
              << "\n";
    if (cf.equipment) {
        std::cout << "U = " << cf.equipment->u.str(cf.A.algebra.basis_labels())
                  << "\n";
    }

    bool all = true;
    print_report("A", verify_frobenius_pair(cf.A), opt.witnesses, all);
    print_report("B", verify_frobenius_pair(cf.B), opt.witnesses, all);

    const bool forms_ok = cf.A.nondegenerate() && cf.B.nondegenerate();
    if (forms_ok) {
        print_report("cardy", verify_cardy(cf), opt.witnesses, all);
    } else {
        std::cout << "check cardy: SKIPPED (degenerate form)\n";
    }
    if (!cf.equipment) {
        std::cout << "check equipment: SKIPPED (the theory carries no equipment)\n";
    } else if (forms_ok) {
        print_report("equipment", verify_equipment(cf), opt.witnesses, all);
    } else {
        std::cout << "check equipment: SKIPPED (degenerate form)\n";
    }

    std::cout << "result: " << (all ? "PASS" : "FAIL") << "\n";
    return all ? kExitPass : kExitCheckFailed;
}

int cmd_correlator(const Options& opt) {
    const Timer timer(opt.timing);
    const EquippedCF cf = build_algebra(opt);
    const SurfaceFile sf = load_surface_file(opt.surface_path, cf);
    const Rational value = correlator(cf, sf.surface, sf.input);
    std::cout << value.str() << "\n";
    if (opt.decimal) {
        std::ostringstream os;
        os << std::setprecision(12) << value.to_double();
        std::cout << "decimal: " << os.str() << "\n";
    }
    return kExitPass;
}

// Claimed irreducible summand "TYPE:MULT" (or bare "TYPE"), TYPE naming the
// endomorphism division ring of a real irreducible.
std::pair<DivisionRing, long> parse_rep_spec(const std::string& text) {
    std::string type = text;
    long mult = 1;
    const std::size_t colon = text.find(':');
    if (colon != std::string::npos) {
        type = text.substr(0, colon);
        const std::string tail = text.substr(colon + 1);
        try {
            std::size_t used = 0;
            mult = std::stol(tail, &used);
            if (used != tail.size()) {
                throw std::invalid_argument(tail);
            }
        } catch (const std::exception&) {
            throw ParseError("bad multiplicity '" + tail + "' in --rep");
        }
        if (mult < 1) {
            throw ParseError("multiplicities in --rep must be positive");
        }
    }
    return {parse_division_ring(type), mult};
}

int cmd_fs(const Options& opt) {
    const Timer timer(opt.timing);
    const GroupFile file = load_group(opt);
    const GroupAction act = make_action(opt, file);
    const Rational trace = frobenius_schur_trace(act);
    std::cout << "trace: " << trace.str() << "\n";
    if (opt.reps.empty()) {
        return kExitPass;
    }
    Rational predicted(0);
    for (const std::string& spec : opt.reps) {
        const auto [ring, mult] = parse_rep_spec(spec);
        predicted += Rational(mult * (2 - division_dim(ring)) * file.group->order);
    }
    std::cout << "predicted: " << predicted.str() << "\n";
    const bool ok = trace == predicted;
    std::cout << "check fs-match: " << (ok ? "pass" : "FAIL") << "\n";
    return ok ? kExitPass : kExitCheckFailed;
}

// Labels may contain spaces and commas, so listings join on "; ".
std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const std::string& p : parts) {
        if (!out.empty()) {
            out += "; ";
        }
        out += p;
    }
    return out;
}

void dump_pair(const std::string& name, const FrobeniusPair& pair) {
    std::cout << "algebra " << name << ": dim " << pair.dim() << "\n";
    std::cout << "basis: " << join(pair.algebra.basis_labels()) << "\n";
    std::cout << "structure " << name << ":\n";
    for (int i = 0; i < pair.dim(); ++i) {
        for (int j = 0; j < pair.dim(); ++j) {
            for (const auto& [k, v] : pair.algebra.basis_product(i, j)) {
                std::cout << "(" << i << "," << j << "," << k << "," << v.str()
                          << ")\n";
            }
        }
    }
    std::vector<std::string> counits;
    counits.reserve(pair.counit.size());
    for (const Rational& v : pair.counit) {
        counits.push_back(v.str());
    }
    std::cout << "counit " << name << ": " << join(counits) << "\n";
}

int cmd_describe(const Options& opt, bool with_action, bool with_builder) {
    if (opt.builder == "division" && with_builder) {
        // No group behind this model; describe just the algebra.
        const EquippedCF cf = build_algebra(opt);
        dump_pair("A", cf.A);
        dump_pair("B", cf.B);
        std::cout << "phi: " << cf.phi.str() << "\n";
        if (cf.equipment) {
            std::cout << "star_A: " << cf.equipment->star_a.str() << "\n";
            std::cout << "star_B: " << cf.equipment->star_b.str() << "\n";
            std::cout << "U = "
                      << cf.equipment->u.str(cf.A.algebra.basis_labels()) << "\n";
        }
        return kExitPass;
    }

    const GroupFile file = load_group(opt);
    const FiniteGroup& g = *file.group;
    std::cout << "group: order " << g.order << ", degree " << g.degree()
              << ", classes " << g.num_classes() << "\n";
    for (int c = 0; c < g.num_classes(); ++c) {
        std::cout << "class [" << g.labels[static_cast<std::size_t>(g.class_rep(c))]
                  << "]: size " << g.classes[static_cast<std::size_t>(c)].size()
                  << "\n";
    }
    std::vector<std::string> gens;
    gens.reserve(g.generators.size());
    for (const int e : g.generators) {
        gens.push_back(g.labels[static_cast<std::size_t>(e)]);
    }
    std::cout << "generators: " << join(gens) << "\n";
    if (file.has_subgroup) {
        std::cout << "subgroup: order " << file.subgroup.size() << "\n";
    }

    if (with_action) {
        const GroupAction act = make_action(opt, file);
        std::cout << "action: " << opt.action_kind << ", points " << act.set_size
                  << "\n";
        std::cout << "orbits on points: " << orbits_on_tuples(act, 1).size() << "\n";
        const OrbitBasis basis = orbit_basis(act);
        std::cout << "orbits on pairs: " << basis.orbits.size() << "\n";
        for (std::size_t i = 0; i < basis.orbits.size(); ++i) {
            std::cout << "pair orbit " << basis.labels[i] << ": size "
                      << basis.orbits[i].size() << ", stabilizer "
                      << basis.orbits[i].stabilizer_order << ", star "
                      << basis.labels[static_cast<std::size_t>(basis.star_perm[i])]
                      << "\n";
        }
    }

    if (with_builder) {
        const EquippedCF cf = build_algebra(opt);
        dump_pair("A", cf.A);
        dump_pair("B", cf.B);
        std::cout << "phi: " << cf.phi.str() << "\n";
        if (cf.equipment) {
            std::cout << "star_A: " << cf.equipment->star_a.str() << "\n";
            std::cout << "star_B: " << cf.equipment->star_b.str() << "\n";
            std::cout << "U = "
                      << cf.equipment->u.str(cf.A.algebra.basis_labels()) << "\n";
        }
    }
    return kExitPass;
}

void add_builder_options(CLI::App* sub, Options& opt) {
    sub->add_option("--group", opt.group_path, "group spec file (JSON)");
    sub->add_option("--builder", opt.builder,
                    "algebra builder: regular, action, hecke, division");
    sub->add_option("--action", opt.action_kind,
                    "action kind for the action builder: natural, regular, coset");
    sub->add_option("--ring", opt.ring, "division ring for the division builder: R, C, H");
    sub->add_option("--n", opt.n, "matrix size for the division builder");
    sub->add_option("--mu", opt.mu, "scale p/q for the division builder");
    sub->add_option("--mu-class", opt.mu_class,
                    "central weight for the action builder: 'label=p/q;label=p/q'");
    sub->add_flag("--no-equipment", opt.no_equipment,
                  "drop the involutions and U from the built theory");
    sub->add_option("--cap", opt.cap, "group order / dimension cap");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Cardy-Frobenius algebras from finite groups"};
    app.require_subcommand(1);
    Options opt;
    int code = kExitPass;

    CLI::App* verify = app.add_subcommand("verify", "build an algebra and run every verifier");
    add_builder_options(verify, opt);
    verify->add_flag("--witnesses", opt.witnesses, "print a witness for each failed check");
    verify->add_flag("--timing", opt.timing, "append elapsed wall time");
    verify->callback([&] { code = cmd_verify(opt); });

    CLI::App* corr = app.add_subcommand("correlator", "evaluate one correlator from a surface spec");
    add_builder_options(corr, opt);
    corr->add_option("--surface", opt.surface_path, "surface spec file (JSON)")->required();
    corr->add_flag("--decimal", opt.decimal, "also print a decimal approximation");
    corr->add_flag("--timing", opt.timing, "append elapsed wall time");
    corr->callback([&] { code = cmd_correlator(opt); });

    CLI::App* fs = app.add_subcommand("fs", "Frobenius-Schur trace of U on a permutation representation");
    fs->add_option("--group", opt.group_path, "group spec file (JSON)")->required();
    fs->add_option("--action", opt.action_kind,
                   "action kind: natural, regular, coset");
    fs->add_option("--cap", opt.cap, "group order cap");
    fs->add_option("--rep", opt.reps,
                   "claimed real-irreducible summand TYPE[:MULT]; repeatable, "
                   "checks the trace against the prediction");
    fs->add_flag("--timing", opt.timing, "append elapsed wall time");
    fs->callback([&] { code = cmd_fs(opt); });

    CLI::App* describe = app.add_subcommand("describe", "print group, orbit, and algebra data");
    add_builder_options(describe, opt);
    auto* action_opt = describe->get_option("--action");
    auto* builder_opt = describe->get_option("--builder");
    describe->callback([&, action_opt, builder_opt] {
        code = cmd_describe(opt, action_opt->count() > 0, builder_opt->count() > 0);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitPass : kExitParseError;
    } catch (const cfalg::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const cfalg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBuildError;
    }
    return code;
}
