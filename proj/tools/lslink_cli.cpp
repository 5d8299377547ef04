// Command-line front end: H/h tables, surgery d-invariants with an optional
// cell-complex cross-check, and the derived invariants.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lslink/cell_complex.hpp"
#include "lslink/errors.hpp"
#include "lslink/invariants.hpp"
#include "lslink/io.hpp"
#include "lslink/surgery.hpp"

namespace {

using namespace lslink;

struct InputOpts {
    std::string family;
    std::string inline_json;
    std::string file;

    void attach(CLI::App* cmd) {
        cmd->add_option("--family", family, "named input: unknot | torus P Q | whitehead | unlink2");
        cmd->add_option("--input", inline_json, "inline JSON input");
        cmd->add_option("--file", file, "path to a JSON input file");
    }

    ParsedInput resolve() const {
        int sources = !family.empty() + !inline_json.empty() + !file.empty();
        if (sources != 1)
            throw CLI::ValidationError("input", "exactly one of --family/--input/--file is required");
        if (!family.empty()) return expand_family(family);
        if (!inline_json.empty()) return parse_input_json(inline_json);
        std::ifstream in(file);
        if (!in) throw ParseError("cannot open " + file);
        std::stringstream buf;
        buf << in.rdbuf();
        return parse_input_json(buf.str());
    }
};

const LinkHFunction2& need_link(const ParsedInput& in, const char* cmd) {
    if (in.kind != ParsedInput::Kind::Link2)
        throw Error(std::string(cmd) + " needs a two-component link input");
    return *in.link;
}

const KnotHFunction& need_knot(const ParsedInput& in, const char* cmd) {
    if (in.kind != ParsedInput::Kind::Knot)
        throw Error(std::string(cmd) + " needs a knot input");
    return *in.knot;
}

// Single-label oracle comparison, as used by `dinv --oracle`.
bool oracle_agrees(const LinkHFunction2& l, int p1, int p2, const SpincLabel2& label) {
    LinkHFunction2 unlink = LinkHFunction2::unlink();
    int b = std::max(default_truncation(l, p1, p2), default_truncation(unlink, p1, p2));
    Rational expected =
        d_link_surgery(l, p1, p2, label) - (phi(p1, label.i1) + phi(p2, label.i2));
    for (int bb : {b, b + 2}) {
        TruncatedComplex cl = build_complex(l, p1, p2, label, bb);
        TruncatedComplex co = build_complex(unlink, p1, p2, label, bb);
        if (!verify_differential(cl) || !verify_differential(co)) return false;
        if (Rational(relative_d(cl) - relative_d(co)) != expected) return false;
    }
    return true;
}

int run(int argc, char** argv) {
    CLI::App app{"H-functions, d-invariants and concordance invariants of "
                 "two-component links with linking number zero"};
    app.require_subcommand(1);
    bool emit_json = false;
    app.add_flag("--json", emit_json, "machine-readable output");

    InputOpts hfun_in;
    CLI::App* hfun = app.add_subcommand("hfun", "H/h table with validation verdict");
    hfun_in.attach(hfun);

    InputOpts dinv_in;
    std::vector<int> framing;
    std::vector<int> label_opt;
    bool all_labels = false, with_oracle = false;
    CLI::App* dinv = app.add_subcommand("dinv", "d-invariants of (p1,p2)-surgery");
    dinv_in.attach(dinv);
    dinv->add_option("-p,--framing", framing, "surgery coefficients p1 p2")
        ->expected(2)
        ->required();
    dinv->add_option("--label", label_opt, "Spin^c label i1 i2")->expected(2);
    dinv->add_flag("--all", all_labels, "all Spin^c labels (default when --label is absent)");
    dinv->add_flag("--oracle", with_oracle, "cross-check each row against the cell complex");

    InputOpts region_in;
    CLI::App* region = app.add_subcommand("region", "L-space surgery region");
    region_in.attach(region);

    InputOpts casson_in;
    bool assume_lspace = false;
    CLI::App* casson = app.add_subcommand("casson", "Casson invariants of (+-1)-surgeries");
    casson_in.attach(casson);
    casson->add_flag("--assume-lspace-knot", assume_lspace,
                     "assert that a knot input is an L-space knot");

    InputOpts beta_in;
    CLI::App* beta = app.add_subcommand("beta", "Sato-Levine invariant");
    beta_in.attach(beta);

    InputOpts genus_in;
    int genus_cap = 3;
    CLI::App* genus = app.add_subcommand("genus", "four-genus lower bound");
    genus_in.attach(genus);
    genus->add_option("--cap", genus_cap, "largest per-component genus to tabulate");

    InputOpts nuplus_in;
    int blowdown_which = 0;
    CLI::App* nuplus = app.add_subcommand("nuplus", "nu+ invariant");
    nuplus_in.attach(nuplus);
    nuplus->add_option("--blowdown", blowdown_which,
                       "for link input: blow down the other component (1 or 2)");

    InputOpts oracle_in;
    int pmax = 0;
    CLI::App* oracle = app.add_subcommand(
        "oracle-check", "compare the surgery formula against the cell complex");
    oracle_in.attach(oracle);
    oracle->add_option("--pmax", pmax, "largest |p| to sweep (default LSK_PMAX_DEFAULT or 3)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 4;
    }

    if (*hfun) {
        ParsedInput in = hfun_in.resolve();
        if (in.kind == ParsedInput::Kind::Link2) {
            if (emit_json) {
                std::cout << hfun_json(*in.link) << "\n";
            } else {
                std::cout << table_text(*in.link);
                std::cout << "validation: " << (in.link->is_valid() ? "valid" : "invalid") << "\n";
                int r = in.link->radius();
                for (int s2 = r; s2 >= -r; --s2)
                    for (int s1 = -r; s1 <= r; ++s1)
                        if (in.link->h(s1, s2) != 0)
                            std::cout << "h(" << s1 << "," << s2
                                      << ") = " << in.link->h(s1, s2) << "\n";
            }
        } else {
            if (emit_json) std::cout << hfun_json(*in.knot) << "\n";
            else {
                std::cout << table_text(*in.knot);
                std::cout << "validation: " << (in.knot->is_valid() ? "valid" : "invalid") << "\n";
            }
        }
        return 0;
    }

    if (*dinv) {
        ParsedInput in = dinv_in.resolve();
        const LinkHFunction2& l = need_link(in, "dinv");
        int p1 = framing[0], p2 = framing[1];
        std::vector<SpincLabel2> labels;
        if (!label_opt.empty() && !all_labels)
            labels.push_back(reduce_spinc(p1, p2, label_opt[0], label_opt[1]));
        else
            labels = all_spinc_labels(p1, p2);
        std::vector<std::pair<SpincLabel2, Rational>> rows;
        bool mismatch = false;
        for (const SpincLabel2& label : labels) {
            rows.push_back({label, d_link_surgery(l, p1, p2, label)});
            if (with_oracle && !oracle_agrees(l, p1, p2, label)) mismatch = true;
        }
        if (emit_json) {
            std::cout << dinv_rows_json(p1, p2, rows) << "\n";
        } else {
            for (const auto& [label, d] : rows)
                std::cout << label.i1 << " " << label.i2 << " " << d.str() << "\n";
        }
        if (mismatch) {
            std::cerr << "oracle mismatch\n";
            return 3;
        }
        return 0;
    }

    if (*region) {
        LSpaceRegion r = lspace_region(need_link(region_in.resolve(), "region"));
        std::cout << (emit_json ? region_json(r) : r.str()) << "\n";
        return 0;
    }

    if (*casson) {
        ParsedInput in = casson_in.resolve();
        if (in.kind == ParsedInput::Kind::Link2) {
            std::int64_t pp = casson_link_pm1(*in.link, 1, 1);
            std::int64_t pm = casson_link_pm1(*in.link, 1, -1);
            std::int64_t mp = casson_link_pm1(*in.link, -1, 1);
            std::int64_t mm = casson_link_pm1(*in.link, -1, -1);
            if (emit_json) std::cout << casson_json(pp, pm, mp, mm) << "\n";
            else
                std::cout << "++ " << pp << "\n+- " << pm << "\n-+ " << mp << "\n-- " << mm
                          << "\n";
        } else {
            bool lspace = in.lspace_knot_family || assume_lspace;
            std::int64_t plus = casson_knot_pm1(*in.knot, 1, lspace);
            std::int64_t minus = casson_knot_pm1(*in.knot, -1, lspace);
            if (emit_json) std::cout << casson_knot_json(plus, minus) << "\n";
            else std::cout << "+ " << plus << "\n- " << minus << "\n";
        }
        return 0;
    }

    if (*beta) {
        std::int64_t b = sato_levine(need_link(beta_in.resolve(), "beta"));
        if (emit_json) std::cout << beta_json(b) << "\n";
        else std::cout << b << "\n";
        return 0;
    }

    if (*genus) {
        GenusBoundReport rep = genus_lower_bound(need_link(genus_in.resolve(), "genus"), genus_cap);
        if (emit_json) {
            std::cout << genus_json(rep) << "\n";
        } else {
            std::cout << "min total genus lower bound: " << rep.min_total << "\n";
            for (auto [g1, g2] : rep.excluded)
                std::cout << "excluded (" << g1 << "," << g2 << ")\n";
        }
        return 0;
    }

    if (*nuplus) {
        ParsedInput in = nuplus_in.resolve();
        int nu;
        if (in.kind == ParsedInput::Kind::Link2) {
            if (blowdown_which != 1 && blowdown_which != 2)
                throw Error("nuplus on a link needs --blowdown 1|2");
            nu = nu_plus(blowdown_h(*in.link, blowdown_which));
        } else {
            nu = nu_plus(need_knot(in, "nuplus"));
        }
        if (emit_json) std::cout << nuplus_json(nu) << "\n";
        else std::cout << nu << "\n";
        return 0;
    }

    if (*oracle) {
        if (pmax == 0) {
            const char* env = std::getenv("LSK_PMAX_DEFAULT");
            pmax = env ? std::atoi(env) : 3;
        }
        if (pmax < 1) throw Error("pmax must be >= 1");
        OracleCheckReport rep = check_against_formula(need_link(oracle_in.resolve(), "oracle-check"), pmax);
        std::cout << "checked " << rep.cases << " (framing, Spin^c) cases, "
                  << rep.mismatches.size() << " mismatches\n";
        for (const auto& m : rep.mismatches) std::cout << m << "\n";
        return rep.ok() ? 0 : 3;
    }

    return 4;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 4;
    } catch (const lslink::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
