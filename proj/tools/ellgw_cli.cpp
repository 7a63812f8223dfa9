#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "ellgw/exactnum.hpp"
#include "ellgw/gw0.hpp"
#include "ellgw/jsonio.hpp"
#include "ellgw/lattice.hpp"
#include "ellgw/local_gw.hpp"
#include "ellgw/surface_spec.hpp"
#include "ellgw/taubes.hpp"
#include "ellgw/verify.hpp"

// Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 usage or input error.

namespace {

using namespace ellgw;

void print_lattice_row(const Sublattice& l, const char* prefix = "") {
    std::cout << prefix << to_string(l.a) << " " << to_string(l.b) << " " << to_string(l.k)
              << "\n";
}

void cmd_sublattices(long d, bool with_m, long m, bool json) {
    if (!with_m) {
        auto lattices = enumerate_sublattices(Int(d));
        if (json)
            std::cout << sublattice_list_json(lattices).dump(2) << "\n";
        else
            for (const Sublattice& l : lattices) print_lattice_row(l);
        return;
    }
    ModuliPartition part = partition_moduli(Int(m), Int(d));
    if (json) {
        std::cout << partition_json(part).dump(2) << "\n";
        return;
    }
    for (const Sublattice& l : part.plus) print_lattice_row(l, "+ ");
    for (const Sublattice& l : part.minus) print_lattice_row(l, "- ");
    std::cout << "plus=" << part.plus.size() << " minus=" << part.minus.size() << "\n";
}

void cmd_local_gw(const std::string& kind, bool with_m, long m, long dmax,
                  const std::string& method, bool csv, bool json) {
    FiberKind fk;
    if (kind == "regular") {
        fk = FiberKind::regular(with_m ? m : 1);
    } else {
        if (!with_m) throw std::invalid_argument("local-gw: --kind multiple requires --m");
        fk = FiberKind::multiple(m);
    }
    GwMethod gm = method == "closed"     ? GwMethod::closed
                  : method == "assembly" ? GwMethod::assembly
                                         : GwMethod::both;
    LocalGWTable table = build_local_gw_table(fk, Int(dmax), gm);
    if (json) {
        std::cout << table_json(table).dump(2) << "\n";
    } else if (csv) {
        table.write_csv(std::cout);
    } else {
        for (const auto& [key, value] : table.entries())
            std::cout << to_string(key.second) << " " << to_string(value) << "\n";
    }
}

int cmd_gr(const std::string& spec_path, const std::string& bound_str, const std::string& side) {
    SurfaceSpec spec = load_spec(spec_path);
    Rat bound = parse_rat(bound_str);
    if (side == "gw") {
        auto s = gr_series_gw_side(spec, bound, required_trunc(spec, bound));
        std::cout << series_json(s).dump(2) << "\n";
        return 0;
    }
    if (side == "closed") {
        std::cout << series_json(gr_series_closed_side(spec, bound)).dump(2) << "\n";
        return 0;
    }
    auto gw = gr_series_gw_side(spec, bound, required_trunc(spec, bound));
    auto closed = gr_series_closed_side(spec, bound);
    bool equal = gw == closed;
    ordered_json j;
    j["gw"] = series_json(gw);
    j["closed"] = series_json(closed);
    j["equal"] = equal;
    std::cout << j.dump(2) << "\n";
    if (!equal) std::cerr << "gr: the two sides disagree\n";
    return equal ? 0 : 1;
}

int cmd_verify(const std::string& suite) {
    VerificationReport rep = run_suite(suite);
    for (const VerificationFailure& f : rep.failures)
        std::cout << "FAIL " << f.check << ": " << f.detail << "\n";
    std::cout << "suite " << rep.suite << ": " << rep.cases << " cases, " << rep.failures.size()
              << " failures, " << static_cast<long>(rep.wall_ms + 0.5) << " ms\n";
    return rep.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact dimension-zero genus-one local Gromov-Witten invariants of elliptic fibers"};
    app.require_subcommand(1);
    int exit_code = 0;

    auto* sigma_cmd = app.add_subcommand("sigma", "sum-of-divisors function sigma(d)");
    std::string sigma_arg;
    sigma_cmd->add_option("d", sigma_arg, "integer; sigma is 0 off the positive integers")
        ->required();
    sigma_cmd->callback([&] {
        Int d;
        try {
            d = Int(sigma_arg);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("sigma: '" + sigma_arg + "' is not an integer");
        }
        std::cout << to_string(sigma(d)) << "\n";
    });

    auto* sub_cmd = app.add_subcommand("sublattices", "index-d sublattices of Z+iZ, a b k rows");
    long sub_d = 0, sub_m = 0;
    bool sub_json = false;
    sub_cmd->add_option("--d", sub_d, "index of the sublattices")->required();
    auto* sub_m_opt = sub_cmd->add_option("--m", sub_m, "also split into plus/minus for this m");
    sub_cmd->add_flag("--json", sub_json, "emit JSON");
    sub_cmd->callback(
        [&] { cmd_sublattices(sub_d, sub_m_opt->count() > 0, sub_m, sub_json); });

    auto* gw_cmd = app.add_subcommand("local-gw", "table of GW_1^loc values for degrees 1..dmax");
    std::string gw_kind, gw_method = "closed";
    long gw_m = 0, gw_dmax = 0;
    bool gw_csv = false, gw_json = false;
    gw_cmd->add_option("--kind", gw_kind, "fiber kind")
        ->required()
        ->check(CLI::IsMember({"regular", "multiple"}));
    auto* gw_m_opt =
        gw_cmd->add_option("--m", gw_m, "multiplicity (multiple) or weight n (regular, default 1)");
    gw_cmd->add_option("--dmax", gw_dmax, "largest degree")->required();
    gw_cmd->add_option("--method", gw_method, "computation route")
        ->check(CLI::IsMember({"closed", "assembly", "both"}));
    auto* gw_csv_flag = gw_cmd->add_flag("--csv", gw_csv, "emit CSV");
    gw_cmd->add_flag("--json", gw_json, "emit JSON")->excludes(gw_csv_flag);
    gw_cmd->callback([&] {
        cmd_local_gw(gw_kind, gw_m_opt->count() > 0, gw_m, gw_dmax, gw_method, gw_csv, gw_json);
    });

    auto* gw0_cmd = app.add_subcommand("gw0", "surface generating function GW^0_X");
    std::string gw0_spec, gw0_bound;
    bool gw0_collapsed = false;
    gw0_cmd->add_option("--spec", gw0_spec, "surface spec JSON file")->required();
    gw0_cmd->add_option("--bound", gw0_bound, "total t-degree bound, p/q")->required();
    gw0_cmd->add_flag("--collapsed", gw0_collapsed, "collapse classes by total degree");
    gw0_cmd->callback([&] {
        SurfaceSeries s = gw0_series(load_spec(gw0_spec), parse_rat(gw0_bound));
        std::cout << (gw0_collapsed ? collapsed_json(s) : series_json(s)).dump(2) << "\n";
    });

    auto* gr_cmd = app.add_subcommand("gr", "Gr = SW generating function (Taubes side)");
    std::string gr_spec, gr_bound, gr_side = "both";
    gr_cmd->add_option("--spec", gr_spec, "surface spec JSON file")->required();
    gr_cmd->add_option("--bound", gr_bound, "total t-degree bound, p/q")->required();
    gr_cmd->add_option("--side", gr_side, "which side of the identity")
        ->check(CLI::IsMember({"gw", "closed", "both"}));
    gr_cmd->callback([&] { exit_code = cmd_gr(gr_spec, gr_bound, gr_side); });

    auto* verify_cmd = app.add_subcommand("verify", "run an invariant suite");
    std::string verify_suite;
    verify_cmd->add_option("--suite", verify_suite, "suite name")
        ->required()
        ->check(CLI::IsMember(suite_names()));
    verify_cmd->callback([&] { exit_code = cmd_verify(verify_suite); });

    auto* cache_cmd = app.add_subcommand("cache", "write the F(t) coefficient cache");
    long cache_trunc = 0;
    std::string cache_path;
    cache_cmd->add_option("--write-F", cache_trunc, "truncation order")->required();
    cache_cmd->add_option("--path", cache_path, "destination file")->required();
    cache_cmd->callback([&] {
        write_f_cache(solve_F(cache_trunc), cache_path);
        std::cout << "wrote " << cache_path << " (trunc " << cache_trunc << ")\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const ellgw::SpecError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::overflow_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
