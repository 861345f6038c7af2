// Command-line front end: module files, family construction, the stable
// operations, Ext/stable-Ext charts and the theorem-verification suites.
//
// Exit codes: 0 success/verified, 1 verification failure, 2 usage,
// 3 input validation.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "a1mod/classify.hpp"
#include "a1mod/ext.hpp"
#include "a1mod/families.hpp"
#include "a1mod/io.hpp"
#include "a1mod/verify.hpp"

namespace {

using namespace a1mod;

constexpr int kExitOk = 0, kExitVerifyFail = 1, kExitUsage = 2, kExitInput = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

A1Module load(const std::string& path) { return io::parse_module(read_file(path)); }

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
    out << text;
}

std::string profile_report(const A1Module& m) {
    std::ostringstream os;
    os << "module " << m.name << " dim " << m.total_dim();
    if (!m.is_zero()) os << " degrees [" << m.min_deg() << "," << m.max_deg() << "]";
    if (m.window) os << " window [" << m.window->lo << "," << m.window->hi << "]";
    os << "\n";
    MargolisProfile p = margolis(m);
    os << "q0:";
    for (auto& [d, k] : p.q0) os << " " << d << ":" << k;
    os << "\nq1:";
    for (auto& [d, k] : p.q1) os << " " << d << ":" << k;
    os << "\n";
    return os.str();
}

std::string chart_text(const ExtChart& ch) {
    std::ostringstream os;
    for (int eps : {0, 1}) {
        bool any = false;
        for (auto& [k, d] : ch.dims)
            if (k.eps == eps) any = true;
        if (!any) continue;
        os << "eps = " << eps << "\n";
        for (int s = ch.s_max; s >= ch.s_min; --s) {
            os << (s < 0 ? "" : " ") << s << " |";
            for (int x = ch.x_min; x <= ch.x_max; ++x) {
                int d = ch.dim(s, x + s, eps);
                os << (d == 0 ? " ." : " " + std::to_string(d));
            }
            os << "\n";
        }
        os << "    ";
        for (int x = ch.x_min; x <= ch.x_max; ++x) os << (x == 0 ? " 0" : "  ");
        os << "\n";
    }
    return os.str();
}

std::string format_chart(const ExtChart& ch, const std::string& format) {
    if (format == "tsv") return io::chart_tsv(ch);
    if (format == "svg") return io::chart_svg(ch);
    return chart_text(ch);
}

bool parse_range(const std::string& spec, int& lo, int& hi) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) return false;
    try {
        lo = std::stoi(spec.substr(0, colon));
        hi = std::stoi(spec.substr(colon + 1));
    } catch (...) {
        return false;
    }
    return lo <= hi;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite modules over A(1): families, stable operations, charts, verification"};
    app.require_subcommand(1);

    std::string in_path, in_path2, out_path;
    std::string family_kind;
    std::vector<int> family_params;
    std::vector<int> window_args;
    int op_arg = 0;
    std::uint64_t seed = IsoOptions{}.seed;
    int cap = IsoOptions{}.cap_log2;
    int smax = 6, smin = 0;
    std::string trange = "-4:8", format = "text";
    verify::Params vparams;
    std::string suite_name;

    auto* cmd_build = app.add_subcommand("build", "parse and validate a module file");
    cmd_build->add_option("file", in_path)->required();

    auto* cmd_family = app.add_subcommand("family", "construct a named family member");
    cmd_family->add_option("kind", family_kind)->required();
    cmd_family->add_option("params", family_params);
    cmd_family->add_option("--window", window_args)->expected(2);
    cmd_family->add_option("-o,--out", out_path);

    auto* cmd_margolis = app.add_subcommand("margolis", "Margolis cohomology profile");
    cmd_margolis->add_option("file", in_path)->required();

    auto* cmd_reduce = app.add_subcommand("reduce", "split off free summands");
    cmd_reduce->add_option("file", in_path)->required();
    cmd_reduce->add_option("-o,--out", out_path);

    auto* cmd_op = app.add_subcommand("op", "apply an operation");
    cmd_op->require_subcommand(1);
    auto* op_omega = cmd_op->add_subcommand("omega", "syzygy / cosyzygy");
    op_omega->add_option("n", op_arg)->required();
    op_omega->add_option("file", in_path)->required();
    op_omega->add_option("-o,--out", out_path);
    auto* op_dual = cmd_op->add_subcommand("dual", "vector-space dual");
    op_dual->add_option("file", in_path)->required();
    op_dual->add_option("-o,--out", out_path);
    auto* op_susp = cmd_op->add_subcommand("suspend", "degree shift");
    op_susp->add_option("t", op_arg)->required();
    op_susp->add_option("file", in_path)->required();
    op_susp->add_option("-o,--out", out_path);
    auto* op_tensor = cmd_op->add_subcommand("tensor", "tensor product");
    op_tensor->add_option("a", in_path)->required();
    op_tensor->add_option("b", in_path2)->required();
    op_tensor->add_option("-o,--out", out_path);

    auto* cmd_iso = app.add_subcommand("stable-iso", "Adams-Margolis stable isomorphism test");
    cmd_iso->add_option("a", in_path)->required();
    cmd_iso->add_option("b", in_path2)->required();
    cmd_iso->add_option("--seed", seed);
    cmd_iso->add_option("--cap", cap);

    auto* cmd_classify = app.add_subcommand("classify", "classification of the reduced module");
    cmd_classify->add_option("file", in_path)->required();
    cmd_classify->add_option("--seed", seed);
    cmd_classify->add_option("--cap", cap);

    auto* cmd_ext = app.add_subcommand("ext", "Ext^{s,t}(F, m) chart (eps = 0 slice)");
    cmd_ext->add_option("file", in_path)->required();
    cmd_ext->add_option("--smax", smax);
    cmd_ext->add_option("--trange", trange, "Adams column range a:b (t-s)");
    cmd_ext->add_option("--format", format)->check(CLI::IsMember({"text", "tsv", "svg"}));
    cmd_ext->add_option("-o,--out", out_path);

    auto* cmd_stext = app.add_subcommand("stext", "Pic-graded stable ext chart");
    cmd_stext->add_option("file", in_path)->required();
    cmd_stext->add_option("--smin", smin);
    cmd_stext->add_option("--smax", smax);
    cmd_stext->add_option("--trange", trange, "Adams column range a:b (t-s)");
    cmd_stext->add_option("--format", format)->check(CLI::IsMember({"text", "tsv", "svg"}));
    cmd_stext->add_option("-o,--out", out_path);

    auto* cmd_verify = app.add_subcommand("verify", "run a theorem-verification suite");
    cmd_verify->add_option("suite", suite_name)->required();
    cmd_verify->add_option("--kmax", vparams.kmax);
    cmd_verify->add_option("--nmax", vparams.nmax);
    cmd_verify->add_option("--weight-max", vparams.weight_max);
    cmd_verify->add_option("--seed", vparams.seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*cmd_build) {
            A1Module m = load(in_path);
            std::cout << "ok: " << m.name << " dim " << m.total_dim() << "\n";
            return kExitOk;
        }
        if (*cmd_family) {
            families::FamilySpec spec;
            spec.kind = family_kind;
            spec.params = family_params;
            if (window_args.size() == 2) spec.window = std::make_pair(window_args[0], window_args[1]);
            A1Module m;
            try {
                m = families::make_family(spec);
            } catch (const std::invalid_argument& e) {
                std::cerr << "usage error: " << e.what() << "\n";
                return kExitUsage;
            }
            emit(io::write_module(m), out_path);
            return kExitOk;
        }
        if (*cmd_margolis) {
            std::cout << profile_report(load(in_path));
            return kExitOk;
        }
        if (*cmd_reduce) {
            ReduceResult r = reduce(load(in_path));
            std::cout << "free_rank " << r.free_rank << "\n";
            std::cout << "reduced dim " << r.reduced.total_dim() << "\n";
            if (!out_path.empty()) emit(io::write_module(r.reduced), out_path);
            return kExitOk;
        }
        if (*cmd_op) {
            A1Module result;
            if (*op_omega) result = omega(load(in_path), op_arg);
            else if (*op_dual) result = dual(load(in_path));
            else if (*op_susp) result = suspend(load(in_path), op_arg);
            else result = tensor(load(in_path), load(in_path2));
            emit(io::write_module(result), out_path);
            return kExitOk;
        }
        if (*cmd_iso) {
            IsoOptions opt;
            opt.seed = seed;
            opt.cap_log2 = cap;
            IsoVerdict v = is_stably_iso(load(in_path), load(in_path2), opt);
            const char* verdict = v.kind == IsoVerdict::Yes   ? "YES"
                                  : v.kind == IsoVerdict::No ? "NO"
                                                             : "INCONCLUSIVE";
            std::cout << "verdict " << verdict << "\n" << v.detail << "\n";
            if (v.witness) {
                std::cout << "witness ranks:";
                for (int n = v.witness->source.min_deg(); n <= v.witness->source.max_deg(); ++n)
                    std::cout << " " << n << ":" << gf2::rank(v.witness->map_at(n));
                std::cout << "\n";
            }
            return kExitOk;
        }
        if (*cmd_classify) {
            IsoOptions opt;
            opt.seed = seed;
            opt.cap_log2 = cap;
            ClassificationResult c = classify(load(in_path), opt);
            switch (c.tag) {
                case ClassificationResult::Picard:
                    std::cout << "picard s=" << c.picard.s << " t=" << c.picard.t
                              << " eps=" << c.picard.eps << "\n";
                    break;
                case ClassificationResult::FiR:
                    std::cout << "fiR d=" << c.d << " i=" << c.i << "\n";
                    break;
                case ClassificationResult::AOrbit:
                    std::cout << "A_orbit d=" << c.d << " k=" << c.k << " eps=" << c.eps
                              << " t=" << c.t << "\n";
                    break;
                case ClassificationResult::Rejected:
                    std::cout << "rejected (" << c.reason << ")\n";
                    break;
            }
            return kExitOk;
        }
        if (*cmd_ext || *cmd_stext) {
            int xlo, xhi;
            if (!parse_range(trange, xlo, xhi)) {
                std::cerr << "usage error: --trange expects a:b\n";
                return kExitUsage;
            }
            if (smax > 20 || smax < smin) {
                std::cerr << "usage error: --smax must lie in [smin, 20]\n";
                return kExitUsage;
            }
            A1Module m = load(in_path);
            ExtChart ch = (*cmd_ext) ? ext_dims(m, smax, xlo, xhi)
                                     : stext_dims(m, smin, smax, xlo, xhi);
            emit(format_chart(ch, format), out_path);
            return kExitOk;
        }
        if (*cmd_verify) {
            const auto& reg = verify::suite_registry();
            std::vector<std::string> names;
            if (suite_name == "all") {
                for (auto& [n, fn] : reg) names.push_back(n);
            } else if (reg.count(suite_name)) {
                names.push_back(suite_name);
            } else {
                std::cerr << "usage error: unknown suite '" << suite_name << "'; available:";
                for (auto& [n, fn] : reg) std::cerr << " " << n;
                std::cerr << " all\n";
                return kExitUsage;
            }
            bool all_ok = true;
            for (auto& n : names) {
                verify::SuiteResult r = reg.at(n)(vparams);
                for (auto& c : r.cases)
                    std::cout << (c.pass ? "PASS" : "FAIL") << " " << r.suite << ": " << c.name
                              << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
                std::cout << r.suite << ": " << r.passed() << "/" << r.cases.size() << " cases\n";
                if (!r.all_pass()) all_ok = false;
            }
            return all_ok ? kExitOk : kExitVerifyFail;
        }
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitUsage;
}
