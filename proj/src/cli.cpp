#include "qschur/cli.hpp"

#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qschur/json_io.hpp"
#include "qschur/verify.hpp"

namespace qschur {

namespace {

Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    if (!text.empty()) {
        std::istringstream is(text);
        std::string tok;
        while (std::getline(is, tok, ','))
            parts.push_back(std::stoi(tok));
    }
    return Partition(std::move(parts));
}

bool parse_window(const std::string& text, int& lo, int& hi) {
    auto sep = text.find("..", 1); // a leading '-' is part of LO
    if (sep == std::string::npos)
        return false;
    try {
        lo = std::stoi(text.substr(0, sep));
        hi = std::stoi(text.substr(sep + 2));
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

struct VerifyOptions {
    int n = 3;
    int r = 2;
    std::string window;
    int t_max = 2;
    int r_max = 6;
    int dn = 7;
    int count = 200;
    int max_total = 5;
    std::uint64_t seed = 987654321;
    std::string which = "En";
    bool json = false;
};

SuiteConfig config_of(const VerifyOptions& opt) {
    SuiteConfig cfg = SuiteConfig::make(opt.n, opt.r);
    cfg.t_max = opt.t_max;
    cfg.seed = opt.seed;
    if (!opt.window.empty()) {
        if (!parse_window(opt.window, cfg.window_lo, cfg.window_hi))
            throw CLI::ValidationError("--window", "expected LO..HI");
    }
    return cfg;
}

int emit(const std::vector<Report>& reports, bool json) {
    bool failed = false;
    for (const auto& rep : reports) {
        print_report(rep, json, std::cout);
        failed = failed || !rep.ok();
    }
    return failed ? 1 : 0;
}

} // namespace

int cli_main(const std::vector<std::string>& args) {
    CLI::App app{"exact verification suites for tensor representations of "
                 "quantum affine gl_n and affine Hecke algebras"};
    app.require_subcommand(1);

    VerifyOptions opt;
    std::string lambda_text;
    int scalar_t = 1;
    std::string sign_text = "plus";

    auto add_common = [&](CLI::App* cmd, bool window = true) {
        cmd->add_option("--n", opt.n, "alphabet modulus n");
        cmd->add_option("--r", opt.r, "tensor rank r");
        if (window)
            cmd->add_option("--window", opt.window,
                            "index window LO..HI (default -n..2n)");
        cmd->add_option("--t-max", opt.t_max, "largest central power");
        cmd->add_option("--seed", opt.seed, "seed for randomized checks");
        cmd->add_flag("--json", opt.json, "emit JSON reports");
    };

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->require_subcommand(1);
    CLI::App* v_qgl = verify->add_subcommand("qgl", "quantum group relations");
    add_common(v_qgl);
    CLI::App* v_hecke =
        verify->add_subcommand("hecke", "affine Hecke action relations");
    add_common(v_hecke);
    CLI::App* v_comm =
        verify->add_subcommand("commuting", "left/right actions commute");
    add_common(v_comm);
    CLI::App* v_eval =
        verify->add_subcommand("eval-compat", "evaluation compatibility");
    add_common(v_eval, false);
    v_eval->add_option("--which", opt.which, "En (asserted) or Fn (report-only)")
        ->check(CLI::IsMember({"En", "Fn"}));
    CLI::App* v_lem = verify->add_subcommand("lemmas", "closed formulas");
    add_common(v_lem);
    CLI::App* v_jm =
        verify->add_subcommand("jm", "Murphy operator congruences");
    v_jm->add_option("--r", opt.r, "rank (at most 5)");
    v_jm->add_option("--t-max", opt.t_max, "largest power");
    v_jm->add_flag("--json", opt.json, "emit JSON reports");
    CLI::App* v_dr =
        verify->add_subcommand("drinfeld", "Drinfeld polynomial identities");
    v_dr->add_option("--r-max", opt.r_max, "largest partition size");
    v_dr->add_option("--n", opt.dn, "tuple length (must exceed r-max)");
    v_dr->add_option("--seed", opt.seed, "seed");
    v_dr->add_flag("--json", opt.json, "emit JSON reports");
    CLI::App* v_rt = verify->add_subcommand("roundtrip",
                                            "multisegment round trip");
    v_rt->add_option("--count", opt.count, "number of random multisegments");
    v_rt->add_option("--max-total", opt.max_total, "largest total length");
    v_rt->add_option("--n", opt.dn, "tuple length (must exceed max-total)");
    v_rt->add_option("--seed", opt.seed, "seed");
    v_rt->add_flag("--json", opt.json, "emit JSON reports");
    CLI::App* v_all = verify->add_subcommand("all", "every suite");
    add_common(v_all);

    CLI::App* drinfeld =
        app.add_subcommand("drinfeld", "Drinfeld polynomial computations");
    drinfeld->require_subcommand(1);
    CLI::App* d_from =
        drinfeld->add_subcommand("from-partition", "tuple of a partition");
    d_from->add_option("--lambda", lambda_text, "partition, e.g. 2,1")
        ->required();
    d_from->add_option("--n", opt.dn, "tuple length");
    d_from->add_flag("--json", opt.json, "emit JSON");

    CLI::App* segments =
        app.add_subcommand("segments", "multisegment computations");
    segments->require_subcommand(1);
    CLI::App* s_from =
        segments->add_subcommand("from-partition", "multisegment of a partition");
    s_from->add_option("--lambda", lambda_text, "partition, e.g. 2,1")
        ->required();
    s_from->add_flag("--json", opt.json, "emit JSON");

    CLI::App* cscalar =
        app.add_subcommand("central-scalar", "central element scalar");
    cscalar->add_option("--lambda", lambda_text, "partition")->required();
    cscalar->add_option("--t", scalar_t, "power t >= 1");
    cscalar->add_option("--sign", sign_text, "plus or minus")
        ->check(CLI::IsMember({"plus", "minus"}));
    cscalar->add_flag("--json", opt.json, "emit JSON");

    std::string word_text, tensor_text;
    CLI::App* hecke = app.add_subcommand("hecke", "finite Hecke computations");
    hecke->require_subcommand(1);
    CLI::App* h_murphy =
        hecke->add_subcommand("murphy", "Murphy basis of a shape");
    h_murphy->add_option("--lambda", lambda_text, "partition")->required();
    h_murphy->add_flag("--json", opt.json, "emit JSON");
    CLI::App* h_ev = hecke->add_subcommand(
        "ev", "evaluate an affine word, e.g. \"T1 X2 X2^-1\"");
    h_ev->add_option("--word", word_text, "affine word")->required();
    h_ev->add_option("--r", opt.r, "rank");
    h_ev->add_flag("--json", opt.json, "emit JSON");

    CLI::App* tensor = app.add_subcommand("tensor", "tensor space computations");
    tensor->require_subcommand(1);
    CLI::App* t_eps = tensor->add_subcommand(
        "eps", "project a pure tensor onto the finite alphabet");
    t_eps->add_option("--tensor", tensor_text, "pure tensor, e.g. w[0,1]")
        ->required();
    t_eps->add_option("--n", opt.n, "alphabet modulus");
    t_eps->add_flag("--json", opt.json, "emit JSON");

    std::vector<const char*> argv;
    argv.push_back("qschur");
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()),
                  const_cast<char**>(argv.data()));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        std::cerr << app.help() << "\n";
        return 2;
    }

    try {
        if (v_qgl->parsed())
            return emit({verify_qgl(config_of(opt))}, opt.json);
        if (v_hecke->parsed())
            return emit({verify_affine_hecke(config_of(opt))}, opt.json);
        if (v_comm->parsed())
            return emit({verify_commuting(config_of(opt))}, opt.json);
        if (v_eval->parsed()) {
            EvalWhich which = opt.which == "En" ? EvalWhich::En : EvalWhich::Fn;
            return emit({verify_eval_compat(config_of(opt), which)}, opt.json);
        }
        if (v_lem->parsed())
            return emit({verify_lemmas(config_of(opt))}, opt.json);
        if (v_jm->parsed())
            return emit({verify_jm(opt.r, opt.t_max)}, opt.json);
        if (v_dr->parsed())
            return emit({verify_drinfeld(opt.r_max, opt.dn, opt.seed)}, opt.json);
        if (v_rt->parsed())
            return emit({verify_roundtrip(opt.count, opt.max_total, opt.dn,
                                          opt.seed)},
                        opt.json);
        if (v_all->parsed()) {
            SuiteConfig cfg = config_of(opt);
            std::vector<Report> reports;
            reports.push_back(verify_qgl(cfg));
            reports.push_back(verify_affine_hecke(cfg));
            reports.push_back(verify_commuting(cfg));
            reports.push_back(verify_eval_compat(cfg, EvalWhich::En));
            reports.push_back(verify_eval_compat(cfg, EvalWhich::Fn));
            reports.push_back(verify_lemmas(cfg));
            reports.push_back(verify_jm(cfg.r, cfg.t_max));
            reports.push_back(verify_drinfeld(opt.r_max, opt.dn, opt.seed));
            reports.push_back(
                verify_roundtrip(opt.count, opt.max_total, opt.dn, opt.seed));
            return emit(reports, opt.json);
        }
        if (d_from->parsed()) {
            DrinfeldTuple Q = Q_from_lambda(parse_partition(lambda_text), opt.dn);
            if (opt.json) {
                std::cout << drinfeld_json(Q).dump(2) << "\n";
            } else {
                for (int i = 0; i < Q.n(); ++i)
                    std::cout << "Q_" << (i + 1) << "(u) = " << Q.polys[i].str()
                              << "\n";
            }
            return 0;
        }
        if (s_from->parsed()) {
            Multisegment s = s_lambda_a(parse_partition(lambda_text));
            if (opt.json)
                std::cout << multisegment_json(s).dump(2) << "\n";
            else
                std::cout << s.str() << "\n";
            return 0;
        }
        if (cscalar->parsed()) {
            Sign sign = sign_text == "plus" ? Sign::plus : Sign::minus;
            LaurentQA c = central_scalar(parse_partition(lambda_text), scalar_t,
                                         sign);
            if (opt.json)
                std::cout << laurent_json(c).dump(2) << "\n";
            else
                std::cout << c.str() << "\n";
            return 0;
        }
        if (h_ev->parsed()) {
            HeckeElt image = ev_a(parse_affine_word(word_text, opt.r), opt.r);
            if (opt.json)
                std::cout << hecke_json(image).dump(2) << "\n";
            else
                std::cout << image.str() << "\n";
            return 0;
        }
        if (t_eps->parsed()) {
            TensorElt v =
                TensorElt::pure(parse_pure_tensor(tensor_text), opt.n);
            TensorElt image = eps_a(v);
            if (opt.json)
                std::cout << tensor_json(image).dump(2) << "\n";
            else
                std::cout << image.str() << "\n";
            return 0;
        }
        if (h_murphy->parsed()) {
            Partition la = parse_partition(lambda_text);
            auto tabs = std_tableaux(la);
            if (opt.json) {
                ordered_json arr = ordered_json::array();
                for (const auto& s : tabs)
                    for (const auto& t : tabs) {
                        ordered_json entry;
                        entry["s"] = s.str();
                        entry["t"] = t.str();
                        entry["elt"] = hecke_json(murphy_basis_elt(la, s, t));
                        arr.push_back(std::move(entry));
                    }
                std::cout << arr.dump(2) << "\n";
            } else {
                for (const auto& s : tabs)
                    for (const auto& t : tabs)
                        std::cout << "x(" << s.str() << " ; " << t.str()
                                  << ") = " << murphy_basis_elt(la, s, t).str()
                                  << "\n";
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace qschur
