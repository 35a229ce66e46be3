#include "dwork/cli.hpp"

#include <chrono>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "dwork/oracle.hpp"
#include "dwork/solver.hpp"
#include "dwork/zq.hpp"

namespace dwork {

namespace {

using steady = std::chrono::steady_clock;

mpz_class parse_int(const std::string& s) {
    try {
        return mpz_class(s);
    } catch (const std::invalid_argument&) {
        fail(errc::invalid_argument, "not an integer: '" + s + "'");
    }
}

long as_long(const mpz_class& x, const char* what) {
    if (!x.fits_slong_p()) fail(errc::invalid_argument, std::string(what) + " too large");
    return x.get_si();
}

std::vector<long> base_digits(const mpz_class& v, long p, long n) {
    std::vector<long> d((size_t)n, 0);
    mpz_class r = v;
    for (long i = 0; i < n && r != 0; ++i)
        d[(size_t)i] = (long)mpz_tdiv_q_ui(r.get_mpz_t(), r.get_mpz_t(), (unsigned long)p);
    return d;
}

long elapsed_ms(steady::time_point t0) {
    return (long)std::chrono::duration_cast<std::chrono::milliseconds>(steady::now() - t0).count();
}

void emit_value(std::ostream& out, const std::string& mode, nlohmann::json meta,
                const mpz_class& value, long p, long n, long ms, const std::string& method) {
    if (mode == "json") {
        meta["value"] = value.get_str();
        meta["digits"] = base_digits(value, p, n);
        meta["runtime_ms"] = ms;
        meta["method"] = method;
        out << meta.dump() << "\n";
    } else if (mode == "digits") {
        auto d = base_digits(value, p, n);
        for (long i = 0; i < n; ++i) out << (i ? " " : "") << d[(size_t)i];
        out << "\n";
    } else {
        out << value.get_str() << "\n";
    }
}

struct job {
    long p = 5;
    long n = 1;
    long guard = 0;
    std::string a = "1/2";
    std::string b = "1/2";
    std::string alpha = "2";
    std::string c = "1";
    std::string out_mode = "decimal";
    std::string arg;          // digamma argument "i/N"
    std::string n_list;       // bench precisions "25,50,100"
    std::string kind = "value"; // oracle flavour
    bool compare = false;
};

nlohmann::json base_meta(const job& J) {
    nlohmann::json m;
    m["p"] = J.p;
    m["n"] = J.n;
    m["a"] = J.a;
    m["b"] = J.b;
    m["alpha"] = J.alpha;
    m["c"] = J.c;
    return m;
}

int cmd_eval(const job& J, std::ostream& out) {
    auto t0 = steady::now();
    solve_options opt;
    opt.guard = J.guard;
    mpz_class v = dwork_value(J.p, J.n, rat_parse(J.a), rat_parse(J.b), parse_int(J.alpha),
                              parse_int(J.c), opt);
    emit_value(out, J.out_mode, base_meta(J), v, J.p, J.n, elapsed_ms(t0), "frobenius-chain");
    return 0;
}

int cmd_df(const job& J, std::ostream& out) {
    auto t0 = steady::now();
    solve_options opt;
    opt.guard = J.guard;
    mpz_class v = df_value(J.p, J.n, rat_parse(J.a), rat_parse(J.b), parse_int(J.alpha), opt);
    emit_value(out, J.out_mode, base_meta(J), v, J.p, J.n, elapsed_ms(t0), "frobenius-chain");
    return 0;
}

int cmd_oracle(const job& J, std::ostream& out) {
    if (J.kind != "value" && J.kind != "df")
        fail(errc::invalid_argument, "oracle kind must be 'value' or 'df'");
    rat a = rat_parse(J.a), b = rat_parse(J.b);
    mpz_class alpha = parse_int(J.alpha), c = parse_int(J.c);
    auto t0 = steady::now();
    mpz_class ov = J.kind == "df" ? oracle_df(J.p, J.n, a, b, alpha)
                                  : oracle_dwork(J.p, J.n, a, b, alpha, c);
    if (!J.compare) {
        emit_value(out, J.out_mode, base_meta(J), ov, J.p, J.n, elapsed_ms(t0),
                   J.kind == "df" ? "truncated-derivative" : "truncated-ratio");
        return 0;
    }
    solve_options opt;
    opt.guard = J.guard;
    mpz_class sv = J.kind == "df" ? df_value(J.p, J.n, a, b, alpha, opt)
                                  : dwork_value(J.p, J.n, a, b, alpha, c, opt);
    if (sv != ov)
        fail(errc::internal_consistency, "paths disagree mod " + std::to_string(J.p) + "^" +
                                             std::to_string(J.n) + ": chain=" + sv.get_str() +
                                             " truncated=" + ov.get_str());
    out << "agree mod " << J.p << "^" << J.n << "\n";
    return 0;
}

int cmd_check(const job& J, std::ostream& out) {
    condition_report cr = check_condition(J.p, rat_parse(J.a), rat_parse(J.b), parse_int(J.alpha));
    if (cr.ok) {
        out << "ok\n";
        return 0;
    }
    out << "fail at orbit index " << cr.fail_index << "\n";
    return errc_exit_code(errc::condition_violated);
}

int cmd_digamma(const job& J, std::ostream& out) {
    rat r = rat_parse(J.arg);
    long N = as_long(r.den, "argument denominator");
    long i = as_long(r.num, "argument numerator");
    long j = J.n;
    if (j < 1) fail(errc::invalid_precision, "n must be >= 1");
    auto t0 = steady::now();
    long nu = j + 2 * (ilog(J.p, j + 25) + 2) + 8 + J.guard;
    context ctx = ctx_new(J.p, nu);
    mpz_class v = residue(ctx, psi_tilde(ctx, i, N), j);
    nlohmann::json meta;
    meta["p"] = J.p;
    meta["n"] = j;
    meta["arg"] = J.arg;
    emit_value(out, J.out_mode, meta, v, J.p, j, elapsed_ms(t0), "cyclotomic-log");
    return 0;
}

int cmd_bench(const job& J, std::ostream& out) {
    std::vector<long> ns;
    std::stringstream ss(J.n_list);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t pos = 0;
            long v = std::stol(tok, &pos);
            if (pos != tok.size() || v < 1) throw std::invalid_argument(tok);
            ns.push_back(v);
        } catch (const std::exception&) {
            fail(errc::invalid_argument, "bad precision list entry: '" + tok + "'");
        }
    }
    if (ns.empty()) fail(errc::invalid_argument, "empty precision list");
    rat a = rat_parse(J.a), b = rat_parse(J.b);
    mpz_class alpha = parse_int(J.alpha), c = parse_int(J.c);
    solve_options opt;
    opt.guard = J.guard;
    nlohmann::json rows = nlohmann::json::array();
    if (J.out_mode != "json") out << "n,e_n,dstar,ms,ratio\n";
    double prev = 0;
    for (long n : ns) {
        e_info e = e_bound(J.p, n);
        auto t0 = steady::now();
        dwork_value(J.p, n, a, b, alpha, c, opt);
        double ms = (double)std::chrono::duration_cast<std::chrono::microseconds>(steady::now() -
                                                                                  t0)
                        .count() /
                    1000.0;
        double ratio = prev > 0 ? ms / prev : 0;
        if (J.out_mode == "json") {
            nlohmann::json row;
            row["n"] = n;
            row["e_n"] = e.e;
            row["dstar"] = e.dstar;
            row["ms"] = ms;
            if (prev > 0)
                row["ratio"] = ratio;
            else
                row["ratio"] = nullptr;
            rows.push_back(row);
        } else {
            out << n << "," << e.e << "," << e.dstar << "," << ms << ",";
            if (prev > 0) out << ratio;
            out << "\n";
        }
        prev = ms;
    }
    if (J.out_mode == "json") out << rows.dump() << "\n";
    return 0;
}

} // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"special values of Dwork's p-adic hypergeometric function"};
    app.name("dworkhg");
    app.require_subcommand(1);
    job J;

    auto* eval = app.add_subcommand("eval", "hypergeometric ratio value mod p^n");
    auto* df = app.add_subcommand("df", "logarithmic derivative F'/F mod p^n");
    auto* oracle = app.add_subcommand("oracle", "brute-force truncation evaluator");
    auto* check = app.add_subcommand("check", "nonvanishing condition over the orbit");
    auto* digamma = app.add_subcommand("digamma", "p-adic digamma value mod p^n");
    auto* bench = app.add_subcommand("bench", "runtime table over a precision list");

    for (CLI::App* sc : {eval, df, oracle, check, digamma, bench}) {
        sc->add_option("--p", J.p, "odd prime")->required();
        sc->add_option("--out", J.out_mode, "output form")
            ->check(CLI::IsMember({"decimal", "digits", "json"}));
    }
    for (CLI::App* sc : {eval, df, oracle, check, bench}) {
        sc->add_option("--a", J.a, "first parameter, reduced fraction")->required();
        sc->add_option("--b", J.b, "second parameter, reduced fraction")->required();
        sc->add_option("--alpha", J.alpha, "evaluation point")->required();
    }
    for (CLI::App* sc : {eval, df, oracle, digamma}) sc->add_option("--n", J.n, "target exponent")->required();
    for (CLI::App* sc : {eval, oracle, bench}) sc->add_option("--c", J.c, "twist constant, 1 mod p");
    for (CLI::App* sc : {eval, df, oracle, digamma, bench})
        sc->add_option("--guard", J.guard, "extra working digits")->check(CLI::NonNegativeNumber);
    oracle->add_flag("--compare", J.compare, "run both paths and require agreement");
    oracle->add_option("--kind", J.kind, "value or df")->check(CLI::IsMember({"value", "df"}));
    digamma->add_option("--arg", J.arg, "argument i/N with p not dividing N")->required();
    bench->add_option("--n-list", J.n_list, "comma-separated precisions")->required();

    try {
        std::vector<const char*> argv;
        argv.push_back("dworkhg");
        for (const auto& s : args) argv.push_back(s.c_str());
        app.parse((int)argv.size(), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "invalid usage: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(eval)) return cmd_eval(J, out);
        if (app.got_subcommand(df)) return cmd_df(J, out);
        if (app.got_subcommand(oracle)) return cmd_oracle(J, out);
        if (app.got_subcommand(check)) return cmd_check(J, out);
        if (app.got_subcommand(digamma)) return cmd_digamma(J, out);
        if (app.got_subcommand(bench)) return cmd_bench(J, out);
    } catch (const error& e) {
        err << e.what() << "\n";
        return errc_exit_code(e.code);
    } catch (const std::exception& e) {
        err << errc_name(errc::internal_consistency) << ": " << e.what() << "\n";
        return errc_exit_code(errc::internal_consistency);
    }
    return 2;
}

} // namespace dwork
