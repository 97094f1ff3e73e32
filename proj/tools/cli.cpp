#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <random>

#include "CLI11.hpp"
#include "json.hpp"
#include "lgint/class_parser.hpp"
#include "lgint/combinat.hpp"
#include "lgint/errors.hpp"
#include "lgint/geometry.hpp"
#include "lgint/idlab.hpp"
#include "lgint/integrate.hpp"
#include "lgint/symclasses.hpp"

namespace lgint::cli {

namespace {

using json = nlohmann::json;

json count_json(const Integer& z) {
    if (z.fits_slong_p()) return json(z.get_si());
    return json(z.get_str());
}

void check_rank(unsigned n) {
    if (n < 1 || n > kMaxRank)
        throw std::invalid_argument("-n must satisfy 1 <= n <= " + std::to_string(kMaxRank));
}

struct Options {
    unsigned n = 0;
    bool json = false;
    std::string class_text;
    std::string a, b, c;
    std::string route = "main";
    std::optional<std::uint64_t> seed;
    unsigned trials = 50;
    std::string check;
    bool cross_check = false;
};

void emit(std::ostream& out, const Options& opt, const json& record, const std::string& text) {
    if (opt.json)
        out << record.dump() << '\n';
    else
        out << text << '\n';
}

int cmd_degree(const Options& opt, std::ostream& out) {
    check_rank(opt.n);
    Integer deg = degree_lg(opt.n);
    json rec = {{"n", opt.n}, {"degree", deg.get_str()}};
    if (opt.cross_check) {
        Integer via = degree_lg_via_integral(opt.n);
        rec["via_integral"] = via.get_str();
        if (via != deg)
            throw IntegralityError("closed-form degree " + deg.get_str() + " differs from integral " +
                                   via.get_str());
    }
    emit(out, opt, rec, deg.get_str());
    return kExitOk;
}

int cmd_integral(const Options& opt, std::ostream& out, std::ostream& err) {
    check_rank(opt.n);
    ClassExpr c = parse_class_expr(opt.class_text, opt.n);
    const Route route = parse_route(opt.route);
    if (has_lower_degree_terms(c, opt.n))
        err << "warning: terms of degree below " << lg_dimension(opt.n) << " integrate to zero\n";
    std::optional<std::vector<Rational>> lambdas;
    if (opt.seed) {
        std::mt19937_64 rng(*opt.seed);
        lambdas = random_admissible_lambdas(opt.n, rng);
    }
    auto cert = certify(c, opt.n, route, lambdas);
    json rec = {{"n", cert.n},
                {"route", std::string(route_name(cert.route))},
                {"c_n", to_string(cert.c_n)},
                {"integral", to_string(cert.integral)}};
    emit(out, opt, rec, to_string(cert.integral));
    return kExitOk;
}

int cmd_qtilde(const Options& opt, std::ostream& out) {
    check_rank(opt.n);
    StrictPartition a = parse_partition(opt.a);
    ClassExpr q = qtilde(a, opt.n);
    json rec = {{"n", opt.n}, {"partition", a.to_string()}, {"class", q.to_string()}};
    emit(out, opt, rec, q.to_string());
    return kExitOk;
}

int cmd_triple(const Options& opt, std::ostream& out, bool quantum) {
    check_rank(opt.n);
    StrictPartition a = parse_partition(opt.a), b = parse_partition(opt.b), c = parse_partition(opt.c);
    Integer value = quantum ? gw1(a, b, c, opt.n) : structure_constant(a, b, c, opt.n);
    json rec = {{"n", opt.n}, {"a", a.to_string()}, {"b", b.to_string()}, {"c", c.to_string()},
                {"coef", count_json(value)}};
    emit(out, opt, rec, value.get_str());
    return kExitOk;
}

int cmd_qprod(const Options& opt, std::ostream& out) {
    check_rank(opt.n);
    auto qp = quantum_product(parse_partition(opt.a), parse_partition(opt.b), opt.n);
    auto entries = [](const std::map<StrictPartition, Integer>& m) {
        json arr = json::array();
        for (auto it = m.rbegin(); it != m.rend(); ++it)
            if (it->second != 0) arr.push_back({{"gamma", it->first.to_string()}, {"coef", count_json(it->second)}});
        return arr;
    };
    json rec = {{"n", qp.n},
                {"a", qp.a.to_string()},
                {"b", qp.b.to_string()},
                {"classical", entries(qp.classical)},
                {"q1", entries(qp.quantum1)}};
    emit(out, opt, rec, qp.to_string());
    return kExitOk;
}

int cmd_verify(const Options& opt, std::ostream& out) {
    const std::uint64_t seed = opt.seed.value_or(0);
    VerifyReport report;
    if (opt.check == "lemma1") {
        report = verify_lemma1(seed, opt.trials);
    } else {
        check_rank(opt.n);
        if (opt.check == "identity")
            report = verify_identity(opt.n, seed, opt.trials);
        else if (opt.check == "lemma2")
            report = verify_lemma2(opt.n, seed, opt.trials);
        else if (opt.check == "relation")
            report = verify_relation(opt.n, seed, opt.trials);
        else
            throw std::invalid_argument("unknown check \"" + opt.check + "\"");
    }
    json rec = {{"check", report.check}, {"n", report.n},           {"seed", report.seed},
                {"trials", report.trials}, {"passed", report.passed}, {"ok", report.ok()}};
    emit(out, opt, rec,
         report.check + " n=" + std::to_string(report.n) + " seed=" + std::to_string(report.seed) +
             " trials=" + std::to_string(report.trials) + " passed=" + std::to_string(report.passed));
    return report.ok() ? kExitOk : kExitAssertion;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact intersection theory on Lagrangian Grassmannians LG(n)", "lgint"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub, bool need_n = true) {
        auto* n = sub->add_option("-n", opt.n, "Rank n of LG(n), 1..6");
        if (need_n) n->required();
        sub->add_flag("--json", opt.json, "Emit a JSON record");
    };

    auto* degree = app.add_subcommand("degree", "Degree of LG(n) in its Pluecker embedding");
    add_common(degree);
    degree->add_flag("--cross-check", opt.cross_check, "Also integrate sigma_1^N and compare");

    auto* integral = app.add_subcommand("integral", "Integrate a class over LG(n)");
    add_common(integral);
    integral->add_option("--class", opt.class_text, "Class expression, e.g. \"s1^2*s2^2\"")->required();
    integral->add_option("--route", opt.route, "main | dp | localization")
        ->check(CLI::IsMember({"main", "dp", "localization"}));
    integral->add_option("--seed", opt.seed, "Random admissible weights for the localization route");

    auto* qt = app.add_subcommand("qtilde", "Expand Q~_a in the special classes");
    add_common(qt);
    qt->add_option("--a", opt.a, "Strict partition, e.g. 4,2,1")->required();

    auto* structure = app.add_subcommand("structure", "Schubert structure constant e_{a,b}^c");
    auto* gw = app.add_subcommand("gw1", "Degree-1 Gromov-Witten invariant <s_a, s_b, s_c>_1");
    for (auto* sub : {structure, gw}) {
        add_common(sub);
        sub->add_option("--a", opt.a, "Strict partition")->required();
        sub->add_option("--b", opt.b, "Strict partition")->required();
        sub->add_option("--c", opt.c, "Strict partition")->required();
    }

    auto* qprod = app.add_subcommand("qprod", "Quantum product s_a * s_b in qH*(LG(n))");
    add_common(qprod);
    qprod->add_option("--a", opt.a, "Strict partition")->required();
    qprod->add_option("--b", opt.b, "Strict partition")->required();

    auto* verify = app.add_subcommand("verify", "Randomised checks of the underlying identities");
    add_common(verify, false);
    verify->add_option("check", opt.check, "identity | lemma1 | lemma2 | relation")
        ->required()
        ->check(CLI::IsMember({"identity", "lemma1", "lemma2", "relation"}));
    verify->add_option("--seed", opt.seed, "Random seed (default 0)");
    verify->add_option("--trials", opt.trials, "Number of random instances");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (degree->parsed()) return cmd_degree(opt, out);
        if (integral->parsed()) return cmd_integral(opt, out, err);
        if (qt->parsed()) return cmd_qtilde(opt, out);
        if (structure->parsed()) return cmd_triple(opt, out, false);
        if (gw->parsed()) return cmd_triple(opt, out, true);
        if (qprod->parsed()) return cmd_qprod(opt, out);
        if (verify->parsed()) return cmd_verify(opt, out);
    } catch (const IntegralityError& e) {
        err << "assertion failed: " << e.what() << '\n';
        return kExitAssertion;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace lgint::cli
