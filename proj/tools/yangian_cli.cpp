// Command-line front end: pole sets, Baxter polynomials, criteria and explicit modules.

#include <yangian/yangian.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

using namespace yangian;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_internal = 1;
constexpr int exit_usage = 2;
constexpr int exit_inconclusive = 3;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct type_opts {
    std::string family = "A";
    int rank = 1;
    void add(CLI::App* app)
    {
        app->add_option("--type", family, "Lie type: A B C D E F G")->required();
        app->add_option("--rank", rank, "rank")->required();
    }
    cartan_datum datum() const
    {
        if (family.size() != 1)
            throw invalid_type("type must be a single letter, got '" + family + "'");
        return build_cartan(family[0], rank);
    }
};

bool json_mode = false;

void emit(const json& j, const std::string& text)
{
    if (json_mode)
        std::cout << j.dump() << "\n";
    else
        std::cout << text;
}

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw usage_error("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw usage_error(path + ": " + e.what());
    }
}

drinfeld_tuple read_tuple(const std::string& path, const cartan_datum& c)
{
    try {
        return drinfeld_from_json(read_json_file(path), c);
    } catch (const std::invalid_argument& e) {
        throw usage_error(path + ": " + e.what());
    } catch (const json::exception& e) {
        throw usage_error(path + ": " + e.what());
    }
}

void check_node(const cartan_datum& c, int i, const char* flag)
{
    if (i < 1 || i > c.rank)
        throw usage_error(std::string(flag) + " must lie in 1.." + std::to_string(c.rank));
}

std::string set_text(const point_set& s)
{
    std::string out = "{";
    for (const auto& p : s)
        out += (out.size() > 1 ? ", " : "") + p.str();
    return out + "}";
}

std::string multiset_text(const pole_multiset& m)
{
    std::string out = "{";
    for (const auto& [p, mult] : m.points())
        out += (out.size() > 1 ? ", " : "") + p.str() + (mult > 1 ? "^" + std::to_string(mult) : "");
    return out + "}";
}

rational parse_point(const std::string& s)
{
    try {
        return parse_rational(s);
    } catch (const std::exception&) {
        throw usage_error("not a rational number: '" + s + "'");
    }
}

int run_selftest()
{
    bool all = true;
    json report = json::array();
    for (const auto& criterion : acceptance::all_criteria()) {
        const acceptance::result r = criterion();
        all = all && r.pass;
        report.push_back({{"criterion", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}});
        if (!json_mode)
            std::cout << "criterion " << r.id << " " << (r.pass ? "PASS" : "FAIL") << ": " << r.title << " ("
                      << r.detail << ")\n"
                      << std::flush;
    }
    if (json_mode)
        std::cout << json{{"pass", all}, {"criteria", report}}.dump() << "\n";
    return all ? exit_ok : exit_internal;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Pole sets and Baxter polynomials of Yangian representations"};
    app.require_subcommand(1);
    app.fallthrough(); // subcommands inherit this, so --json may follow them
    app.add_flag("--json", json_mode, "emit one JSON document");

    type_opts t_cartan, t_qcartan, t_baxter, t_poles, t_sigma, t_kr, t_cyclic, t_irr, t_adm, t_cox;
    int i = 1, j = 1, ell = 1, node = 1;
    std::string p_file, q_file;

    auto* cartan_cmd = app.add_subcommand("cartan", "Cartan datum");
    t_cartan.add(cartan_cmd);

    auto* qcartan_cmd = app.add_subcommand("qcartan", "B(q), C(q) and the v-windows");
    t_qcartan.add(qcartan_cmd);

    auto* baxter_cmd = app.add_subcommand("baxter", "Baxter root multiset");
    t_baxter.add(baxter_cmd);
    baxter_cmd->add_option("--i", i, "node of the pole set");
    auto* baxter_j = baxter_cmd->add_option("--j", j, "fundamental node");
    auto* baxter_file = baxter_cmd->add_option("--drinfeld", p_file, "Drinfeld tuple JSON file");
    baxter_j->excludes(baxter_file);

    auto* poles_cmd = app.add_subcommand("poles", "sigma_i of a fundamental module");
    t_poles.add(poles_cmd);
    poles_cmd->add_option("--i", i)->required();
    poles_cmd->add_option("--j", j)->required();

    auto* sigma_cmd = app.add_subcommand("sigma", "sigma_i of an irreducible module");
    t_sigma.add(sigma_cmd);
    sigma_cmd->add_option("--drinfeld", p_file, "Drinfeld tuple JSON file")->required();
    auto* sigma_node = sigma_cmd->add_option("--node", node, "node i; omit for the full set");

    auto* kr_cmd = app.add_subcommand("kr", "poles of a Kirillov-Reshetikhin module");
    t_kr.add(kr_cmd);
    kr_cmd->add_option("--i", i)->required();
    kr_cmd->add_option("--j", j)->required();
    kr_cmd->add_option("--ell", ell)->required()->check(CLI::PositiveNumber);

    auto* cyclic_cmd = app.add_subcommand("cyclic", "sufficient highest-weight test for L(P) x L(Q)");
    t_cyclic.add(cyclic_cmd);
    cyclic_cmd->add_option("--P", p_file)->required();
    cyclic_cmd->add_option("--Q", q_file)->required();

    auto* irr_cmd = app.add_subcommand("irreducible", "sufficient irreducibility test for L(P) x L(Q)");
    t_irr.add(irr_cmd);
    irr_cmd->add_option("--P", p_file)->required();
    irr_cmd->add_option("--Q", q_file)->required();

    auto* adm_cmd = app.add_subcommand("double-admissible", "Yangian double admissibility of L(P)");
    t_adm.add(adm_cmd);
    adm_cmd->add_option("--P", p_file)->required();

    int n = 2, m = 1, verify_depth = -1, poles_node = 0;
    std::string a_text = "0";
    bool want_chain = false;
    auto* slnrep_cmd = app.add_subcommand("slnrep", "explicit sl_n fundamental modules");
    slnrep_cmd->require_subcommand(1);
    auto* build_cmd = slnrep_cmd->add_subcommand("build", "build L_{varpi_m}(a) for sl_n");
    build_cmd->add_option("--n", n)->required()->check(CLI::Range(2, 64));
    build_cmd->add_option("--m", m)->required();
    build_cmd->add_option("--a", a_text, "evaluation point, e.g. 1/2");
    build_cmd->add_option("--verify", verify_depth, "check relations up to index R")->check(CLI::NonNegativeNumber);
    build_cmd->add_flag("--chain", want_chain, "print a maximal chain");
    build_cmd->add_option("--poles", poles_node, "print poles at this node");

    int r = 1;
    std::vector<std::string> factors;
    auto* sl2_cmd = app.add_subcommand("sl2", "sl2 evaluation modules and their tensor products");
    sl2_cmd->add_option("--r", r, "dimension minus one")->check(CLI::NonNegativeNumber);
    sl2_cmd->add_option("--a", a_text, "evaluation point");
    sl2_cmd->add_option("--factor", factors, "r:a factor of a tensor product (repeatable)");
    sl2_cmd->add_option("--verify", verify_depth, "check relations up to index R")->check(CLI::NonNegativeNumber);

    auto* cox_cmd = app.add_subcommand("coxeter", "Coxeter element checks");
    cox_cmd->require_subcommand(1);
    auto* cox_verify = cox_cmd->add_subcommand("verify", "positivity and v_ij via the Coxeter element");
    t_cox.add(cox_verify);

    auto* selftest_cmd = app.add_subcommand("selftest", "run the acceptance suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*cartan_cmd) {
            const cartan_datum c = t_cartan.datum();
            std::string text = "type " + c.name() + ", 2kappa = " + std::to_string(c.two_kappa) +
                               ", dual Coxeter number " + std::to_string(c.dual_coxeter) + "\nd =";
            for (int k = 1; k <= c.rank; ++k)
                text += " " + std::to_string(c.d(k));
            text += "\nstar =";
            for (int k = 1; k <= c.rank; ++k)
                text += " " + std::to_string(c.star(k));
            text += "\nCartan matrix:\n";
            for (int a = 1; a <= c.rank; ++a) {
                for (int b = 1; b <= c.rank; ++b)
                    text += (b > 1 ? " " : "") + std::to_string(c.a(a, b));
                text += "\n";
            }
            emit(cartan_to_json(c), text);
        } else if (*qcartan_cmd) {
            const qcartan_data qc(t_qcartan.datum());
            const int rank = qc.datum().rank;
            std::string text;
            for (int a = 1; a <= rank; ++a)
                for (int b = 1; b <= rank; ++b) {
                    text += "c_" + std::to_string(a) + "," + std::to_string(b) + "(q) = " + qc.c(a, b).str() + "\n";
                    text += "  v window:";
                    for (const auto& x : qc.vij_window(a, b).coeffs)
                        text += " " + x.get_str();
                    text += "\n";
                }
            emit(qcartan_to_json(qc), text);
        } else if (*baxter_cmd) {
            const qcartan_data qc(t_baxter.datum());
            check_node(qc.datum(), i, "--i");
            pole_multiset roots;
            if (!p_file.empty()) {
                roots = baxter_general(qc, read_tuple(p_file, qc.datum()), i);
            } else {
                check_node(qc.datum(), j, "--j");
                roots = baxter_fundamental(qc, i, j);
            }
            emit(json{{"roots", multiset_to_json(roots)}}, "Baxter roots: " + multiset_text(roots) + "\n");
        } else if (*poles_cmd) {
            const qcartan_data qc(t_poles.datum());
            check_node(qc.datum(), i, "--i");
            check_node(qc.datum(), j, "--j");
            const point_set s = sigma_fundamental(qc, i, j);
            emit(json{{"sigma", point_set_to_json(s)}}, "sigma = " + set_text(s) + "\n");
        } else if (*sigma_cmd) {
            const qcartan_data qc(t_sigma.datum());
            const drinfeld_tuple p = read_tuple(p_file, qc.datum());
            point_set s;
            if (*sigma_node) {
                check_node(qc.datum(), node, "--node");
                s = sigma_irreducible(qc, p, node);
            } else {
                s = sigma_full(qc, p);
            }
            emit(json{{"sigma", point_set_to_json(s)}}, "sigma = " + set_text(s) + "\n");
        } else if (*kr_cmd) {
            const qcartan_data qc(t_kr.datum());
            check_node(qc.datum(), i, "--i");
            check_node(qc.datum(), j, "--j");
            const point_set s = kr_sigma(qc, i, j, ell);
            const pole_multiset q = kr_baxter(qc, i, j, ell);
            emit(json{{"sigma", point_set_to_json(s)}, {"roots", multiset_to_json(q)}},
                 "sigma = " + set_text(s) + "\nBaxter roots: " + multiset_text(q) + "\n");
        } else if (*cyclic_cmd || *irr_cmd) {
            const bool cyclic = cyclic_cmd->parsed();
            const qcartan_data qc((cyclic ? t_cyclic : t_irr).datum());
            const drinfeld_tuple p = read_tuple(p_file, qc.datum());
            const drinfeld_tuple q = read_tuple(q_file, qc.datum());
            const bool ok = cyclic ? cyclic_sufficient(qc, p, q) : irreducible_sufficient(qc, p, q);
            const std::string verdict =
                ok ? (cyclic ? "certified-highest-weight" : "certified-irreducible") : "inconclusive";
            emit(json{{"result", verdict}}, verdict + "\n");
            return ok ? exit_ok : exit_inconclusive;
        } else if (*adm_cmd) {
            const qcartan_data qc(t_adm.datum());
            const bool ok = double_admissible(qc, read_tuple(p_file, qc.datum()));
            emit(json{{"admissible", ok}}, ok ? "admissible\n" : "not admissible\n");
            return ok ? exit_ok : exit_inconclusive;
        } else if (*build_cmd) {
            if (m < 1 || m >= n)
                throw usage_error("--m must lie in 1.." + std::to_string(n - 1));
            const explicit_module mod = build_sln_fundamental(n, m, parse_point(a_text));
            json out = module_to_json(mod);
            std::string text = "sl" + std::to_string(n) + " fundamental varpi_" + std::to_string(m) + "(" +
                               a_text + "), dimension " + std::to_string(mod.dim) + "\n";
            if (verify_depth >= 0) {
                const auto bad = verify_relations(mod, verify_depth);
                json list = json::array();
                for (const auto& v : bad)
                    list.push_back({v.relation, v.i, v.j, v.r, v.s});
                out["violations"] = list;
                text += "relation violations up to R = " + std::to_string(verify_depth) + ": " +
                        std::to_string(bad.size()) + "\n";
            }
            if (want_chain) {
                json list = json::array();
                text += "maximal chain:";
                for (const auto& step : maximal_chain(mod)) {
                    list.push_back({step.node, point_to_json(step.pole), step.order_index});
                    text += " (" + std::to_string(step.node) + ", " + step.pole.str() + ", " +
                            std::to_string(step.order_index) + ")";
                }
                out["chain"] = list;
                text += "\n";
            }
            if (poles_node != 0) {
                check_node(mod.datum, poles_node, "--poles");
                const pole_multiset poles = poles_of_module(mod, poles_node);
                out["poles"] = multiset_to_json(poles);
                text += "poles at node " + std::to_string(poles_node) + ": " + multiset_text(poles) + "\n";
            }
            emit(out, text);
        } else if (*sl2_cmd) {
            explicit_module mod = trivial_module(build_cartan(family::A, 1));
            if (factors.empty()) {
                mod = build_sl2_eval(r, parse_point(a_text));
            } else {
                for (const auto& f : factors) {
                    const auto colon = f.find(':');
                    if (colon == std::string::npos)
                        throw usage_error("--factor expects r:a, got '" + f + "'");
                    int fr = 0;
                    try {
                        fr = std::stoi(f.substr(0, colon));
                    } catch (const std::exception&) {
                        throw usage_error("--factor expects r:a, got '" + f + "'");
                    }
                    if (fr < 0)
                        throw usage_error("--factor needs r >= 0");
                    mod = tensor_product(mod, build_sl2_eval(fr, parse_point(f.substr(colon + 1))));
                }
            }
            const pole_multiset poles = poles_of_module(mod, 1);
            json out{{"dim", mod.dim}, {"poles", multiset_to_json(poles)}};
            std::string text = "dimension " + std::to_string(mod.dim) + ", poles " + multiset_text(poles) + "\n";
            if (verify_depth >= 0) {
                const auto bad = verify_relations(mod, verify_depth);
                out["violations"] = bad.size();
                text += "relation violations up to R = " + std::to_string(verify_depth) + ": " +
                        std::to_string(bad.size()) + "\n";
            }
            emit(out, text);
        } else if (*cox_verify) {
            const qcartan_data qc(t_cox.datum());
            const fuj_her_report rep = verify_fuj_her(qc);
            emit(json{{"ok", rep.ok()},
                      {"positive_orbits", rep.positive_orbits},
                      {"some_positive", rep.some_positive},
                      {"matches_q_cartan", rep.matches_q_cartan}},
                 std::string(rep.ok() ? "verified" : "FAILED: " + rep.detail) + "\n");
            return rep.ok() ? exit_ok : exit_internal;
        } else if (*selftest_cmd) {
            return run_selftest();
        }
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const invalid_type& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const unsupported_type& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_internal;
    }
    return exit_ok;
}
