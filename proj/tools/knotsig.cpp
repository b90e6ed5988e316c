#include "knotsig/errors.hpp"
#include "knotsig/invariants.hpp"
#include "knotsig/qjump.hpp"
#include "knotsig/report.hpp"
#include "knotsig/skein.hpp"
#include "knotsig/torus.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace knotsig;

namespace {

struct Options {
    unsigned precision = 30;
    std::string out;
    std::string format = "tsv";
    bool serial = false;

    Precision prec() const { return Precision{precision}; }
    Execution exec() const { return serial ? Execution::serial : Execution::parallel; }
    bool json() const { return format == "json"; }
};

void emit(const Options& o, const std::string& text)
{
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw Error("cannot write " + o.out);
    f << text;
}

// "0.25", "1/6" or "3e-1"
double parse_turn(const std::string& text)
{
    if (text.find('/') != std::string::npos) {
        mpq_class q;
        if (q.set_str(text, 10) != 0 || q.get_den() == 0) throw ParseError("bad fraction \"" + text + "\"");
        q.canonicalize();
        return q.get_d();
    }
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || text.empty()) throw ParseError("bad turn \"" + text + "\"");
    return v;
}

std::string divisor_text(const Options& o, const JumpDivisor& d, const std::vector<std::string>& extra = {})
{
    if (o.json()) {
        nlohmann::json arr = nlohmann::json::array();
        for (std::size_t i = 0; i < d.size(); ++i) {
            nlohmann::json row{{"root_turn", display_turn(d.entries[i].root, o.prec())},
                               {"multiplicity", d.entries[i].root.multiplicity()},
                               {"jump", d.entries[i].jump}};
            if (!extra.empty()) row["numeric_c"] = extra[i];
            arr.push_back(row);
        }
        return arr.dump(2) + "\n";
    }
    std::ostringstream os;
    for (std::size_t i = 0; i < d.size(); ++i) {
        os << display_turn(d.entries[i].root, o.prec()) << "\t" << d.entries[i].jump;
        if (!extra.empty()) os << "\t" << extra[i];
        os << "\n";
    }
    return os.str();
}

int cmd_alex(const Options& o, const std::string& braid)
{
    const SymPoly d = alexander(seifert_matrix(BraidWord::parse(braid)));
    if (o.json()) {
        nlohmann::json j{{"x", d.str()}, {"coefficients", d.list_str()}};
        emit(o, j.dump(2) + "\n");
    } else {
        emit(o, d.str() + "\n");
    }
    return 0;
}

int cmd_sig(const Options& o, const std::string& braid, const std::string& turn)
{
    const double s = parse_turn(turn);
    emit(o, std::to_string(signature_at(seifert_matrix(BraidWord::parse(braid)), s)) + "\n");
    return 0;
}

int cmd_jump(const Options& o, const std::string& braid)
{
    emit(o, divisor_text(o, jump_divisor(seifert_matrix(BraidWord::parse(braid)), o.exec())));
    return 0;
}

int cmd_jjump(const Options& o, const std::string& delta_text, const std::string& p_text)
{
    const SymPoly delta = SymPoly::parse(delta_text);
    const SymPoly p = SymPoly::parse(p_text);
    const JumpDivisor d = jj_divisor(delta, p, o.prec());
    std::vector<std::string> cs;
    for (const auto& e : d.entries) {
        const LaurentLeading lead = laurent_leading(delta, p, e.root, o.prec());
        cs.push_back(lead.numeric_c ? lead.numeric_c->str(20) : "-");
    }
    emit(o, divisor_text(o, d, cs));
    return 0;
}

int cmd_check(const Options& o, const std::string& path)
{
    const CatalogReport rep = check_catalog(load_catalog(path), o.exec(), o.prec());
    emit(o, o.json() ? to_json(rep) : to_tsv(rep));
    return rep.ok() ? 0 : 1;
}

int cmd_torus(const Options& o, int max_ab)
{
    const auto sweep = sweep_torus(max_ab, o.exec(), Precision{std::max(o.precision, 40u)});
    emit(o, o.json() ? to_json(sweep) : to_tsv(sweep));
    for (const auto& t : sweep)
        if (t.status != Status::match) return 1;
    return 0;
}

int cmd_skein(const Options& o, const std::string& braid_text, int index)
{
    const BraidWord b = BraidWord::parse(braid_text);
    const auto roots = isolate_roots(alexander(seifert_matrix(b)));
    if (index < 0 || static_cast<std::size_t>(index) >= roots.size())
        throw std::out_of_range("root index " + std::to_string(index) + " out of range; the Alexander polynomial has " +
                                std::to_string(roots.size()) + " roots on the upper semicircle");
    const GoodProjection g = make_good(b, roots[static_cast<std::size_t>(index)]);
    const SkeinEvaluation e = skein_evaluate(g);
    const std::string turn = display_turn(g.root, o.prec());
    if (o.json()) {
        nlohmann::json j{{"root_turn", turn},
                         {"braid", g.braid.str()},
                         {"threading", g.threading},
                         {"crossing", g.pos},
                         {"epsilon", g.epsilon},
                         {"theta_sign_plus", {{"order", e.plus.order}, {"sign", e.plus.sign}}},
                         {"theta_sign_minus", {{"order", e.minus.order}, {"sign", e.minus.sign}}},
                         {"jump", e.jump}};
        emit(o, j.dump(2) + "\n");
        return 0;
    }
    std::ostringstream os;
    os << "root_turn\t" << turn << "\n"
       << "braid\t" << g.braid.str() << "\n"
       << "threading\t" << g.threading << "\n"
       << "crossing\t" << g.pos << "\n"
       << "epsilon\t" << g.epsilon << "\n"
       << "theta_sign_plus\t" << e.plus.sign << "\t(order " << e.plus.order << ")\n"
       << "theta_sign_minus\t" << e.minus.sign << "\t(order " << e.minus.order << ")\n"
       << "jump\t" << e.jump << "\n";
    emit(o, os.str());
    return 0;
}

int cmd_samples(const Options& o, const std::string& braid, int n)
{
    const auto samples = signature_samples(seifert_matrix(BraidWord::parse(braid)), n, o.exec());
    if (o.json()) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& p : samples) arr.push_back({{"s", p.s}, {"sigma", p.sigma}});
        emit(o, arr.dump(2) + "\n");
        return 0;
    }
    std::ostringstream os;
    os << "s\tsigma\n";
    char buf[64];
    for (const auto& p : samples) {
        std::snprintf(buf, sizeof buf, "%.20g", p.s);
        os << buf << "\t" << p.sigma << "\n";
    }
    emit(o, os.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Knot signature functions, jump divisors and Jones jump divisors"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--precision", o.precision, "Working precision in decimal digits")
        ->check(CLI::Range(20u, 100000u))
        ->capture_default_str();
    app.add_option("--out", o.out, "Write the report here instead of stdout");
    app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"tsv", "json"}))->capture_default_str();
    app.add_flag("--serial", o.serial, "Run batch work on one thread");

    std::string braid;
    std::string turn;
    std::string delta;
    std::string p;
    std::string catalog;
    int max_ab = 60;
    int root_index = 0;
    int n = 200;
    std::function<int()> run;

    auto* alex = app.add_subcommand("alex", "Alexander polynomial of a braid closure in x = t - 2 + 1/t");
    alex->add_option("braid", braid, "Braid word, e.g. \"[1,1,1]\"")->required();
    alex->callback([&] { run = [&] { return cmd_alex(o, braid); }; });

    auto* sig = app.add_subcommand("sig", "Signature at exp(2 pi i s)");
    sig->add_option("braid", braid)->required();
    sig->add_option("s", turn, "Turn, decimal or fraction")->required();
    sig->callback([&] { run = [&] { return cmd_sig(o, braid, turn); }; });

    auto* jump = app.add_subcommand("jump", "Signature jump divisor on the upper semicircle");
    jump->add_option("braid", braid)->required();
    jump->callback([&] { run = [&] { return cmd_jump(o, braid); }; });

    auto* jj = app.add_subcommand("jjump", "Jones jump divisor from (Delta, P)");
    jj->add_option("--delta", delta, "Delta in x, e.g. \"[1,5,2]\" or \"1 + 5*x + 2*x^2\"")->required();
    jj->add_option("--p", p, "P in x")->required();
    jj->callback([&] { run = [&] { return cmd_jjump(o, delta, p); }; });

    auto* check = app.add_subcommand("check", "Compare j and jj on every catalog record");
    check->add_option("catalog", catalog)->required()->check(CLI::ExistingFile);
    check->callback([&] { run = [&] { return cmd_check(o, catalog); }; });

    auto* torus = app.add_subcommand("torus", "Cross-check jump divisors of all torus knots T(a,b), ab <= max");
    torus->add_option("--max-ab", max_ab)->check(CLI::Range(6, 100000))->capture_default_str();
    torus->callback([&] { run = [&] { return cmd_torus(o, max_ab); }; });

    auto* skein = app.add_subcommand("skein", "Good projection and skein jump at one root");
    skein->add_option("braid", braid)->required();
    skein->add_option("--root-index", root_index, "0-based, ascending turn")->capture_default_str();
    skein->callback([&] { run = [&] { return cmd_skein(o, braid, root_index); }; });

    auto* samples = app.add_subcommand("samples", "Step-plot data (s, sigma) over [0, 1/2]");
    samples->add_option("braid", braid)->required();
    samples->add_option("--n", n, "Grid points")->check(CLI::Range(1, 10000000))->capture_default_str();
    samples->callback([&] { run = [&] { return cmd_samples(o, braid, n); }; });

    CLI11_PARSE(app, argc, argv);

    try {
        return run();
    } catch (const ParseError& e) {
        std::cerr << "knotsig: input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "knotsig: " << e.what() << "\n";
        return 3;
    }
}
