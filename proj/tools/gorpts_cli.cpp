// Command-line driver: builds Gorenstein point sets, stick figures of
// lines, and Hilbert-function reports, with exact rational output.
//
// Exit codes: 0 success, 1 input/validation error, 2 verification failure,
// 3 internal invariant violation.

#include <CLI11.hpp>

#include "gorpts/gorpts.hpp"

#include <array>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace gorpts;

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(cur);
    return out;
}

HVector parse_hvector(const std::string& s) {
    HVector h;
    for (const auto& tok : split(s, ',')) h.push_back(std::stoll(tok));
    return h;
}

std::vector<long long> parse_indices(const std::string& s) {
    std::vector<long long> v;
    for (const auto& tok : split(s, ',')) v.push_back(std::stoll(tok));
    return v;
}

std::array<ProjPoint, 4> parse_ratios(const std::string& s) {
    const auto toks = split(s, ',');
    if (toks.size() != 4)
        throw validation_error("--A needs exactly four ratio points, e.g. 1/1,1/2,1/3,1/4");
    auto pt = [](const std::string& t) {
        const auto slash = t.find('/');
        const Rational num = Rational::parse(slash == std::string::npos ? t : t.substr(0, slash));
        const Rational den = slash == std::string::npos ? Rational(1)
                                                        : Rational::parse(t.substr(slash + 1));
        return ProjPoint{num, den};
    };
    return {pt(toks[0]), pt(toks[1]), pt(toks[2]), pt(toks[3])};
}

std::array<ProjPoint, 4> default_ratios() {
    return {ProjPoint{Rational(1), Rational(1)}, ProjPoint{Rational(1), Rational(2)},
            ProjPoint{Rational(1), Rational(3)}, ProjPoint{Rational(1), Rational(4)}};
}

std::vector<long long> evens(int count) {
    std::vector<long long> v(count);
    for (int i = 0; i < count; ++i) v[i] = 2LL * i;
    return v;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw validation_error("cannot open output file: " + out_path);
    f << text;
}

std::string joined(const std::vector<long long>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    return os.str();
}

struct CommonOpts {
    std::string h_str;
    std::string a_str;
    std::string ia_str;
    std::string ib_str;
    std::string out_path;
    std::string format = "json";
    bool verify = false;
};

LineConfig make_config(const CommonOpts& o, int need_a, int need_b) {
    auto a = o.a_str.empty() ? default_ratios() : parse_ratios(o.a_str);
    auto ia = o.ia_str.empty() ? evens(need_a) : parse_indices(o.ia_str);
    auto ib = o.ib_str.empty() ? evens(need_b) : parse_indices(o.ib_str);
    return validate_config(std::move(a), IndexSet(std::move(ia)), IndexSet(std::move(ib)));
}

int cmd_gorenstein(const CommonOpts& o) {
    const SIProfile profile = make_profile(parse_hvector(o.h_str));
    const LineConfig cfg = make_config(o, profile.t + 1, profile.s - profile.t + 2);
    const GorensteinResult gr = gorenstein_points(profile, cfg);

    std::optional<bool> verified;
    if (o.verify) {
        const HFReport rep = h_vector_of(PointSet(3, gr.points));
        verified = rep.h_vector == gr.h;
    }

    if (o.format == "csv")
        write_output(points_to_csv(gr), o.out_path);
    else
        write_output(gorenstein_to_json(gr, cfg, verified).dump(2) + "\n", o.out_path);

    if (verified && !*verified) {
        std::cerr << "verification failed: recomputed h-vector differs\n";
        return 2;
    }
    return 0;
}

int cmd_stick(const CommonOpts& o, int a, int b) {
    const LineConfig cfg = make_config(o, a, b);
    const StickFigure sf = stick_figure(cfg, a, b);
    const StickCheckReport rep = check_stick_figure(sf);
    write_output(stick_to_json(sf, rep).dump(2) + "\n", o.out_path);
    if (!rep.pass) {
        std::cerr << "stick figure check failed: " << rep.message << "\n";
        return 2;
    }
    return 0;
}

int cmd_hf(const std::string& points_path, int max_degree) {
    std::ifstream in(points_path);
    if (!in) throw validation_error("cannot open point file: " + points_path);
    const PointSet ps(3, parse_points(in));

    std::cout << "d,HF\n";
    if (max_degree >= 0) {
        long long prev = 0;
        std::vector<long long> hv;
        bool stable = false;
        for (int d = 0; d <= max_degree; ++d) {
            const long long hf = hilbert_function(ps, d);
            std::cout << d << ',' << hf << "\n";
            hv.push_back(hf - prev);
            prev = hf;
            if (hf == static_cast<long long>(ps.size())) {
                stable = true;
                break;
            }
        }
        if (stable)
            std::cout << "h_vector = " << joined(hv) << "\n";
        else
            std::cout << "h_vector = (not stabilized by degree " << max_degree << ")\n";
        return 0;
    }
    const HFReport rep = h_vector_of(ps);
    for (std::size_t d = 0; d < rep.values.size(); ++d)
        std::cout << d << ',' << rep.values[d] << "\n";
    std::cout << "h_vector = " << joined(rep.h_vector) << "\n";
    return 0;
}

int cmd_check_si(const std::string& h_str) {
    SIProfile profile;
    try {
        profile = make_profile(parse_hvector(h_str));
    } catch (const validation_error& e) {
        std::cout << "not admissible: " << e.what() << "\n";
        return 1;
    }
    std::cout << "s = " << profile.s << "\n";
    std::cout << "t = " << profile.t << "\n";
    std::cout << "a = " << joined(profile.a) << "\n";
    std::cout << "g = " << joined(profile.g) << "\n";
    std::cout << "b = " << joined(residual_b(profile)) << "\n";
    return 0;
}

int cmd_hadamard(const std::string& p_str, const std::string& q_str) {
    auto parse_pt = [](const std::string& s) {
        std::vector<Rational> c;
        for (const auto& tok : split(s, ',')) c.push_back(Rational::parse(tok));
        return ProjPoint(std::move(c));
    };
    const ProjPoint prod = hadamard_point(parse_pt(p_str), parse_pt(q_str));
    std::vector<std::string> coords;
    for (std::size_t i = 0; i < prod.size(); ++i) coords.push_back(prod[i].str());
    for (std::size_t i = 0; i < coords.size(); ++i)
        std::cout << (i ? "," : "") << coords[i];
    std::cout << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Gorenstein point sets in P^3 from grids of lines"};
    app.require_subcommand(1);
    // --h is taken by the h-vector option, so help lives on --help only
    app.set_help_flag("--help", "print help");

    CommonOpts opt;
    int stick_a = 0, stick_b = 0;
    std::string points_path;
    int max_degree = -1;
    std::string had_p, had_q;

    auto add_config_opts = [&](CLI::App* sub) {
        sub->set_help_flag("--help", "print help");
        sub->add_option("--A", opt.a_str, "four P^1 ratio points alpha/beta (default 1/1,1/2,1/3,1/4)");
        sub->add_option("--Ia", opt.ia_str, "row index set (default even numbers)");
        sub->add_option("--Ib", opt.ib_str, "column index set (default even numbers)");
        sub->add_option("--out", opt.out_path, "output file (default stdout)");
    };

    CLI::App* gor = app.add_subcommand("gorenstein", "build the point set for an h-vector");
    gor->add_option("--h", opt.h_str, "h-vector, e.g. 1,3,4,3,1")->required();
    add_config_opts(gor);
    gor->add_option("--format", opt.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    gor->add_flag("--verify", opt.verify, "recompute the h-vector from the emitted points");

    CLI::App* stick = app.add_subcommand("stick", "build an a x b grid of lines");
    stick->add_option("--a", stick_a, "number of rows")->required();
    stick->add_option("--b", stick_b, "number of columns")->required();
    add_config_opts(stick);

    CLI::App* hf = app.add_subcommand("hf", "Hilbert function of a point file");
    hf->set_help_flag("--help", "print help");
    hf->add_option("--points", points_path, "JSON or CSV point file")->required();
    hf->add_option("--max-degree", max_degree, "stop the table at this degree");

    CLI::App* csi = app.add_subcommand("check-si", "validate an h-vector and print derived sequences");
    csi->set_help_flag("--help", "print help");
    csi->add_option("--h", opt.h_str, "h-vector")->required();

    CLI::App* had = app.add_subcommand("hadamard", "coordinate-wise product of two points");
    had->set_help_flag("--help", "print help");
    had->add_option("--p", had_p, "first point, comma-separated rationals")->required();
    had->add_option("--q", had_q, "second point")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gor->parsed()) return cmd_gorenstein(opt);
        if (stick->parsed()) return cmd_stick(opt, stick_a, stick_b);
        if (hf->parsed()) return cmd_hf(points_path, max_degree);
        if (csi->parsed()) return cmd_check_si(opt.h_str);
        if (had->parsed()) return cmd_hadamard(had_p, had_q);
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
