#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ellfib/catalog.hpp"
#include "ellfib/errors.hpp"
#include "ellfib/parse.hpp"
#include "json.hpp"

using namespace ellfib;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// a file path, else a catalog id
WeierstrassModel load_surface(const std::string& arg) {
    if (std::filesystem::is_regular_file(arg)) return parse_surface(slurp(arg));
    Catalog c = load_default();
    if (auto s = c.surface(arg)) return s->model;
    throw Error(ErrorKind::Parse, "no surface file or catalog surface \"" + arg + "\"");
}

RationalMap load_map(const std::string& arg) {
    if (std::filesystem::is_regular_file(arg)) return parse_map_file(slurp(arg)).map;
    if (!arg.empty() && arg[0] == '(') return parse_map_inline(arg, Field());
    Catalog c = load_default();
    if (auto m = c.map(arg)) return m->map;
    throw Error(ErrorKind::Parse, "no map file or catalog map \"" + arg + "\"");
}

HomogPoly place_arg(const std::string& text, const Field& f) {
    try {
        return parse_point(text, f).place();
    } catch (const Error&) {
        return parse_homog(text, f);
    }
}

std::string verdict(int euler) {
    if (euler == 12) return "rational";
    if (euler == 24) return "K3";
    return "e=" + std::to_string(euler);
}

void print_classification(const WeierstrassModel& m, bool json) {
    auto clusters = classify_fibers(m);
    Configuration conf = configuration_of(clusters);
    int e = conf.euler();
    if (json) {
        nlohmann::ordered_json j;
        j["configuration"] = conf.to_string();
        j["euler"] = e;
        j["verdict"] = verdict(e);
        j["clusters"] = nlohmann::json::array();
        for (auto& c : clusters) {
            nlohmann::ordered_json r;
            r["place"] = c.place.to_string();
            r["count"] = c.places_count;
            r["type"] = c.ktype.to_string();
            auto num = [](int v) { return v == kInfinite ? nlohmann::json(order_string(v)) : nlohmann::json(v); };
            r["vA"] = num(c.vA);
            r["vB"] = num(c.vB);
            r["vDelta"] = num(c.vDelta);
            j["clusters"].push_back(r);
        }
        std::cout << j.dump() << "\n";
        return;
    }
    std::cout << conf.to_string() << " e=" << e << " " << verdict(e) << "\n";
    size_t w = 5;
    for (auto& c : clusters) w = std::max(w, c.place.to_string().size());
    std::cout << std::left << std::setw(w + 2) << "place" << std::setw(7) << "count" << std::setw(6) << "type" << std::setw(5) << "vA"
              << std::setw(5) << "vB" << "vDelta\n";
    for (auto& c : clusters)
        std::cout << std::setw(w + 2) << c.place.to_string() << std::setw(7) << c.places_count << std::setw(6) << c.ktype.to_string()
                  << std::setw(5) << order_string(c.vA) << std::setw(5) << order_string(c.vB) << c.vDelta << "\n";
}

void emit_surface(const WeierstrassModel& m, const std::string& out) {
    std::cout << configuration(m).to_string() << " e=" << euler_number(m) << " " << verdict(euler_number(m)) << "\n";
    if (out.empty()) {
        std::cout << "\n" << format_surface(m);
        return;
    }
    std::ofstream f(out);
    if (!f) throw Error(ErrorKind::Parse, "cannot write " + out);
    f << format_surface(m);
}

std::vector<int> parse_profile(const std::string& text) {
    std::vector<int> p;
    for (auto& x : split(text, ',')) {
        try {
            size_t used = 0;
            int v = std::stoi(trim(x), &used);
            if (used != trim(x).size() || v < 1) throw std::invalid_argument(x);
            p.push_back(v);
        } catch (const std::logic_error&) {
            throw Error(ErrorKind::Parse, "profile entry \"" + x + "\" is not a positive integer");
        }
    }
    return p;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"elliptic fibrations: fibre configurations, base changes and quadratic twists"};
    app.require_subcommand(1);

    std::string surface_arg, map_arg, poly_arg, from_arg, to_arg, out_arg, at_arg, only_arg, twist_arg;
    bool json = false, deflate_all = false, serial = false;
    int degree = 0, extra_preimages = -1, extra_cusps = 2;
    std::vector<std::string> profiles;

    auto* classify = app.add_subcommand("classify", "fibre configuration of a surface");
    classify->add_option("surface", surface_arg, "surface file or catalog id")->required();
    classify->add_flag("--json", json, "structured output");

    auto* pull = app.add_subcommand("pullback", "pull a surface back along a map");
    pull->add_option("surface", surface_arg, "surface file or catalog id")->required();
    pull->add_option("map", map_arg, "map file, catalog id or (N : D)")->required();
    auto* tw_opt = pull->add_option("--twist", twist_arg, "twist the pullback by this polynomial");
    pull->add_flag("--deflate-all", deflate_all, "twist by all starred places")->excludes(tw_opt);
    pull->add_option("-o,--output", out_arg, "write the surface file here");

    auto* twist = app.add_subcommand("twist", "quadratic twist by a polynomial");
    twist->add_option("surface", surface_arg, "surface file or catalog id")->required();
    twist->add_option("poly", poly_arg, "squarefree twist polynomial")->required();
    twist->add_option("-o,--output", out_arg, "write the surface file here");

    auto* transfer = app.add_subcommand("transfer-star", "move a * from one place to another");
    transfer->add_option("surface", surface_arg, "surface file or catalog id")->required();
    transfer->add_option("from", from_arg, "point or place")->required();
    transfer->add_option("to", to_arg, "point or place")->required();
    transfer->add_option("-o,--output", out_arg, "write the surface file here");

    auto* hurwitz = app.add_subcommand("hurwitz", "Hurwitz count for a ramification pattern");
    hurwitz->add_option("--degree", degree, "degree of the cover")->required()->check(CLI::PositiveNumber);
    hurwitz->add_option("--profile", profiles, "ramification indices over one point, e.g. 4,4");
    hurwitz->add_option("--profile-preimages", extra_preimages, "preimages in total over the remaining cusps");
    hurwitz->add_option("--cusps", extra_cusps, "number of remaining cusps")->capture_default_str();

    auto* ramify = app.add_subcommand("ramify", "ramification profile over a point");
    ramify->add_option("map", map_arg, "map file, catalog id or (N : D)")->required();
    ramify->add_option("--at", at_arg, "point: 0, 1, inf, 2/3, (a:b)")->required();

    auto* verify = app.add_subcommand("verify-catalog", "run the catalog harness");
    verify->add_option("--only", only_arg, "id prefix or group");
    verify->add_flag("--json", json, "one record per line");
    verify->add_flag("--serial", serial, "single worker");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*classify) {
            print_classification(load_surface(surface_arg), json);
        } else if (*pull) {
            WeierstrassModel m = load_surface(surface_arg);
            RationalMap pi = load_map(map_arg);
            Field f = common_field(m.field(), pi.field());
            WeierstrassModel x = pullback(m.lift(f), pi.lift(f));
            if (deflate_all) {
                HomogPoly a = starred_places(x);
                if (!a.is_constant()) x = quadratic_twist(x, a);
            } else if (!twist_arg.empty()) {
                x = quadratic_twist(x, parse_homog(twist_arg, f));
            }
            emit_surface(x, out_arg);
        } else if (*twist) {
            WeierstrassModel m = load_surface(surface_arg);
            emit_surface(quadratic_twist(m, parse_homog(poly_arg, m.field())), out_arg);
        } else if (*transfer) {
            WeierstrassModel m = load_surface(surface_arg);
            emit_surface(transfer_star(m, place_arg(from_arg, m.field()), place_arg(to_arg, m.field())), out_arg);
        } else if (*hurwitz) {
            std::vector<std::vector<int>> ps;
            for (auto& p : profiles) ps.push_back(parse_profile(p));
            HurwitzCount h = extra_preimages < 0 ? hurwitz_count(degree, ps) : hurwitz_count(degree, ps, extra_cusps, extra_preimages);
            std::cout << (h.feasible() ? "feasible (" : "infeasible (") << h.total << (h.feasible() ? " <= " : " > ") << h.bound << ")\n";
        } else if (*ramify) {
            RationalMap pi = load_map(map_arg);
            Point p = parse_point(at_arg, pi.field());
            std::cout << ramification_profile(pi, p).to_string() << " over " << p.to_string() << "\n";
        } else if (*verify) {
            Catalog c = load_default();
            Report r = verify_all(c, !serial, only_arg);
            std::cout << (json ? format_json_lines(r) : format_table(r));
            return r.ok() ? 0 : 1;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
