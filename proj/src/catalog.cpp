#include "ellfib/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

#include "ellfib/errors.hpp"
#include "json.hpp"
#include "ellfib/parse.hpp"

namespace ellfib {

namespace {

struct Block {
    KeyValues kv;
    std::string origin;
};

std::vector<Block> split_blocks(const std::string& text, const std::string& origin) {
    std::vector<Block> out;
    std::string cur;
    int line_no = 0, start = 1;
    auto flush = [&] {
        if (!trim(cur).empty()) {
            try {
                out.push_back({parse_kv(cur), origin + ":" + std::to_string(start)});
            } catch (const Error& e) {
                throw Error(ErrorKind::CatalogCorrupt, origin + ":" + std::to_string(start) + ": " + e.what());
            }
        }
        cur.clear();
    };
    for (auto& line : split(text, '\n')) {
        ++line_no;
        if (trim(line).empty()) {
            flush();
            start = line_no + 1;
            continue;
        }
        cur += line + "\n";
    }
    flush();
    return out;
}

std::string get(const KeyValues& kv, const std::string& key) {
    auto v = kv_find(kv, key);
    return v ? *v : std::string();
}

[[noreturn]] void corrupt(const Block& b, const std::string& msg) {
    throw Error(ErrorKind::CatalogCorrupt, b.origin + ": " + msg);
}

// natural order: digit runs compare numerically
bool natural_less(const std::string& a, const std::string& b) {
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (std::isdigit((unsigned char)a[i]) && std::isdigit((unsigned char)b[j])) {
            size_t i2 = i, j2 = j;
            while (i2 < a.size() && std::isdigit((unsigned char)a[i2])) ++i2;
            while (j2 < b.size() && std::isdigit((unsigned char)b[j2])) ++j2;
            std::string x = a.substr(i, i2 - i), y = b.substr(j, j2 - j);
            x.erase(0, std::min(x.find_first_not_of('0'), x.size()));
            y.erase(0, std::min(y.find_first_not_of('0'), y.size()));
            if (x.size() != y.size()) return x.size() < y.size();
            if (x != y) return x < y;
            i = i2;
            j = j2;
            continue;
        }
        if (a[i] != b[j]) return a[i] < b[j];
        ++i;
        ++j;
    }
    return a.size() - i < b.size() - j;
}

SurfaceDef make_surface(const Block& b) {
    std::string id = get(b.kv, "surface");
    try {
        return {id, parse_surface_kv(b.kv)};
    } catch (const Error& e) {
        corrupt(b, "surface " + id + ": " + e.what());
    }
}

MapDef make_map(const Block& b) {
    std::string id = get(b.kv, "map");
    try {
        Field f;
        if (auto fs = kv_find(b.kv, "field")) f = parse_field(*fs);
        RationalMap pi(parse_homog(kv_require(b.kv, "N", "map"), f), parse_homog(kv_require(b.kv, "D", "map"), f));
        MapDef m{id, pi, pi.N() - pi.D(), {}, get(b.kv, "quoted") == "yes", std::nullopt, get(b.kv, "printed_N"),
                 get(b.kv, "printed_D"), get(b.kv, "erratum")};
        if (auto id_check = kv_find(b.kv, "identity_check")) {
            if (parse_homog(*id_check, f) != m.identity) corrupt(b, "map " + id + ": identity_check fails, N - D != " + *id_check);
        }
        std::string cusps = get(b.kv, "cusps");
        for (auto& p : split(cusps.empty() ? "0,1,inf" : cusps, ',')) m.cusps.push_back(parse_point(trim(p), f));
        auto lhs = kv_find(b.kv, "printed_lhs"), rhs = kv_find(b.kv, "printed_rhs");
        if (lhs && rhs) m.printed_identity = std::make_pair(parse_homog(*lhs, f), parse_homog(*rhs, f));
        return m;
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::CatalogCorrupt) throw;
        corrupt(b, "map " + id + ": " + e.what());
    }
}

RationalMap parse_pre(const std::string& text, const Field& f) {
    if (!text.empty() && text[0] == '(') return parse_map_inline(text, f);
    auto pts = split(text, ',');
    if (pts.size() != 3) throw Error(ErrorKind::Parse, "pre: expected (N : D) or three points, got \"" + text + "\"");
    return mobius_from_three_points(parse_point(trim(pts[0]), f), parse_point(trim(pts[1]), f), parse_point(trim(pts[2]), f));
}

TwistRecipe parse_twist(const std::string& text, const Field& f) {
    TwistRecipe r;
    r.text = text;
    std::string t = trim(text);
    if (t.empty() || t == "none") return r;
    const std::string tag = "all-starred";
    if (t.compare(0, tag.size(), tag) == 0) {
        r.all_starred = true;
        std::string rest = trim(t.substr(tag.size()));
        if (rest.empty()) return r;
        if (rest[0] != '*') throw Error(ErrorKind::Parse, "twist: expected '*' after all-starred in \"" + text + "\"");
        t = trim(rest.substr(1));
    }
    r.extra = parse_homog(t, f);
    return r;
}

const char* const kEntryKeys[] = {"entry", "group", "base", "pre", "map", "twist", "field", "expect", "post",
                                  "printed_twist", "printed_A", "printed_B", "printed", "note", "skip"};

CatalogEntry make_entry(const Block& b, const Catalog& c) {
    CatalogEntry e;
    e.id = get(b.kv, "entry");
    e.group = get(b.kv, "group");
    if (e.group.empty()) e.group = "user";
    e.base = get(b.kv, "base");
    e.map = get(b.kv, "map");
    e.skip = get(b.kv, "skip");
    e.note = get(b.kv, "note");
    e.expect_text = get(b.kv, "expect");
    for (auto& [k, v] : b.kv)
        if (std::find(std::begin(kEntryKeys), std::end(kEntryKeys), k) == std::end(kEntryKeys)) e.metadata.emplace_back(k, v);
    try {
        if (e.expect_text.empty()) corrupt(b, "entry " + e.id + ": missing expect");
        e.expect = Configuration::parse(e.expect_text);
        const SurfaceDef* base = c.surface(e.base);
        const MapDef* map = e.map.empty() ? nullptr : c.map(e.map);
        if (!base || (!e.map.empty() && !map)) {
            if (!e.skip.empty()) return e;
            corrupt(b, "entry " + e.id + ": unresolved " + (base ? "map " + e.map : "base " + e.base));
        }
        if (auto fs = kv_find(b.kv, "field")) e.field = parse_field(*fs);
        else e.field = map ? common_field(map->map.field(), base->model.field()) : base->model.field();
        for (const Field* part : {&base->model.field(), map ? &map->map.field() : nullptr}) {
            if (part && common_field(e.field, *part) != e.field)
                corrupt(b, "entry " + e.id + ": field " + e.field.to_string() + " does not contain " + part->to_string());
        }
        if (auto p = kv_find(b.kv, "pre")) e.pre = parse_pre(*p, e.field);
        e.twist = parse_twist(get(b.kv, "twist"), e.field);
        if (auto p = kv_find(b.kv, "post")) e.post = parse_map_inline(*p, e.field);
        if (auto p = kv_find(b.kv, "printed_twist")) e.printed_twist = parse_constant(*p, e.field);
        auto pa = kv_find(b.kv, "printed_A"), pb = kv_find(b.kv, "printed_B");
        if (pa && pb) {
            HomogPoly A = parse_homog(*pa, e.field), B = parse_homog(*pb, e.field);
            int M = A.is_zero() ? B.degree() / 6 : A.degree() / 4;
            e.printed_model = WeierstrassModel(A, B, M);
        } else if (auto p = kv_find(b.kv, "printed")) {
            const SurfaceDef* s = c.surface(*p);
            if (!s) corrupt(b, "entry " + e.id + ": unresolved printed surface " + *p);
            e.printed_ref = *p;
            e.printed_model = s->model.lift(e.field);
        }
    } catch (const Error& ex) {
        if (ex.kind() == ErrorKind::CatalogCorrupt) throw;
        corrupt(b, "entry " + e.id + ": " + ex.what());
    }
    return e;
}

Catalog assemble(const std::vector<Block>& blocks) {
    Catalog c;
    for (auto& b : blocks) {
        if (kv_find(b.kv, "surface")) {
            auto s = make_surface(b);
            c.surfaces.insert_or_assign(s.id, s);
        } else if (kv_find(b.kv, "map")) {
            if (!kv_find(b.kv, "entry")) {
                auto m = make_map(b);
                c.maps.insert_or_assign(m.id, m);
            }
        } else if (!kv_find(b.kv, "entry")) {
            corrupt(b, "block has no surface, map or entry key");
        }
    }
    std::map<std::string, CatalogEntry> entries;
    for (auto& b : blocks)
        if (kv_find(b.kv, "entry")) {
            auto e = make_entry(b, c);
            entries.insert_or_assign(e.id, e);
        }
    for (auto& [id, e] : entries) c.entries.push_back(e);
    std::sort(c.entries.begin(), c.entries.end(), [](const CatalogEntry& a, const CatalogEntry& b) { return natural_less(a.id, b.id); });
    return c;
}

std::vector<Block> directory_blocks(const std::string& dir) {
    namespace fs = std::filesystem;
    std::vector<fs::path> files;
    std::error_code ec;
    for (auto& de : fs::directory_iterator(dir, ec))
        if (de.is_regular_file()) files.push_back(de.path());
    if (ec) throw Error(ErrorKind::CatalogCorrupt, "cannot read catalog directory " + dir + ": " + ec.message());
    std::sort(files.begin(), files.end());
    std::vector<Block> out;
    for (auto& p : files) {
        std::ifstream in(p);
        std::stringstream ss;
        ss << in.rdbuf();
        for (auto& b : split_blocks(ss.str(), p.filename().string())) {
            if (!kv_find(b.kv, "surface") && !kv_find(b.kv, "map") && !kv_find(b.kv, "entry")) {
                std::string stem = p.stem().string();
                if (kv_find(b.kv, "A")) b.kv.insert(b.kv.begin(), {"surface", stem});
                else if (kv_find(b.kv, "N")) b.kv.insert(b.kv.begin(), {"map", stem});
            }
            out.push_back(std::move(b));
        }
    }
    return out;
}

}  // namespace

const SurfaceDef* Catalog::surface(const std::string& id) const {
    auto it = surfaces.find(id);
    return it == surfaces.end() ? nullptr : &it->second;
}

const MapDef* Catalog::map(const std::string& id) const {
    auto it = maps.find(id);
    return it == maps.end() ? nullptr : &it->second;
}

const CatalogEntry* Catalog::entry(const std::string& id) const {
    for (auto& e : entries)
        if (e.id == id) return &e;
    return nullptr;
}

Catalog parse_catalog(const std::string& text) { return assemble(split_blocks(text, "catalog")); }

Catalog parse_catalog(const std::vector<std::string>& texts) {
    std::vector<Block> blocks;
    int i = 0;
    for (auto& t : texts) {
        auto b = split_blocks(t, "catalog#" + std::to_string(i++));
        blocks.insert(blocks.end(), b.begin(), b.end());
    }
    return assemble(blocks);
}

Catalog load_builtin() { return assemble(split_blocks(builtin_catalog_text(), "builtin")); }

Catalog load_with_directory(const std::string& dir) {
    auto blocks = split_blocks(builtin_catalog_text(), "builtin");
    auto extra = directory_blocks(dir);
    blocks.insert(blocks.end(), extra.begin(), extra.end());
    return assemble(blocks);
}

Catalog load_default() {
    const char* dir = std::getenv("ELLFIB_CATALOG_DIR");
    if (dir && *dir) return load_with_directory(dir);
    return load_builtin();
}

std::string skip_reason(const Catalog& c, const CatalogEntry& e) {
    bool resolved = c.surface(e.base) && (e.map.empty() || c.map(e.map));
    if (e.skip == "missing-base-surface" && resolved) return "";
    if (!e.skip.empty()) return e.skip;
    return resolved ? "" : "unresolved";
}

HomogPoly twist_polynomial(const TwistRecipe& r, const HomogPoly& starred) {
    HomogPoly one = HomogPoly::constant(starred.field(), 1);
    HomogPoly a = r.all_starred ? starred : one;
    if (r.extra) a = a * r.extra->lift(starred.field());
    return a;
}

Construction build(const Catalog& c, const CatalogEntry& e) {
    const Field& K = e.field;
    WeierstrassModel X0 = c.surfaces.at(e.base).model.lift(K);
    RationalMap pre = e.pre ? e.pre->lift(K) : RationalMap::identity(K);
    RationalMap pi = e.map.empty() ? RationalMap::identity(K) : c.maps.at(e.map).map.lift(K);
    WeierstrassModel Y = pullback(X0, pre);
    WeierstrassModel raw = e.map.empty() ? Y : pullback(Y, pi);
    HomogPoly alpha = twist_polynomial(e.twist, starred_places(raw));
    WeierstrassModel result = alpha.is_constant() && alpha.coeff(0).is_one() ? raw : quadratic_twist(raw, alpha);
    return {Y, compose(pre, pi), raw, alpha, result};
}

Configuration predict(const Catalog& c, const CatalogEntry& e) {
    const Field& K = e.field;
    WeierstrassModel X0 = c.surfaces.at(e.base).model.lift(K);
    RationalMap pre = e.pre ? e.pre->lift(K) : RationalMap::identity(K);
    RationalMap pi = e.map.empty() ? pre : compose(pre, c.maps.at(e.map).map.lift(K));
    std::vector<std::pair<HomogPoly, KodairaType>> pieces;
    for (auto& cl : classify_fibers(minimalize(X0).model))
        for (auto& pc : preimage_clusters(pi, cl.place))
            pieces.emplace_back(pc.factor, predict_pullback_type(cl.ktype, pc.multiplicity).ktype);
    HomogPoly starred = HomogPoly::constant(K, 1);
    for (auto& [place, k] : pieces)
        if (k.starred()) starred = starred * place;
    HomogPoly rest = twist_polynomial(e.twist, starred);
    Configuration out;
    auto add = [&](const KodairaType& k, int n) {
        if (n > 0 && !k.smooth()) out.add(k, n);
    };
    for (auto& [place, k] : pieces) {
        int twisted = 0;
        if (!rest.is_constant()) {
            HomogPoly g = hp_gcd(place, rest);
            twisted = g.degree();
            if (twisted > 0) rest = exact_div(rest, g);
        }
        add(k.toggled(), twisted);
        add(k, place.degree() - twisted);
    }
    add(KodairaType::Instar(0), rest.degree());
    return out;
}

bool j_composition_holds(const Catalog& c, const CatalogEntry& e, const Construction& k) {
    JInvariant jx = j_invariant(k.result);
    JInvariant jy = j_invariant(c.surfaces.at(e.base).model.lift(e.field));
    const auto& pi = k.composite;
    JInvariant pulled = reduce_fraction(substitute(jy.numerator, pi.N(), pi.D()), substitute(jy.denominator, pi.N(), pi.D()));
    return same_function(jx, pulled);
}

const char* status_name(Status s) {
    switch (s) {
    case Status::Pass: return "PASS";
    case Status::ConfigMismatch: return "CONFIG_MISMATCH";
    case Status::EquationMismatch: return "EQUATION_MISMATCH";
    case Status::Skipped: return "SKIPPED";
    }
    return "?";
}

std::string ReportRow::status_text() const {
    if (status == Status::Skipped) return std::string("SKIPPED(") + reason + ")";
    return status_name(status);
}

ReportRow verify_entry(const Catalog& c, const CatalogEntry& e) {
    auto t0 = std::chrono::steady_clock::now();
    ReportRow row;
    row.id = e.id;
    row.group = e.group;
    row.expected = e.expect_text;
    std::vector<std::string> notes;
    if (const MapDef* m = c.map(e.map); m && !m->erratum.empty()) notes.push_back(m->erratum);
    if (!e.note.empty()) notes.push_back(e.note);
    for (size_t i = 0; i < notes.size(); ++i) row.errata += (i ? "; " : "") + notes[i];
    row.reason = skip_reason(c, e);
    if (!row.reason.empty()) {
        row.status = Status::Skipped;
        return row;
    }
    row.field = e.field.to_string();
    try {
        Construction k = build(c, e);
        Configuration conf = configuration(k.result);
        row.computed = conf.to_string();
        row.euler = conf.euler();
        row.cusps = conf.fiber_count();
        row.semistable = conf.all_semistable();
        row.status = conf == e.expect ? Status::Pass : Status::ConfigMismatch;
        if (e.printed_model) {
            WeierstrassModel w = k.result;
            if (e.post) w = pullback(w, *e.post);
            if (e.printed_twist) w = quadratic_twist(w, HomogPoly::constant(*e.printed_twist));
            bool eq = models_equivalent(w, e.printed_model->lift(w.field()));
            row.equation = eq ? "equivalent" : "not equivalent";
            if (!eq && row.status == Status::Pass) row.status = Status::EquationMismatch;
        }
    } catch (const std::exception& ex) {
        row.status = Status::ConfigMismatch;
        row.reason = ex.what();
    }
    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return row;
}

int Report::count(Status s) const {
    return static_cast<int>(std::count_if(rows.begin(), rows.end(), [&](const ReportRow& r) { return r.status == s; }));
}

bool Report::ok() const {
    return std::none_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.failed(); });
}

Report verify_all(const Catalog& c, bool parallel, const std::string& only) {
    std::vector<const CatalogEntry*> todo;
    for (auto& e : c.entries)
        if (only.empty() || e.group == only || e.id.compare(0, only.size(), only) == 0) todo.push_back(&e);
    Report r;
    r.rows.resize(todo.size());
    std::atomic<size_t> next{0};
    auto work = [&] {
        for (size_t i; (i = next++) < todo.size();) r.rows[i] = verify_entry(c, *todo[i]);
    };
    unsigned n = parallel ? std::max(1u, std::thread::hardware_concurrency()) : 1u;
    n = std::min<unsigned>(n, static_cast<unsigned>(std::max<size_t>(todo.size(), 1)));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < n; ++i) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    return r;
}

std::string format_table(const Report& r) {
    std::ostringstream os;
    size_t wid = 5, wexp = 8, wcomp = 8;
    for (auto& row : r.rows) {
        wid = std::max(wid, row.id.size());
        wexp = std::max(wexp, row.expected.size());
        wcomp = std::max(wcomp, row.computed.size());
    }
    auto line = [&](const std::string& id, const std::string& st, const std::string& ex, const std::string& co,
                    const std::string& e, const std::string& eq, const std::string& note) {
        os << std::left << std::setw(wid + 2) << id << std::setw(34) << st << std::setw(wexp + 2) << ex << std::setw(wcomp + 2) << co
           << std::setw(5) << e << std::setw(16) << eq << note << "\n";
    };
    line("entry", "status", "expected", "computed", "e", "equation", "notes");
    std::map<std::string, std::vector<std::string>> skipped;
    for (auto& row : r.rows) {
        if (row.status == Status::Skipped) {
            skipped[row.reason].push_back(row.id);
            continue;
        }
        std::string note = row.errata;
        if (row.failed() && !row.reason.empty()) note = row.reason + (note.empty() ? "" : "; " + note);
        line(row.id, row.status_text(), row.expected, row.computed, row.computed.empty() ? "-" : std::to_string(row.euler),
             row.equation, note);
    }
    for (auto& [reason, ids] : skipped) {
        os << "SKIPPED (" << reason << "):";
        for (auto& id : ids) os << " " << id;
        os << "\n";
    }
    int fail = r.count(Status::ConfigMismatch) + r.count(Status::EquationMismatch);
    os << "PASS " << r.count(Status::Pass) << ", CONFIG_MISMATCH " << r.count(Status::ConfigMismatch) << ", EQUATION_MISMATCH "
       << r.count(Status::EquationMismatch) << ", SKIPPED " << r.count(Status::Skipped) << ", FAIL " << fail << "\n";
    return os.str();
}

std::string format_json_lines(const Report& r, bool timing) {
    std::ostringstream os;
    for (auto& row : r.rows) {
        nlohmann::ordered_json j;
        j["id"] = row.id;
        j["group"] = row.group;
        j["status"] = status_name(row.status);
        j["reason"] = row.reason;
        j["expected"] = row.expected;
        j["computed"] = row.computed;
        j["euler"] = row.euler;
        j["cusps"] = row.cusps;
        j["semistable"] = row.semistable;
        j["equation"] = row.equation;
        j["errata"] = row.errata;
        j["field"] = row.field;
        if (timing) j["seconds"] = row.seconds;
        os << j.dump() << "\n";
    }
    return os.str();
}

std::vector<IdentityStatus> check_identities(const Catalog& c) {
    std::vector<IdentityStatus> out;
    for (auto& [id, m] : c.maps) {
        IdentityStatus s{id, m.map.N() - m.map.D() == m.identity, m.quoted, std::nullopt, m.erratum};
        if (m.printed_identity) s.printed_holds = m.printed_identity->first == m.printed_identity->second;
        else if (m.quoted) s.printed_holds = s.holds;
        out.push_back(s);
    }
    return out;
}

}  // namespace ellfib
