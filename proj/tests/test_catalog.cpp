#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "support.hpp"

using namespace ellfib;

namespace {

int in_group(const Catalog& c, const std::string& g) {
    int n = 0;
    for (auto& e : c.entries) n += e.group == g;
    return n;
}

const char* kMini = R"(
surface = Y
field = rationals
M = 1
A = -3*t^2*(s^2-3*t^2)
B = s*t^3*(2*s^2-9*t^2)

map = quartic
N = 256*s^3*(s-t)
D = -27*t^4
identity_check = (4*s-3*t)^2*(16*s^2+8*s*t+3*t^2)

entry = good
base = Y
pre = -2,2,inf
map = quartic
expect = [1,1,1,2,3,16]

entry = wrong
base = Y
pre = -2,2,inf
map = quartic
expect = [1,1,1,2,4,15]
)";

}  // namespace

TEST_CASE("builtin catalog contents") {
    const Catalog& c = test::builtin();
    CHECK(in_group(c, "s4") == 7);
    CHECK(in_group(c, "s5") == 8);
    CHECK(in_group(c, "s6") == 18);
    CHECK(in_group(c, "ext") == 7);
    CHECK(in_group(c, "base") == 9);
    CHECK(in_group(c, "s7") >= 45);
    for (auto id : {"X411", "X141", "X222", "X431", "X321"}) CHECK(c.surface(id));

    const CatalogEntry* fig2 = c.entry("fig2");
    REQUIRE(fig2);
    CHECK(fig2->base == "X411");
    CHECK(fig2->map == "pi4");
    CHECK(fig2->pre);
    CHECK(fig2->printed_model);
    CHECK(fig2->expect_text == "[1,1,1,2,3,16]");

    const CatalogEntry* f17 = c.entry("fig17");
    REQUIRE(f17);
    CHECK(f17->twist.all_starred);
    Construction k = build(c, *f17);
    CHECK(normalized(k.alpha) == normalized(test::P("10*t^4+4*s*t^3+2*s^2*t^2+2*s^3*t-s^4")));

    const CatalogEntry* a = c.entry("no148a");
    const CatalogEntry* b = c.entry("no148b");
    REQUIRE(a);
    REQUIRE(b);
    CHECK(a->map == "piB");
    CHECK(a->expect_text == "[1,2,3,10,2*]");
    CHECK(b->expect_text == "[1,2,3,10,2*]");
    auto meta = [](const CatalogEntry* e, const std::string& k) { return *kv_find(e->metadata, k); };
    CHECK(meta(a, "form") == "6,0,10");
    CHECK(meta(b, "form") == "4,2,16");
}

TEST_CASE("entry verification") {
    const Catalog& c = test::builtin();
    ReportRow r = verify_entry(c, *c.entry("fig2"));
    CHECK(r.status == Status::Pass);
    CHECK(r.euler == 24);
    CHECK(r.cusps == 6);
    CHECK(r.equation == "equivalent");

    r = verify_entry(c, *c.entry("x411-raw"));
    CHECK(r.status == Status::Pass);
    CHECK(r.computed == "[1,1,4*]");
    CHECK(r.euler == 12);

    r = verify_entry(c, *c.entry("no164"));
    CHECK(r.status == Status::Skipped);
    CHECK(r.status_text() == "SKIPPED(missing-base-surface)");
}

TEST_CASE("negative control and empty catalog") {
    Catalog c = parse_catalog(kMini);
    Report r = verify_all(c);
    REQUIRE(r.rows.size() == 2);
    CHECK(r.rows[0].id == "good");
    CHECK(r.rows[0].status == Status::Pass);
    CHECK(r.rows[1].status == Status::ConfigMismatch);
    CHECK_FALSE(r.ok());

    Catalog empty = parse_catalog(std::string());
    Report e = verify_all(empty);
    CHECK(e.rows.empty());
    CHECK(e.ok());
    CHECK(format_json_lines(e).empty());
}

TEST_CASE("restricted runs") {
    const Catalog& c = test::builtin();
    Report r = verify_all(c, true, "s4");
    CHECK(r.rows.size() == 7);
    CHECK(r.count(Status::Pass) == 7);
    CHECK(verify_all(c, true, "x41").rows.size() == 2);
    CHECK(verify_all(c, true, "x4").rows.size() == 3);
}

TEST_CASE("corrupt catalogs") {
    auto kind = [](const std::string& text) {
        try {
            parse_catalog(text);
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::Unsupported;
    };
    std::string bad = kMini;
    bad.replace(bad.find("(4*s-3*t)^2"), 11, "(4*s-5*t)^2");
    CHECK(kind(bad) == ErrorKind::CatalogCorrupt);
    CHECK(kind("entry = x\nbase = nowhere\nexpect = [1]\n") == ErrorKind::CatalogCorrupt);
    CHECK(kind("entry = x\nbase = nowhere\nexpect = [1]\nskip = missing-base-surface\n") == ErrorKind::Unsupported);
    CHECK(kind("just some words\n") == ErrorKind::CatalogCorrupt);
    CHECK(kind("surface = Z\nM = 1\nA = s^5\nB = t^6\n") == ErrorKind::CatalogCorrupt);
    std::string field = kMini;
    field += "\nentry = other\nbase = Y\nmap = quartic\nfield = extension: x^2+1\nexpect = [1]\n";
    CHECK(kind(field) == ErrorKind::Unsupported);
    std::string narrow = "map = m\nfield = extension: x^2+1\nN = s^2+a*t^2\nD = t^2\n\nsurface = Y\nM = 1\nA = s^4+t^4\nB = s^6\n\n"
                         "entry = e\nbase = Y\nmap = m\nfield = rationals\nexpect = [1]\n";
    CHECK(kind(narrow) == ErrorKind::CatalogCorrupt);
}

TEST_CASE("user directory") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "ellfib_catalog_test";
    fs::remove_all(dir);
    fs::create_directories(dir);
    // any surface under the id of a missing base activates the entry
    std::ofstream(dir / "H[1,3,5,III].surf") << "field = rationals\nM = 1\nA = -3*t^2*(s^2-3*t^2)\nB = s*t^3*(2*s^2-9*t^2)\n";
    std::ofstream(dir / "quartic.map") << "degree = 4\nN = 256*s^3*(s-t)\nD = -27*t^4\n";
    std::ofstream(dir / "mine.entry") << "entry = mine; base = X411; map = quartic; twist = none; expect = [1,1,1,1,1,1,1,1,16]\n";
    Catalog c = load_with_directory(dir.string());
    CHECK(c.surface("H[1,3,5,III]"));
    CHECK(c.map("quartic"));
    REQUIRE(c.entry("mine"));
    ReportRow r = verify_entry(c, *c.entry("mine"));
    CHECK(r.computed == "[1,1,1,1,1,1,1,1,16]");
    CHECK(r.status == Status::Pass);
    ReportRow s = verify_entry(c, *c.entry("no164"));
    CHECK(s.status != Status::Skipped);
    CHECK(s.status == Status::ConfigMismatch);
    fs::remove_all(dir);
}

TEST_CASE("identities") {
    auto ids = check_identities(test::builtin());
    int quoted = 0;
    for (auto& s : ids) {
        CHECK(s.holds);
        if (!s.quoted) continue;
        ++quoted;
        REQUIRE(s.printed_holds);
        if (!*s.printed_holds) CHECK_FALSE(s.erratum.empty());
    }
    CHECK(quoted >= 15);
}

TEST_CASE("report rendering") {
    Catalog c = parse_catalog(kMini);
    Report r = verify_all(c, false);
    std::string table = format_table(r);
    CHECK(table.find("CONFIG_MISMATCH") != std::string::npos);
    CHECK(table.find("PASS 1, CONFIG_MISMATCH 1, EQUATION_MISMATCH 0, SKIPPED 0, FAIL 1") != std::string::npos);
    std::string json = format_json_lines(r, false);
    CHECK(json.find("\"id\":\"good\"") != std::string::npos);
    CHECK(std::count(json.begin(), json.end(), '\n') == 2);
}
