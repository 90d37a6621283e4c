#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>
#include "ellfib/covers.hpp"
#include "ellfib/fibers.hpp"
#include "ellfib/kv.hpp"

namespace ellfib {

struct SurfaceDef {
    std::string id;
    WeierstrassModel model;
};

struct MapDef {
    std::string id;
    RationalMap map;
    HomogPoly identity;  // N - D, checked on load
    std::vector<Point> cusps;
    bool quoted = false;
    // printed identity lhs = rhs, when it differs from the stored map
    std::optional<std::pair<HomogPoly, HomogPoly>> printed_identity;
    std::string printed_N, printed_D;
    std::string erratum;
};

// none | all-starred | all-starred * (<poly>) | <poly>
struct TwistRecipe {
    bool all_starred = false;
    std::optional<HomogPoly> extra;
    std::string text;
    bool none() const { return !all_starred && !extra; }
};

struct CatalogEntry {
    std::string id, group;
    std::string base, map;  // map empty for a bare surface
    std::optional<RationalMap> pre;
    TwistRecipe twist;
    std::string expect_text;
    Configuration expect;
    Field field;
    std::optional<RationalMap> post;  // applied before comparing with the printed model
    std::optional<FieldElem> printed_twist;
    std::optional<WeierstrassModel> printed_model;
    std::string printed_ref;  // printed model given by surface id
    std::string skip;
    std::string note;
    KeyValues metadata;  // mw, form, sz, construction, defined_over
};

class Catalog {
public:
    std::map<std::string, SurfaceDef> surfaces;
    std::map<std::string, MapDef> maps;
    std::vector<CatalogEntry> entries;  // sorted by id

    const SurfaceDef* surface(const std::string& id) const;
    const MapDef* map(const std::string& id) const;
    const CatalogEntry* entry(const std::string& id) const;
};

std::string builtin_catalog_text();

// blank-line separated blocks keyed by surface/map/entry; later blocks replace earlier ones
// with the same id; throws CatalogCorrupt
Catalog parse_catalog(const std::string& text);
Catalog parse_catalog(const std::vector<std::string>& texts);
Catalog load_builtin();
// builtin plus every regular file in dir; a block without an id key takes the file stem
Catalog load_with_directory(const std::string& dir);
// builtin plus $ELLFIB_CATALOG_DIR when set
Catalog load_default();

struct Construction {
    WeierstrassModel base;  // after the pre-Moebius map
    RationalMap composite;  // pre then map
    WeierstrassModel raw;   // pullback before twisting
    HomogPoly alpha;
    WeierstrassModel result;
};

// throws on arithmetic failure; the entry must not be skipped
Construction build(const Catalog& c, const CatalogEntry& e);
HomogPoly twist_polynomial(const TwistRecipe& r, const HomogPoly& starred);
// configuration predicted fibre by fibre from the base, the ramification and the twist
Configuration predict(const Catalog& c, const CatalogEntry& e);
// j(result) = j(base) o (pre, map)
bool j_composition_holds(const Catalog& c, const CatalogEntry& e, const Construction& k);
// reason when the entry cannot be run, empty otherwise
std::string skip_reason(const Catalog& c, const CatalogEntry& e);

enum class Status { Pass, ConfigMismatch, EquationMismatch, Skipped };
const char* status_name(Status s);

struct ReportRow {
    std::string id, group;
    Status status = Status::Skipped;
    std::string reason;
    std::string expected, computed;
    int euler = 0, cusps = 0;
    bool semistable = false;
    std::string equation = "n/a";  // equivalent | not equivalent | n/a
    std::string errata;
    std::string field;
    double seconds = 0;
    std::string status_text() const;
    bool failed() const { return status == Status::ConfigMismatch || status == Status::EquationMismatch; }
};

ReportRow verify_entry(const Catalog& c, const CatalogEntry& e);

struct Report {
    std::vector<ReportRow> rows;
    int count(Status s) const;
    bool ok() const;
};

// only: id prefix or group name; empty runs everything
Report verify_all(const Catalog& c, bool parallel = true, const std::string& only = "");
std::string format_table(const Report& r);
std::string format_json_lines(const Report& r, bool timing = true);

struct IdentityStatus {
    std::string map;
    bool holds;           // stored identity
    bool quoted;
    std::optional<bool> printed_holds;
    std::string erratum;
};
std::vector<IdentityStatus> check_identities(const Catalog& c);

}  // namespace ellfib
