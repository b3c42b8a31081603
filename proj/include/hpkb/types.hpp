#pragma once
// Core domain types shared across the hybrid knowledge-base engine:
// entity identity, provenance, typed values with unit normalization,
// and the error taxonomy.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace hpkb {

// ---------------------------------------------------------------------------
// Errors

enum class Err {
    UnknownTable,
    UnknownColumn,
    UnknownEdgeType,
    UnknownLabel,
    UnknownDocument,
    TypeMismatch,
    MissingProvenance,
    SealedStore,
    UnsealedStore,
    DanglingReference,
    DuplicateMapping,
    IntegrityViolation,
    IllegalChange,
    EmptyDocument,
    MalformedOutput,
    MixedRuleSet,
    InvalidPlan,
    CitationViolation,
    InsufficientKb,
    IoError,
    BadArgument,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
public:
    Error(Err code, const std::string& what)
        : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}
    Err code() const { return code_; }

private:
    Err code_;
};

// ---------------------------------------------------------------------------
// Identity

// Globally unique entity key, stable across the relational and graph stores.
// Produced by normalize_entity(); the same real-world entity always maps to
// the same EntityId in rows and vertices.
struct EntityId {
    std::string value;

    bool operator==(const EntityId&) const = default;
    auto operator<=>(const EntityId&) const = default;
};

// Case-fold, trim, collapse whitespace and strip trailing dosage-form words
// (tablet, capsule, ...) from a raw entity mention.
EntityId normalize_entity(const std::string& raw);

// ---------------------------------------------------------------------------
// Provenance

// Every fact persisted in either store carries the triple
// (doc_id, section, source_text); source_text must be a verbatim excerpt.
struct Provenance {
    std::string doc_id;
    std::string section;
    std::string source_text;

    bool operator==(const Provenance&) const = default;
};

// ---------------------------------------------------------------------------
// Values and units

struct Quantity {
    double value = 0.0;
    std::string unit;

    bool operator==(const Quantity&) const = default;
};

// Interval condition. A missing endpoint means unbounded on that side.
struct NumericRange {
    std::optional<double> lo;
    std::optional<double> hi;
    bool lo_incl = true;
    bool hi_incl = true;

    bool contains(double x) const {
        if (lo && (lo_incl ? x < *lo : x <= *lo)) return false;
        if (hi && (hi_incl ? x > *hi : x >= *hi)) return false;
        return true;
    }
    bool operator==(const NumericRange&) const = default;
};

// Cell value. Quantity appears only in caller-supplied inputs; stored rows
// hold plain doubles normalized to the column's canonical unit.
using Value = std::variant<std::monostate, bool, double, std::string, Quantity, NumericRange>;

bool is_null(const Value& v);
std::string value_to_text(const Value& v);

// Fixed unit table. Conversions only within one dimension; unknown units
// must match the target verbatim.
class UnitTable {
public:
    static const UnitTable& instance();
    // Factor such that 1 <unit> = factor <canonical-of-dimension>.
    std::optional<double> convert(double value, const std::string& from, const std::string& to) const;

private:
    UnitTable();
    std::map<std::string, std::pair<std::string, double>> units_;  // unit -> (dimension, factor)
};

// ---------------------------------------------------------------------------
// Row identity

using RowKey = std::uint64_t;

struct TableRowRef {
    std::string table;
    RowKey key = 0;

    bool operator==(const TableRowRef&) const = default;
    auto operator<=>(const TableRowRef&) const = default;
};

std::string row_ref_text(const TableRowRef& ref);

// 64-bit FNV-1a, used for content digests and the store seal hash.
std::uint64_t fnv1a(std::string_view data, std::uint64_t seed = 0xcbf29ce484222325ull);
std::string hex64(std::uint64_t v);

}  // namespace hpkb
