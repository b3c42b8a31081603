#pragma once
// Versioned hybrid schema: relational table definitions, graph labels and
// edge types, and the table-to-label anchor declarations behind the mapping
// function. Changes are additive only and recorded as diffs so that any
// version can be reproduced from the seed.

#include <nlohmann/json_fwd.hpp>

#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "hpkb/types.hpp"

namespace hpkb {

using json = nlohmann::json;

enum class ColumnType { Text, Number, Boolean, Enum, Range };

const char* column_type_name(ColumnType t);
std::optional<ColumnType> column_type_from(const std::string& name);

struct ColumnDef {
    std::string name;
    ColumnType type = ColumnType::Text;
    bool nullable = true;
    bool indexed = false;
    std::string unit;                      // canonical unit for Number/Range columns
    std::vector<std::string> enum_values;  // for Enum columns

    bool operator==(const ColumnDef&) const = default;
};

struct TableDef {
    std::string name;
    std::vector<ColumnDef> columns;

    const ColumnDef* find_column(const std::string& col) const;
    bool operator==(const TableDef&) const = default;
};

struct EdgeTypeDef {
    std::string name;
    std::string src_label;
    std::string dst_label;

    bool operator==(const EdgeTypeDef&) const = default;
    auto operator<=>(const EdgeTypeDef&) const = default;
};

// Which table anchors entities of a given node label (the phi declaration).
struct MappingDecl {
    std::string table;
    std::string label;

    bool operator==(const MappingDecl&) const = default;
    auto operator<=>(const MappingDecl&) const = default;
};

// ---------------------------------------------------------------------------
// Additive schema changes

struct AddTable { TableDef table; };
struct AddColumn { std::string table; ColumnDef column; };
struct AddLabel { std::string label; };
struct AddEdgeType { EdgeTypeDef edge_type; };
struct AddMappingDecl { MappingDecl decl; };

using SchemaChange = std::variant<AddTable, AddColumn, AddLabel, AddEdgeType, AddMappingDecl>;

bool change_targets_tables(const SchemaChange& c);
std::string change_key(const SchemaChange& c);  // canonical identity for dedup
json change_to_json(const SchemaChange& c);
SchemaChange change_from_json(const json& j);

struct SchemaDiff {
    int from_version = 0;
    int to_version = 0;
    std::vector<SchemaChange> changes;
};

// ---------------------------------------------------------------------------

class HybridSchema {
public:
    static HybridSchema seed();           // minimal: Drugs table + Drug label + anchor
    static HybridSchema standard_audit(); // the stabilized audit schema the pipeline uses

    int version() const { return version_; }
    const std::vector<TableDef>& tables() const { return tables_; }
    const std::set<std::string>& node_labels() const { return node_labels_; }
    const std::set<EdgeTypeDef>& edge_types() const { return edge_types_; }
    const std::set<MappingDecl>& mapping_decls() const { return mapping_decls_; }
    const std::vector<SchemaDiff>& history() const { return history_; }

    const TableDef* find_table(const std::string& name) const;
    bool has_label(const std::string& label) const;
    bool has_edge_type(const std::string& name) const;
    std::vector<EdgeTypeDef> edge_type_decls(const std::string& name) const;
    std::optional<std::string> anchor_table_for(const std::string& label) const;

    // Returns a new schema at version()+1 with the changes applied and the
    // diff recorded. Throws Error(IllegalChange) on duplicates or references
    // to undeclared labels; the input schema is left untouched.
    HybridSchema apply(const std::vector<SchemaChange>& changes) const;

    // Validates one change against this schema without applying it.
    void check_change(const SchemaChange& c) const;

    json to_json() const;                       // includes embedded diff history
    static HybridSchema from_json(const json& j);
    std::string canonical_dump() const;         // byte-stable rendering (no history)

    void save(const std::string& path) const;
    static HybridSchema load(const std::string& path);

private:
    void apply_in_place(const SchemaChange& c);

    int version_ = 0;
    std::vector<TableDef> tables_;
    std::set<std::string> node_labels_;
    std::set<EdgeTypeDef> edge_types_;
    std::set<MappingDecl> mapping_decls_;
    std::vector<SchemaDiff> history_;
};

json column_def_to_json(const ColumnDef& c);
ColumnDef column_def_from_json(const json& j);
json table_def_to_json(const TableDef& t);
TableDef table_def_from_json(const json& j);

}  // namespace hpkb
