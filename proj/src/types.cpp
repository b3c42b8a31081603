#include "hpkb/types.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>

namespace hpkb {

const char* err_name(Err e) {
    switch (e) {
        case Err::UnknownTable: return "UnknownTable";
        case Err::UnknownColumn: return "UnknownColumn";
        case Err::UnknownEdgeType: return "UnknownEdgeType";
        case Err::UnknownLabel: return "UnknownLabel";
        case Err::UnknownDocument: return "UnknownDocument";
        case Err::TypeMismatch: return "TypeMismatch";
        case Err::MissingProvenance: return "MissingProvenance";
        case Err::SealedStore: return "SealedStore";
        case Err::UnsealedStore: return "UnsealedStore";
        case Err::DanglingReference: return "DanglingReference";
        case Err::DuplicateMapping: return "DuplicateMapping";
        case Err::IntegrityViolation: return "IntegrityViolation";
        case Err::IllegalChange: return "IllegalChange";
        case Err::EmptyDocument: return "EmptyDocument";
        case Err::MalformedOutput: return "MalformedOutput";
        case Err::MixedRuleSet: return "MixedRuleSet";
        case Err::InvalidPlan: return "InvalidPlan";
        case Err::CitationViolation: return "CitationViolation";
        case Err::InsufficientKb: return "InsufficientKb";
        case Err::IoError: return "IoError";
        case Err::BadArgument: return "BadArgument";
    }
    return "Unknown";
}

namespace {

const std::array<std::string, 12> kDosageFormSuffixes = {
    "tablet",  "tablets",  "capsule",    "capsules",   "injection", "solution",
    "syrup",   "cream",    "suspension", "ointment",   "drops",     "inhaler",
};

bool is_suffix_word(const std::string& w) {
    return std::find(kDosageFormSuffixes.begin(), kDosageFormSuffixes.end(), w) !=
           kDosageFormSuffixes.end();
}

}  // namespace

EntityId normalize_entity(const std::string& raw) {
    std::vector<std::string> words;
    std::string cur;
    for (char c : raw) {
        unsigned char u = static_cast<unsigned char>(c);
        if (std::isspace(u)) {
            if (!cur.empty()) words.push_back(cur), cur.clear();
        } else {
            cur.push_back(static_cast<char>(std::tolower(u)));
        }
    }
    if (!cur.empty()) words.push_back(cur);
    while (words.size() > 1 && is_suffix_word(words.back())) words.pop_back();

    std::string out;
    for (const auto& w : words) {
        if (!out.empty()) out.push_back(' ');
        out += w;
    }
    return EntityId{out};
}

bool is_null(const Value& v) { return std::holds_alternative<std::monostate>(v); }

std::string value_to_text(const Value& v) {
    std::ostringstream os;
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
                os << "null";
            } else if constexpr (std::is_same_v<T, bool>) {
                os << (x ? "true" : "false");
            } else if constexpr (std::is_same_v<T, double>) {
                os << x;
            } else if constexpr (std::is_same_v<T, std::string>) {
                os << '"' << x << '"';
            } else if constexpr (std::is_same_v<T, Quantity>) {
                os << x.value << ' ' << x.unit;
            } else if constexpr (std::is_same_v<T, NumericRange>) {
                os << (x.lo_incl ? '[' : '(');
                if (x.lo) os << *x.lo; else os << '?';
                os << ',';
                if (x.hi) os << *x.hi; else os << '?';
                os << (x.hi_incl ? ']' : ')');
            }
        },
        v);
    return os.str();
}

UnitTable::UnitTable() {
    auto add = [&](const std::string& unit, const std::string& dim, double factor) {
        units_[unit] = {dim, factor};
    };
    // mass, canonical mg
    add("mg", "mass", 1.0);
    add("g", "mass", 1000.0);
    add("mcg", "mass", 0.001);
    add("ug", "mass", 0.001);
    add("kg", "mass", 1.0e6);
    // volume, canonical mL
    add("mL", "volume", 1.0);
    add("ml", "volume", 1.0);
    add("L", "volume", 1000.0);
    add("l", "volume", 1000.0);
    // clearance, canonical mL/min
    add("mL/min", "clearance", 1.0);
    add("ml/min", "clearance", 1.0);
    add("L/min", "clearance", 1000.0);
    // time, canonical years for ages
    add("years", "age", 1.0);
    add("year", "age", 1.0);
    add("months", "age", 1.0 / 12.0);
    // daily dose rate, canonical mg/day
    add("mg/day", "dose_rate", 1.0);
    add("g/day", "dose_rate", 1000.0);
}

const UnitTable& UnitTable::instance() {
    static UnitTable t;
    return t;
}

std::optional<double> UnitTable::convert(double value, const std::string& from,
                                         const std::string& to) const {
    if (from == to) return value;
    auto f = units_.find(from);
    auto t = units_.find(to);
    if (f == units_.end() || t == units_.end()) return std::nullopt;
    if (f->second.first != t->second.first) return std::nullopt;
    return value * f->second.second / t->second.second;
}

std::string row_ref_text(const TableRowRef& ref) {
    return ref.table + "/r" + std::to_string(ref.key);
}

std::uint64_t fnv1a(std::string_view data, std::uint64_t seed) {
    std::uint64_t h = seed;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[static_cast<size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

}  // namespace hpkb
