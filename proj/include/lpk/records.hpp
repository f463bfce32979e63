#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lpk/abelian_group.hpp"

namespace lpk {

/// One structured output line: space-separated `key=value` fields in insertion order.
/// Keys and values are non-empty and contain neither whitespace nor `=` (keys) /
/// whitespace (values).
class Record {
public:
    Record() = default;
    explicit Record(std::string kind) { add("record", std::move(kind)); }

    Record& add(std::string key, std::string value);
    Record& add(std::string key, long long value) { return add(std::move(key), std::to_string(value)); }
    /// Adds `<prefix>free=<rank>` and `<prefix>torsion=<d1,d2,...|->`.
    Record& add_group(const std::string& prefix, const FinAbGroup& g);

    std::optional<std::string> get(std::string_view key) const;
    /// Throws std::out_of_range when absent.
    const std::string& at(std::string_view key) const;
    FinAbGroup group(const std::string& prefix) const;

    const std::vector<std::pair<std::string, std::string>>& fields() const { return fields_; }
    std::string to_string() const;

    friend bool operator==(const Record&, const Record&) = default;

private:
    std::vector<std::pair<std::string, std::string>> fields_;
};

/// Throws std::invalid_argument on malformed fields.
Record parse_record(std::string_view line);
/// Parses every non-empty line.
std::vector<Record> parse_records(std::string_view text);

}  // namespace lpk
