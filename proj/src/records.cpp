#include "lpk/records.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace lpk {

namespace {

bool has_space(std::string_view s) {
    return std::any_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

}  // namespace

Record& Record::add(std::string key, std::string value) {
    if (key.empty() || value.empty() || has_space(key) || has_space(value) || key.find('=') != std::string::npos)
        throw std::invalid_argument("record: bad field '" + key + "=" + value + "'");
    fields_.emplace_back(std::move(key), std::move(value));
    return *this;
}

Record& Record::add_group(const std::string& prefix, const FinAbGroup& g) {
    add(prefix + "free", static_cast<long long>(g.free_rank()));
    return add(prefix + "torsion", g.torsion_string());
}

std::optional<std::string> Record::get(std::string_view key) const {
    for (const auto& [k, v] : fields_)
        if (k == key) return v;
    return std::nullopt;
}

const std::string& Record::at(std::string_view key) const {
    for (const auto& [k, v] : fields_)
        if (k == key) return v;
    throw std::out_of_range("record: no field '" + std::string(key) + "'");
}

FinAbGroup Record::group(const std::string& prefix) const {
    const std::size_t free_rank = std::stoul(at(prefix + "free"));
    std::vector<Integer> orders;
    const std::string& torsion = at(prefix + "torsion");
    if (torsion != "-") {
        std::stringstream ss(torsion);
        std::string item;
        while (std::getline(ss, item, ',')) orders.emplace_back(item);
    }
    return FinAbGroup::from_cyclic_orders(std::move(orders), free_rank);
}

std::string Record::to_string() const {
    std::string out;
    for (const auto& [k, v] : fields_) {
        if (!out.empty()) out += ' ';
        out += k + "=" + v;
    }
    return out;
}

Record parse_record(std::string_view line) {
    Record r;
    std::stringstream ss{std::string(line)};
    std::string token;
    while (ss >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == token.size())
            throw std::invalid_argument("record: malformed field '" + token + "'");
        r.add(token.substr(0, eq), token.substr(eq + 1));
    }
    return r;
}

std::vector<Record> parse_records(std::string_view text) {
    std::vector<Record> out;
    std::stringstream ss{std::string(text)};
    std::string line;
    while (std::getline(ss, line))
        if (!std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); }))
            out.push_back(parse_record(line));
    return out;
}

}  // namespace lpk
