#pragma once

#include <string>
#include <vector>

namespace gcoring {

struct CheckItem {
    std::string id;
    std::string anchor;  // name of the result being checked
    bool pass = true;
    std::string witness;  // failure data, empty on pass
};

struct CheckReport {
    std::string suite;
    std::vector<CheckItem> items;

    bool ok() const;
    std::size_t failures() const;
    void add(std::string id, std::string anchor, bool pass, std::string witness = "");
    // Appends other's items with ids prefixed by "prefix/".
    void merge(const CheckReport& other, const std::string& prefix = "");
    void sort_items();
    const CheckItem* find(const std::string& id) const;
    std::vector<std::string> failed_ids() const;
};

}  // namespace gcoring
