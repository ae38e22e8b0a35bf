#include "gcoring/report.hpp"

#include <algorithm>

namespace gcoring {

bool CheckReport::ok() const {
    return std::all_of(items.begin(), items.end(), [](const CheckItem& i) { return i.pass; });
}

std::size_t CheckReport::failures() const {
    return static_cast<std::size_t>(
        std::count_if(items.begin(), items.end(), [](const CheckItem& i) { return !i.pass; }));
}

void CheckReport::add(std::string id, std::string anchor, bool pass, std::string witness) {
    items.push_back(CheckItem{std::move(id), std::move(anchor), pass, pass ? std::string() : std::move(witness)});
}

void CheckReport::merge(const CheckReport& other, const std::string& prefix) {
    for (const auto& it : other.items) {
        CheckItem c = it;
        if (!prefix.empty()) c.id = prefix + "/" + c.id;
        items.push_back(std::move(c));
    }
}

void CheckReport::sort_items() {
    std::stable_sort(items.begin(), items.end(),
                     [](const CheckItem& a, const CheckItem& b) { return a.id < b.id; });
}

const CheckItem* CheckReport::find(const std::string& id) const {
    for (const auto& it : items)
        if (it.id == id) return &it;
    return nullptr;
}

std::vector<std::string> CheckReport::failed_ids() const {
    std::vector<std::string> out;
    for (const auto& it : items)
        if (!it.pass) out.push_back(it.id);
    return out;
}

}  // namespace gcoring
