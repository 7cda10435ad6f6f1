#include "unirat/varset.hpp"

#include <set>

namespace unirat {

VarSetPtr VarSet::make(std::vector<std::string> names) {
    if (names.empty()) throw error("a VarSet needs at least one variable");
    std::set<std::string> uniq(names.begin(), names.end());
    if (uniq.size() != names.size()) throw error("duplicate variable name in VarSet");
    return VarSetPtr(new VarSet(std::move(names)));
}

int VarSet::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    return -1;
}

}  // namespace unirat
