#include "symbol.h"

#include <deque>
#include <mutex>
#include <unordered_map>

namespace gtplan {

namespace {
struct SymbolTable {
    std::mutex mutex;
    // deque: element addresses stay valid, the index holds views into them
    std::deque<std::string> strings{""};
    std::unordered_map<std::string_view, std::uint32_t> index{{"", 0}};

    std::uint32_t intern(std::string_view text) {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = index.find(text);
        if (it != index.end())
            return it->second;
        strings.push_back(std::string(text));
        std::uint32_t id = static_cast<std::uint32_t>(strings.size() - 1);
        index.emplace(strings.back(), id);
        return id;
    }
};

SymbolTable &table() {
    static SymbolTable t;
    return t;
}
}

Symbol::Symbol(std::string_view text) : id(table().intern(text)) {
}

const std::string &Symbol::str() const {
    return table().strings[id];
}

} // namespace gtplan
