#ifndef UTILS_SYMBOL_H
#define UTILS_SYMBOL_H

#include <cstdint>
#include <string>
#include <string_view>

namespace gtplan {

/*
  Interned string. Comparison and hashing are O(1); id 0 is the empty
  symbol. Interning order is deterministic within a run, so symbol ids must
  never leak into anything that has to be stable across runs (canonical
  certificates hash the underlying strings instead).
*/
class Symbol {
public:
    Symbol() : id(0) {}
    explicit Symbol(std::string_view text);

    const std::string &str() const;
    bool empty() const {return id == 0;}
    std::uint32_t value() const {return id;}

    friend bool operator==(Symbol a, Symbol b) {return a.id == b.id;}
    friend bool operator!=(Symbol a, Symbol b) {return a.id != b.id;}
    friend bool operator<(Symbol a, Symbol b) {return a.id < b.id;}

private:
    std::uint32_t id;
};

} // namespace gtplan

template<>
struct std::hash<gtplan::Symbol> {
    size_t operator()(gtplan::Symbol s) const {
        return std::hash<std::uint32_t>()(s.value());
    }
};

#endif
