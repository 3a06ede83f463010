#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace vlcode {

using Symbol = int;
using Word = std::vector<Symbol>;

class ParseError : public std::runtime_error {
public:
    ParseError(std::string msg, std::size_t position)
        : std::runtime_error(std::move(msg)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// A finite ordered alphabet of at least two symbols. Symbols are interned as
// indices 0..size()-1; each carries a printable UTF-8 name (normally a single
// character). The symbol order used everywhere (shortest-word tie-breaking,
// padding letters, ...) is the declaration order.
class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> names);

    // Splits a string into single UTF-8 code points, one symbol each.
    static Alphabet from_utf8(const std::string& chars);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(Symbol s) const { return names_.at(static_cast<std::size_t>(s)); }
    std::optional<Symbol> find(const std::string& name) const;

    // "_" denotes the empty word. Throws ParseError on unknown symbols.
    Word parse_word(const std::string& text) const;
    std::string format_word(const Word& w) const;

    bool operator==(const Alphabet& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
    std::map<std::string, Symbol> index_;
};

std::vector<std::string> split_utf8(const std::string& text);

} // namespace vlcode
