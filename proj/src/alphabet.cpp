#include "vlcode/alphabet.hpp"

#include <set>

namespace vlcode {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.size() < 2)
        throw std::invalid_argument("alphabet needs at least two symbols");
    for (std::size_t i = 0; i < names_.size(); ++i) {
        const std::string& n = names_[i];
        if (n.empty() || n == "_")
            throw std::invalid_argument("invalid symbol name '" + n + "'");
        if (!index_.emplace(n, static_cast<Symbol>(i)).second)
            throw std::invalid_argument("duplicate symbol '" + n + "'");
    }
}

std::vector<std::string> split_utf8(const std::string& text) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < text.size()) {
        std::size_t len = 1;
        unsigned char c = static_cast<unsigned char>(text[i]);
        if ((c & 0x80u) != 0) {
            while (i + len < text.size() &&
                   (static_cast<unsigned char>(text[i + len]) & 0xc0u) == 0x80u)
                ++len;
        }
        out.push_back(text.substr(i, len));
        i += len;
    }
    return out;
}

Alphabet Alphabet::from_utf8(const std::string& chars) {
    return Alphabet(split_utf8(chars));
}

std::optional<Symbol> Alphabet::find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Word Alphabet::parse_word(const std::string& text) const {
    if (text == "_") return {};
    Word w;
    std::size_t i = 0;
    while (i < text.size()) {
        // longest declared symbol name matching at position i
        std::optional<Symbol> best;
        std::size_t best_len = 0;
        for (const auto& [name, sym] : index_) {
            if (name.size() > best_len && text.compare(i, name.size(), name) == 0) {
                best = sym;
                best_len = name.size();
            }
        }
        if (!best)
            throw ParseError("unknown symbol at position " + std::to_string(i) +
                                 " in word '" + text + "'",
                             i);
        w.push_back(*best);
        i += best_len;
    }
    return w;
}

std::string Alphabet::format_word(const Word& w) const {
    if (w.empty()) return "_";
    std::string out;
    for (Symbol s : w) out += name(s);
    return out;
}

} // namespace vlcode
