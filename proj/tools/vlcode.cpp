// vlcode: decide error-detection conditions of variable-length codes and
// build completions, printing deterministic JSON reports.

#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"

#include "vlcode/json_io.hpp"
#include "vlcode/regex.hpp"

namespace {

using namespace vlcode;

struct InputOpts {
    std::string alphabet;
    std::string words_csv;
    std::string regex;
    long cap = kDefaultStateCap;
    int max_factor_k = 4;
};

struct RelationOpts {
    std::string metric = "prefix";
    int k = 1;
    std::string perm;
    std::string kind = "auto";
    std::string conds = "c1,c2,c3,c4";
};

void add_input_opts(CLI::App* cmd, InputOpts& in) {
    cmd->add_option("--alphabet", in.alphabet, "alphabet symbols, e.g. ab");
    auto* w = cmd->add_option("--words", in.words_csv, "comma-separated word list ('_' = empty)");
    auto* r = cmd->add_option("--regex", in.regex,
                              "regular expression (+ union, juxtaposition, * star, _ empty; "
                              "'-' reads stdin)");
    w->excludes(r);
    cmd->add_option("--cap", in.cap, "state/model size cap for automaton constructions");
    cmd->add_option("--max-factor-k", in.max_factor_k, "largest allowed factor tolerance");
    cmd->add_flag("--json", "emit JSON (always on; accepted for compatibility)");
}

void add_relation_opts(CLI::App* cmd, RelationOpts& rel) {
    cmd->add_option("--metric", rel.metric, "prefix | suffix | factor | theta")
        ->check(CLI::IsMember({"prefix", "suffix", "factor", "theta"}));
    cmd->add_option("-k", rel.k, "error tolerance (>= 1)");
    cmd->add_option("--perm", rel.perm, "letter permutation, e.g. A:T,T:A,C:G,G:C");
    cmd->add_option("--kind", rel.kind, "auto | anti (theta only)")
        ->check(CLI::IsMember({"auto", "anti"}));
    cmd->add_option("--cond", rel.conds, "subset of c1,c2,c3,c4 to evaluate");
}

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    std::stringstream ss(text);
    while (std::getline(ss, cur, ',')) out.push_back(cur);
    return out;
}

class CliError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_stdin() {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    std::string s = ss.str();
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    return s;
}

// Alphabet from --alphabet, or inferred from the words/regex/permutation
// (sorted by symbol name).
Alphabet resolve_alphabet(const InputOpts& in, const std::string& perm,
                          const std::string& regex_text) {
    if (!in.alphabet.empty()) return Alphabet::from_utf8(in.alphabet);
    std::set<std::string> syms;
    auto add_text = [&](const std::string& text, bool strip_ops) {
        for (const std::string& c : split_utf8(text)) {
            if (c == "," || c == "_") continue;
            if (strip_ops && (c == "+" || c == "*" || c == "(" || c == ")" || c == " " ||
                              c == "\t" || c == "\n"))
                continue;
            syms.insert(c);
        }
    };
    if (!in.words_csv.empty()) add_text(in.words_csv, false);
    if (!regex_text.empty()) add_text(regex_text, true);
    for (const std::string& part : split_csv(perm)) {
        auto colon = part.find(':');
        if (colon == std::string::npos) continue;
        add_text(part.substr(0, colon), false);
        add_text(part.substr(colon + 1), false);
    }
    if (syms.size() < 2)
        throw CliError("cannot infer an alphabet of size >= 2; pass --alphabet");
    return Alphabet(std::vector<std::string>(syms.begin(), syms.end()));
}

struct ParsedInput {
    Alphabet alphabet;
    Nfa language;
    Json descr;
};

ParsedInput parse_input(const InputOpts& in, const std::string& perm) {
    std::string regex_text = in.regex;
    if (regex_text == "-") regex_text = read_stdin();
    if (in.words_csv.empty() && regex_text.empty())
        throw CliError("one of --words or --regex is required");
    Alphabet ab = resolve_alphabet(in, perm, regex_text);
    Json descr;
    std::string joined;
    for (Symbol s = 0; s < ab.size(); ++s) joined += ab.name(s);
    descr["alphabet"] = joined;
    if (!in.words_csv.empty()) {
        std::vector<Word> ws;
        Json names = Json::array();
        for (const std::string& token : split_csv(in.words_csv)) {
            Word w = ab.parse_word(token);
            names.push_back(ab.format_word(w));
            ws.push_back(std::move(w));
        }
        descr["words"] = std::move(names);
        return ParsedInput{ab, Nfa::from_words(ws, ab.size()), std::move(descr)};
    }
    descr["regex"] = regex_text;
    return ParsedInput{ab, compile_regex(regex_text, ab), std::move(descr)};
}

PermMorphism parse_morphism(const std::string& perm, const std::string& kind,
                            const Alphabet& ab) {
    if (perm.empty()) throw CliError("--metric theta requires --perm");
    std::vector<Symbol> table(static_cast<std::size_t>(ab.size()), -1);
    for (const std::string& part : split_csv(perm)) {
        auto colon = part.find(':');
        if (colon == std::string::npos)
            throw CliError("bad --perm entry '" + part + "' (expected from:to)");
        auto from = ab.find(part.substr(0, colon));
        auto to = ab.find(part.substr(colon + 1));
        if (!from || !to)
            throw CliError("--perm mentions a symbol outside the alphabet: '" + part + "'");
        if (table[static_cast<std::size_t>(*from)] != -1)
            throw CliError("--perm maps '" + ab.name(*from) + "' twice");
        table[static_cast<std::size_t>(*from)] = *to;
    }
    for (Symbol s = 0; s < ab.size(); ++s)
        if (table[static_cast<std::size_t>(s)] == -1)
            throw CliError("--perm misses symbol '" + ab.name(s) + "'");
    try {
        return PermMorphism::make(
            kind == "anti" ? MorphismKind::anti_automorphism : MorphismKind::automorphism,
            std::move(table));
    } catch (const std::invalid_argument& e) {
        throw CliError(std::string("--perm: ") + e.what());
    }
}

RelationSpec resolve_relation(const RelationOpts& rel, const Alphabet& ab) {
    RelationSpec spec;
    if (rel.metric == "prefix") spec.family = Family::prefix;
    else if (rel.metric == "suffix") spec.family = Family::suffix;
    else if (rel.metric == "factor") spec.family = Family::factor;
    else spec.family = Family::theta;
    spec.k = rel.k;
    if (spec.family == Family::theta) {
        if (rel.k != 1) throw CliError("--metric theta only supports -k 1");
        spec.morphism = parse_morphism(rel.perm, rel.kind, ab);
    } else {
        if (rel.k < 1) throw CliError("-k must be >= 1");
        if (!rel.perm.empty()) throw CliError("--perm only applies to --metric theta");
    }
    return spec;
}

unsigned parse_cond_mask(const std::string& conds) {
    unsigned mask = 0;
    for (const std::string& c : split_csv(conds)) {
        if (c == "c1") mask |= 0x1;
        else if (c == "c2") mask |= 0x2;
        else if (c == "c3") mask |= 0x4;
        else if (c == "c4") mask |= 0x8;
        else throw CliError("unknown condition '" + c + "' in --cond");
    }
    if (!mask) throw CliError("--cond selects no condition");
    return mask;
}

int run(int argc, char** argv) {
    CLI::App app{"error-detection analysis of variable-length codes"};
    app.require_subcommand(1);

    InputOpts in;
    RelationOpts rel;

    CLI::App* check = app.add_subcommand("check", "decide conditions c1-c4");
    add_input_opts(check, in);
    add_relation_opts(check, rel);

    CLI::App* embed = app.add_subcommand("embed", "complete an independent code");
    add_input_opts(embed, in);
    add_relation_opts(embed, rel);

    CLI::App* measure_cmd = app.add_subcommand("measure", "measure and completeness only");
    add_input_opts(measure_cmd, in);

    CLI::App* sp = app.add_subcommand("sp-trace", "Sardinas-Patterson residual chain");
    add_input_opts(sp, in);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        Caps caps;
        caps.states = in.cap;
        caps.max_factor_k = in.max_factor_k;
        bool relational = check->parsed() || embed->parsed();
        ParsedInput input = parse_input(in, relational ? rel.perm : std::string());

        Json out;
        if (check->parsed()) {
            RelationSpec spec = resolve_relation(rel, input.alphabet);
            unsigned mask = parse_cond_mask(rel.conds);
            Report rep = analyze(input.language, spec, caps, mask);
            out = report_json(rep, input.alphabet, std::move(input.descr));
        } else if (embed->parsed()) {
            RelationSpec spec = resolve_relation(rel, input.alphabet);
            EmbeddingResult emb = [&] {
                switch (spec.family) {
                case Family::prefix: return embed_prefix(input.language, spec.k, caps);
                case Family::factor: return embed_factor(input.language, spec.k, caps);
                case Family::theta: return embed_theta(input.language, *spec.morphism, caps);
                case Family::suffix:
                    throw CliError("embed supports prefix, factor, and theta metrics");
                }
                throw CliError("embed: bad metric");
            }();
            out = embedding_json(emb, input.alphabet, std::move(input.descr), caps);
        } else if (measure_cmd->parsed()) {
            out["input"] = std::move(input.descr);
            out["is_code"] = sardinas_patterson(input.language, caps.states).is_code;
            out["measure"] = bernoulli_measure(input.language, caps.states).str();
            out["complete"] = is_complete(input.language, caps.states);
        } else { // sp-trace
            SpResult res = sardinas_patterson(input.language, caps.states);
            out = sp_json(res, input.alphabet, std::move(input.descr), caps.states);
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    } catch (const ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const EmbedError& e) {
        std::cerr << "embed: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const CliError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
}

} // namespace

int main(int argc, char** argv) { return run(argc, argv); }
