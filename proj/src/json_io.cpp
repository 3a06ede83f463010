#include "vlcode/json_io.hpp"

#include "vlcode/regex.hpp"

namespace vlcode {

namespace {

std::string label_str(Symbol s, const Alphabet& alphabet) {
    return s == Nfa::kEps ? "_" : alphabet.name(s);
}

Json words_json(const std::vector<Word>& ws, const Alphabet& alphabet) {
    Json arr = Json::array();
    for (const Word& w : ws) arr.push_back(alphabet.format_word(w));
    return arr;
}

const char* family_name(Family f) {
    switch (f) {
    case Family::prefix: return "prefix";
    case Family::suffix: return "suffix";
    case Family::factor: return "factor";
    case Family::theta: return "theta";
    }
    return "?";
}

Json condition_json(const ConditionResult& c, const Alphabet& alphabet) {
    Json j;
    j["holds"] = c.holds;
    if (c.witness) {
        Json w;
        w["x"] = alphabet.format_word(c.witness->x);
        w["y"] = alphabet.format_word(c.witness->y);
        w["distance"] = c.witness->distance;
        j["witness"] = std::move(w);
    }
    return j;
}

} // namespace

Json nfa_debug_json(const Nfa& a, const Alphabet& alphabet) {
    Json j;
    j["states"] = a.num_states();
    Json trans = Json::array();
    for (int q = 0; q < a.num_states(); ++q)
        for (auto [lbl, to] : a.out[static_cast<std::size_t>(q)])
            trans.push_back(Json::array({q, label_str(lbl, alphabet), to}));
    j["transitions"] = std::move(trans);
    Json inits = Json::array(), finals = Json::array();
    for (int q = 0; q < a.num_states(); ++q) {
        if (a.initial[static_cast<std::size_t>(q)]) inits.push_back(q);
        if (a.accepting[static_cast<std::size_t>(q)]) finals.push_back(q);
    }
    j["initials"] = std::move(inits);
    j["finals"] = std::move(finals);
    return j;
}

Json transducer_debug_json(const Transducer& t, const Alphabet& alphabet) {
    Json j;
    j["states"] = t.num_states();
    Json trans = Json::array();
    for (int q = 0; q < t.num_states(); ++q)
        for (auto [in, out, to] : t.out[static_cast<std::size_t>(q)])
            trans.push_back(Json::array(
                {q, label_str(in, alphabet), label_str(out, alphabet), to}));
    j["transitions"] = std::move(trans);
    Json inits = Json::array(), finals = Json::array();
    for (int q = 0; q < t.num_states(); ++q) {
        if (t.initial[static_cast<std::size_t>(q)]) inits.push_back(q);
        if (t.accepting[static_cast<std::size_t>(q)]) finals.push_back(q);
    }
    j["initials"] = std::move(inits);
    j["finals"] = std::move(finals);
    return j;
}

Json relation_json(const RelationSpec& spec, const Alphabet& alphabet) {
    Json j;
    j["family"] = family_name(spec.family);
    j["k"] = spec.k;
    if (spec.morphism) {
        j["kind"] = spec.morphism->kind == MorphismKind::automorphism ? "auto" : "anti";
        std::string perm;
        for (Symbol s = 0; s < static_cast<Symbol>(spec.morphism->perm.size()); ++s) {
            if (s) perm += ",";
            perm += alphabet.name(s) + ":" +
                    alphabet.name(spec.morphism->perm[static_cast<std::size_t>(s)]);
        }
        j["perm"] = std::move(perm);
    }
    return j;
}

Json report_json(const Report& rep, const Alphabet& alphabet, Json input) {
    Json j;
    j["input"] = std::move(input);
    j["is_code"] = rep.is_code;
    j["relation"] = relation_json(rep.spec, alphabet);
    if (rep.is_code) {
        Json conds;
        if (rep.c1) conds["c1"] = condition_json(*rep.c1, alphabet);
        if (rep.c2) conds["c2"] = condition_json(*rep.c2, alphabet);
        if (rep.c3) conds["c3"] = condition_json(*rep.c3, alphabet);
        if (rep.c4) conds["c4"] = condition_json(*rep.c4, alphabet);
        j["conditions"] = std::move(conds);
    } else {
        j["conditions"] = nullptr;
    }
    j["measure"] = rep.mu.str();
    j["complete"] = rep.complete;
    return j;
}

Json sp_json(const SpResult& sp, const Alphabet& alphabet, Json input, long state_cap) {
    Json j;
    j["input"] = std::move(input);
    j["is_code"] = sp.is_code;
    if (sp.eps_in_input) j["eps_in_input"] = true;
    Json chain = Json::array();
    for (std::size_t n = 0; n < sp.chain.size(); ++n) {
        Json item;
        item["index"] = n;
        if (auto words = finite_language(sp.chain[n]))
            item["words"] = words_json(*words, alphabet);
        else
            item["regex"] = regex_of(to_nfa(sp.chain[n]), alphabet, state_cap);
        chain.push_back(std::move(item));
    }
    j["chain"] = std::move(chain);
    j["eps_index"] = sp.eps_index ? Json(*sp.eps_index) : Json(nullptr);
    j["repeat_of"] = sp.repeat_of ? Json(*sp.repeat_of) : Json(nullptr);
    return j;
}

Json embedding_json(const EmbeddingResult& emb, const Alphabet& alphabet, Json input,
                    const Caps& caps) {
    Json j;
    j["input"] = std::move(input);
    j["relation"] = relation_json(emb.spec, alphabet);
    j["z0"] = alphabet.format_word(emb.z0);
    j["z"] = alphabet.format_word(emb.z);
    j["regex"] = regex_of(emb.completed, alphabet, caps.states);
    Json checks;
    checks["code"] = sardinas_patterson(emb.completed, caps.states).is_code;
    checks["complete"] = is_complete(emb.completed, caps.states);
    checks["c1"] = check_c1(emb.completed, emb.spec, caps).holds;
    j["checks"] = std::move(checks);
    return j;
}

} // namespace vlcode
