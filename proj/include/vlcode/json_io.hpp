#pragma once

#include "json.hpp" // vendored nlohmann/json

#include "vlcode/conditions.hpp"
#include "vlcode/embedding.hpp"
#include "vlcode/transducer.hpp"

namespace vlcode {

using Json = nlohmann::ordered_json;

Json nfa_debug_json(const Nfa& a, const Alphabet& alphabet);
Json transducer_debug_json(const Transducer& t, const Alphabet& alphabet);

Json relation_json(const RelationSpec& spec, const Alphabet& alphabet);
Json report_json(const Report& rep, const Alphabet& alphabet, Json input);
Json sp_json(const SpResult& sp, const Alphabet& alphabet, Json input,
             long state_cap = kDefaultStateCap);
Json embedding_json(const EmbeddingResult& emb, const Alphabet& alphabet, Json input,
                    const Caps& caps);

} // namespace vlcode
