#pragma once

#include <json.hpp>

#include "braids/dean.hpp"
#include "braids/goeritz.hpp"
#include "braids/laurent.hpp"
#include "braids/rewrite.hpp"
#include "braids/ttk.hpp"

// Stable JSON renderings: insertion-ordered keys, integers and strings
// only, so re-rendering a parsed output is byte-identical.
namespace braids {

using Json = nlohmann::ordered_json;

Json word_to_json(const BraidWord& w);
BraidWord word_from_json(const Json& j);

Json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

Json ttk_to_json(const TTKParams& p);
TTKParams ttk_from_json(const Json& j);

Json step_to_json(const RewriteStep& s);
RewriteStep step_from_json(const Json& j);

Json certificate_to_json(const RewriteCertificate& c);
RewriteCertificate certificate_from_json(const Json& j);

Json classification_to_json(const ClassificationReport& r);

Json matrix4_to_json(const IntMatrix4& m);
Json obstruction_to_json(const ObstructionOutcome& o);

}  // namespace braids
