#pragma once

// JSON encodings used by the command-line tool.
//
//   GNum        [x, y]
//   GVec2       [[x1, y1], [x2, y2]]
//   GMat2       [[[x11, y11], [x12, y12]], [[x21, y21], [x22, y22]]]
//   ProbModel   {"q": [q1, q2], "P": [[p11, p12], [p21, p22]],
//                "theta": t, "eps1": +-1}
//   StateDecomposition
//               {"coefficients": GVec2, "decomposable": bool,
//                "probabilities": [p1, p2] | null}
//   InterferenceVerdict
//               {"regime": "trig" | "hyp" | "boundary", "theta": t,
//                "sign": +-1, "lambda": l}
//   NonTransitivityWitness
//               {"beta": GVec2, "B": GMat2, "alpha": GVec2,
//                "violating_index": 1 | 2, "norm_sq": v}

#include <json.hpp>

#include "splitq/born.hpp"
#include "splitq/errors.hpp"
#include "splitq/gnum.hpp"
#include "splitq/gspace.hpp"
#include "splitq/interference.hpp"
#include "splitq/witness.hpp"

namespace splitq {

// Input that does not match the expected shape, or holds non-finite
// numbers.
class ParseError : public Error {
 public:
  using Error::Error;
};

using nlohmann::json;

json to_json(const GNum& z);
json to_json(const GVec2& v);
json to_json(const GMat2& m);
json to_json(const ProbModel& m);
json to_json(const StateDecomposition& d);
json to_json(const InterferenceVerdict& v);
json to_json(const NonTransitivityWitness& w);

GNum gnum_from_json(const json& j);
GVec2 gvec2_from_json(const json& j);
GMat2 gmat2_from_json(const json& j);
ProbModel prob_model_from_json(const json& j);
NonTransitivityWitness witness_from_json(const json& j);

// Reads and parses a whole file; throws ParseError on I/O or syntax errors.
json read_json_file(const std::string& path);

}  // namespace splitq
