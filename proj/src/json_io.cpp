#include "splitq/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace splitq {

namespace {

double number(const json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string(what) + ": expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ParseError(std::string(what) + ": non-finite number");
  return v;
}

const json& array_of(const json& j, std::size_t n, const char* what) {
  if (!j.is_array() || j.size() != n) {
    throw ParseError(std::string(what) + ": expected an array of " +
                     std::to_string(n));
  }
  return j;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

int unit_sign(const json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + ": expected +1 or -1");
  const auto v = j.get<long long>();
  if (v != 1 && v != -1) throw ParseError(std::string(what) + ": expected +1 or -1");
  return static_cast<int>(v);
}

json pair(double a, double b) { return json::array({a, b}); }

}  // namespace

json to_json(const GNum& z) { return pair(z.x, z.y); }

json to_json(const GVec2& v) { return json::array({to_json(v.c1), to_json(v.c2)}); }

json to_json(const GMat2& m) {
  return json::array({to_json(m.row(0)), to_json(m.row(1))});
}

json to_json(const ProbModel& m) {
  return json{{"q", pair(m.q[0], m.q[1])},
              {"P", json::array({pair(m.p[0][0], m.p[0][1]),
                                 pair(m.p[1][0], m.p[1][1])})},
              {"theta", m.theta},
              {"eps1", m.eps1}};
}

json to_json(const StateDecomposition& d) {
  json j{{"coefficients", to_json(d.coefficients)},
         {"decomposable", d.decomposable},
         {"probabilities", nullptr}};
  if (d.probabilities) {
    j["probabilities"] = pair((*d.probabilities)[0], (*d.probabilities)[1]);
  }
  return j;
}

json to_json(const InterferenceVerdict& v) {
  return json{{"regime", std::string(regime_name(v.regime))},
              {"theta", v.theta},
              {"sign", v.sign},
              {"lambda", v.lambda}};
}

json to_json(const NonTransitivityWitness& w) {
  return json{{"beta", to_json(w.beta)},
              {"B", to_json(w.b)},
              {"alpha", to_json(w.alpha)},
              {"violating_index", w.violating_index},
              {"norm_sq", w.norm_sq}};
}

GNum gnum_from_json(const json& j) {
  array_of(j, 2, "GNum");
  return {number(j[0], "GNum.x"), number(j[1], "GNum.y")};
}

GVec2 gvec2_from_json(const json& j) {
  array_of(j, 2, "GVec2");
  return {gnum_from_json(j[0]), gnum_from_json(j[1])};
}

GMat2 gmat2_from_json(const json& j) {
  array_of(j, 2, "GMat2");
  GMat2 m;
  for (int i = 0; i < 2; ++i) {
    const GVec2 r = gvec2_from_json(j[i]);
    m(i, 0) = r.c1;
    m(i, 1) = r.c2;
  }
  return m;
}

ProbModel prob_model_from_json(const json& j) {
  ProbModel m;
  const json& q = array_of(field(j, "q"), 2, "q");
  m.q = {number(q[0], "q"), number(q[1], "q")};
  const json& p = array_of(field(j, "P"), 2, "P");
  for (int i = 0; i < 2; ++i) {
    const json& row = array_of(p[i], 2, "P row");
    m.p[i] = {number(row[0], "P"), number(row[1], "P")};
  }
  m.theta = number(field(j, "theta"), "theta");
  m.eps1 = j.contains("eps1") ? unit_sign(j.at("eps1"), "eps1") : 1;
  return m;
}

NonTransitivityWitness witness_from_json(const json& j) {
  NonTransitivityWitness w;
  w.beta = gvec2_from_json(field(j, "beta"));
  w.b = gmat2_from_json(field(j, "B"));
  w.alpha = gvec2_from_json(field(j, "alpha"));
  const json& idx = field(j, "violating_index");
  if (!idx.is_number_integer()) throw ParseError("violating_index: expected 1 or 2");
  w.violating_index = idx.get<int>();
  w.norm_sq = j.contains("norm_sq") ? number(j.at("norm_sq"), "norm_sq")
                                    : norm_sq(w.alpha[w.violating_index == 2]);
  return w;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace splitq
