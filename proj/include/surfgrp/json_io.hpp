#pragma once

#include <nlohmann/json.hpp>

#include "surfgrp/quotient.hpp"

namespace surfgrp {

// Big integers render as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise.
inline nlohmann::json int_to_json(const Int& v) {
  if (v >= std::numeric_limits<int64_t>::min() &&
      v <= std::numeric_limits<int64_t>::max())
    return static_cast<int64_t>(v);
  return v.str();
}

inline nlohmann::json to_json(const Nil2Element& a) {
  nlohmann::json j;
  j["genus"] = a.genus;
  j["n"] = nlohmann::json::array();
  for (const Int& v : a.n) j["n"].push_back(int_to_json(v));
  j["m"] = nlohmann::json::array();
  const PairIndexSet ps(a.genus);
  for (int k = 0; k < ps.size(); ++k) {
    if (a.m[k] == 0) continue;
    auto [i, jj] = ps.pair_at(k);
    j["m"].push_back({{"i", i}, {"j", jj}, {"e", int_to_json(a.m[k])}});
  }
  return j;
}

inline nlohmann::json to_json(const ModKElement& a) {
  nlohmann::json j;
  j["genus"] = a.genus;
  j["n"] = nlohmann::json::array();
  for (const Int& v : a.n) j["n"].push_back(int_to_json(v));
  j["mK"] = int_to_json(a.mk);
  return j;
}

inline nlohmann::json to_json(const QuotientElement& a) {
  nlohmann::json j;
  j["e"] = a.e;
  j["d"] = a.d;
  j["n"] = a.n;
  j["mK"] = a.mk;
  return j;
}

}  // namespace surfgrp
