#pragma once

#include <string>

#include <json.hpp>

#include "torus/decoder.hpp"
#include "torus/hecke.hpp"

namespace torus {

using Json = nlohmann::json;

/// {"N": int, "coords": [["num", "den"], ...]}
Json to_json(const CycNum& c);
CycNum cycnum_from_json(const Json& j);

/// {"terms": [{"t": int, "q": int, "c": <CycNum>}]} in (t, q) order.
Json to_json(const LPoly& p);
LPoly lpoly_from_json(const Json& j);

/// {"a11": <LPoly>, "a12": ..., "a21": ..., "a22": ...}
Json to_json(const Mat2& m);
Mat2 mat2_from_json(const Json& j);

/// {"delta": k, "syllables": [["Y", n1], ["X", m1], ...]}
Json to_json(const NormalForm& nf);

Json to_json(const FundReport& r);
Json to_json(const Rep& rep);
/// {"order": int} or {"cap_exceeded": int}
Json to_json(const ClosureResult& r);

/// Human renderings; z<N> stands for zeta_N.
std::string to_text(const CycNum& c);
std::string to_text(const LPoly& p);
std::string to_text(const Mat2& m);

}  // namespace torus
