#pragma once

// JSON forms used on the command line:
//   matrix  {"m":3,"n":4,"rows":[[1,1,1,1],...]}
//   shape   {"lambda":[5,5,5,4],"mu":[0,0,0,0]}
//   pp      {"a":1,"b":2,"c":2,"pi":[[2,1]]}
//   paths   [[[x,y],...],...]
//   qpoly   [c0,c1,...] as decimal strings
//   scalar  "p/q"

#include <json.hpp>

#include "iam/bijection.hpp"
#include "iam/core.hpp"
#include "iam/qpoly.hpp"

namespace iam {

using Json = nlohmann::json;

Json to_json(const BinaryMatrix& m);
BinaryMatrix matrix_from_json(const Json& j);

Json to_json(const SkewShape& s);
SkewShape shape_from_json(const Json& j);

Json to_json(const Filling& f);

Json to_json(const PlanePartition& pp);
PlanePartition pp_from_json(const Json& j);

Json to_json(const PathFamily& paths);
PathFamily paths_from_json(const Json& j);

Json to_json(const QPoly& p);
QPoly qpoly_from_json(const Json& j);

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

}  // namespace iam
