#pragma once

#include <json.hpp>

#include "qschur/drinfeld.hpp"
#include "qschur/hecke.hpp"
#include "qschur/laurent.hpp"
#include "qschur/tensor.hpp"
#include "qschur/upoly.hpp"

namespace qschur {

using ordered_json = nlohmann::ordered_json;

/// [{"ea":..,"eq":..,"num":"..","den":".."}] sorted by (ea, eq).
ordered_json laurent_json(const LaurentQA& x);

/// Array of LaurentQA by ascending u-degree.
ordered_json upoly_json(const UPoly& p);

ordered_json monomial_json(const Monomial& m);

/// [{"perm":[one-line],"coeff":LaurentQA}].
ordered_json hecke_json(const HeckeElt& h);

/// [{"idx":[ints],"coeff":LaurentQA}].
ordered_json tensor_json(const TensorElt& v);

ordered_json segment_json(const Segment& s);
ordered_json multisegment_json(const Multisegment& s);
ordered_json drinfeld_json(const DrinfeldTuple& Q);

} // namespace qschur
