#include "qschur/json_io.hpp"

namespace qschur {

ordered_json laurent_json(const LaurentQA& x) {
    ordered_json arr = ordered_json::array();
    for (const auto& [e, c] : x.terms()) {
        ordered_json t;
        t["ea"] = e.ea;
        t["eq"] = e.eq;
        t["num"] = rat_num_string(c);
        t["den"] = rat_den_string(c);
        arr.push_back(std::move(t));
    }
    return arr;
}

ordered_json upoly_json(const UPoly& p) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : p.coeffs())
        arr.push_back(laurent_json(c));
    return arr;
}

ordered_json monomial_json(const Monomial& m) {
    ordered_json t;
    t["coeff"] = rat_string(m.coeff);
    t["ea"] = m.ea;
    t["eq"] = m.eq;
    return t;
}

ordered_json hecke_json(const HeckeElt& h) {
    ordered_json arr = ordered_json::array();
    for (const auto& [w, c] : h.terms()) {
        ordered_json t;
        t["perm"] = w.one_line();
        t["coeff"] = laurent_json(c);
        arr.push_back(std::move(t));
    }
    return arr;
}

ordered_json tensor_json(const TensorElt& v) {
    ordered_json arr = ordered_json::array();
    for (const auto& [idx, c] : v.terms()) {
        ordered_json t;
        t["idx"] = idx;
        t["coeff"] = laurent_json(c);
        arr.push_back(std::move(t));
    }
    return arr;
}

ordered_json segment_json(const Segment& s) {
    ordered_json t;
    t["center"] = monomial_json(s.center);
    t["length"] = s.length;
    return t;
}

ordered_json multisegment_json(const Multisegment& s) {
    ordered_json arr = ordered_json::array();
    for (const auto& seg : s.segments())
        arr.push_back(segment_json(seg));
    return arr;
}

ordered_json drinfeld_json(const DrinfeldTuple& Q) {
    ordered_json t;
    t["n"] = Q.n();
    t["degrees"] = Q.degrees();
    ordered_json polys = ordered_json::array();
    for (const auto& p : Q.polys)
        polys.push_back(upoly_json(p));
    t["polys"] = std::move(polys);
    if (Q.factored) {
        ordered_json roots = ordered_json::array();
        for (const auto& list : *Q.factored) {
            ordered_json inner = ordered_json::array();
            for (const auto& m : list)
                inner.push_back(monomial_json(m));
            roots.push_back(std::move(inner));
        }
        t["inverse_roots"] = std::move(roots);
    }
    return t;
}

} // namespace qschur
