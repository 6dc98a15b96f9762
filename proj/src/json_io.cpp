#include "asorder/json_io.hpp"

#include <cstdio>

namespace asorder {

std::string format_real(long double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.14Le", v);
    return buf;
}

Json to_json(const SubfieldCensus& c) {
    Json g = Json::object();
    for (const auto& [d, count] : c.outside_counts) g[std::to_string(d)] = count.str();
    Json j;
    j["p"] = std::to_string(c.p);
    j["n"] = std::to_string(c.n);
    j["g"] = std::move(g);
    j["anUpper"] = c.union_upper.str();
    j["probLower"] = format_real(c.prob_lower.value);
    if (c.prob_lower.has_exact)
        j["probLowerExact"] = c.prob_lower.exact_num.str() + "/" + c.prob_lower.exact_den.str();
    else
        j["probLowerExact"] = nullptr;
    if (c.has_exact_probability)
        j["probExact"] = c.prob_num.str() + "/" + c.prob_den.str();
    else
        j["probExact"] = nullptr;
    Json flags = Json::array();
    if (c.boundary_equality) flags.push_back("BOUNDARY_EQUALITY");
    j["flags"] = std::move(flags);
    return j;
}

Json to_json(const BoundReport& r) {
    Json j;
    j["p"] = std::to_string(r.p);
    j["n"] = std::to_string(r.n);
    j["N"] = std::to_string(r.degree);
    j["exactBest"] = r.exact_best.str();
    j["exactS"] = std::to_string(r.exact_s);
    j["exactT"] = std::to_string(r.exact_t);
    j["binomBest"] = r.binom_best.str();
    j["binomS"] = std::to_string(r.binom_s);
    j["binomT"] = std::to_string(r.binom_t);
    if (r.has_extension_forms) {
        j["extensionClosedForm"] = format_real(r.ext_closed);
        j["simplifiedForm"] = format_real(r.simplified);
        j["epsilon"] = format_real(r.epsilon);
        j["simplifiedNote"] = "validity unknown: holds only for n past an unquantified threshold";
        j["tableBase"] = format_real(r.table_base);
        j["tableBaseProvenance"] = "reconstructed";
    } else {
        j["extensionClosedForm"] = nullptr;
        j["simplifiedForm"] = nullptr;
        j["epsilon"] = nullptr;
        j["simplifiedNote"] = nullptr;
        j["tableBase"] = nullptr;
        j["tableBaseProvenance"] = nullptr;
    }
    if (r.has_prime_forms) {
        j["primeClosedForm"] = format_real(r.prime_closed);
        j["lambda"] = std::to_string(r.lambda_used.num) + "/" + std::to_string(r.lambda_used.den);
        j["lambdaForm"] = format_real(r.lambda_value);
        j["lambdaFormHalved"] = format_real(r.lambda_value_halved);
        j["chainExact"] = r.chain_exact.str();
        GrowthComparison cmp;
        Json prior;
        prior["popovych"] = format_real(cmp.popovych);
        prior["shparlinskiVoloch"] = format_real(cmp.shparlinski_voloch);
        prior["thisBound"] = format_real(cmp.this_bound);
        j["growthBases"] = std::move(prior);
    } else {
        j["primeClosedForm"] = nullptr;
        j["lambda"] = nullptr;
        j["lambdaForm"] = nullptr;
        j["lambdaFormHalved"] = nullptr;
        j["chainExact"] = nullptr;
        j["growthBases"] = nullptr;
    }
    j["flags"] = r.flags;
    return j;
}

Json to_json(const OrderResult& o) {
    Json j;
    j["groupOrder"] = o.group_order.str();
    Json fac = Json::array();
    for (const auto& [prime, exp] : o.factorization) {
        Json f;
        f["prime"] = prime.str();
        f["exp"] = std::to_string(exp);
        fac.push_back(std::move(f));
    }
    j["factorization"] = std::move(fac);
    j["order"] = o.element_order.str();
    j["certified"] = o.certified;
    return j;
}

Json to_json(const VerificationRecord& r) {
    Json inst;
    inst["p"] = std::to_string(r.p);
    inst["n"] = std::to_string(r.n);
    inst["a"] = std::to_string(r.a);
    inst["b"] = poly_text(r.b);
    Json j;
    j["instance"] = std::move(inst);
    j["irreducible"] = r.irreducible;
    j["method"] = r.irreducibility_method;
    j["bOutsideAn"] = r.b_outside_proper;
    j["exactBound"] = r.bounds ? Json(r.bounds->exact_best.str()) : Json(nullptr);
    j["order"] = r.order ? Json(r.order->element_order.str()) : Json(nullptr);
    j["orderChecked"] = r.order_checked;
    j["orderMeetsExact"] = r.order_checked ? Json(r.order_meets_exact) : Json(nullptr);
    j["orderDetail"] = r.order ? to_json(*r.order) : Json(nullptr);
    j["bounds"] = r.bounds ? to_json(*r.bounds) : Json(nullptr);
    Json le_exact = Json::object();
    for (const auto& [k, v] : r.closed_le_exact) le_exact[k] = v;
    j["closedLeExact"] = std::move(le_exact);
    Json le_order = Json::object();
    for (const auto& [k, v] : r.closed_le_order) le_order[k] = v;
    j["closedLeOrder"] = std::move(le_order);
    j["flags"] = r.flags;
    j["errors"] = r.errors;
    return j;
}

}  // namespace asorder
