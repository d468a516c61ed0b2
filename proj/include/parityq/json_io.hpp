#pragma once

#include <json.hpp>

#include "parityq/global.hpp"
#include "parityq/local.hpp"
#include "parityq/mobius.hpp"
#include "parityq/sturm.hpp"

namespace parityq {

using Json = nlohmann::ordered_json;

inline Json place_json(const Place& v) {
    if (v.is_real()) return Json("real");
    if (v.is_complex()) return Json("complex");
    Json j;
    if (v.p().fits_slong_p())
        j["p"] = (long)v.p().get_si();
    else
        j["p"] = v.p().get_str();
    return j;
}

inline Json cubic_json(const RationalCubic& f) {
    Json j;
    j["a"] = f.a().str();
    j["b"] = f.b().str();
    j["c"] = f.c().str();
    j["L"] = f.L().str();
    j["delta"] = f.delta().str();
    return j;
}

inline Json report_json(const LocalParityReport& r) {
    Json j;
    j["place"] = place_json(r.place);
    if (r.supported)
        j["support"] = "supported";
    else
        j["support"] = Json{{"unsupported", r.reason}};
    j["w_E"] = r.w_E ? Json(*r.w_E) : Json(nullptr);
    j["w_JacEprime"] = r.w_JacEprime ? Json(*r.w_JacEprime) : Json(nullptr);
    j["lambda"] = r.lambda ? Json(*r.lambda) : Json(nullptr);
    j["H"] = r.H;
    j["identity"] = r.identity_holds ? Json(*r.identity_holds) : Json(nullptr);
    Json payload;
    if (r.real_data) {
        payload["case"] = r.real_data->case_id;
        payload["n_E"] = r.real_data->n_E;
        payload["n_JacEprime"] = r.real_data->n_JacEprime;
        payload["n_JacC"] = r.real_data->n_JacC;
        payload["kernel_identity"] = r.real_data->kernel_identity;
        payload["mu"] = r.real_data->mu;
    } else if (r.padic_data) {
        payload["type"] = r.padic_data->type.str();
        payload["n"] = r.padic_data->type.n;
        payload["c_E"] = r.padic_data->c_E;
        payload["c_JacEprime"] = r.padic_data->c_JacEprime;
        payload["c_JacC"] = r.padic_data->c_JacC;
        payload["mu"] = r.padic_data->mu;
    }
    j["payload"] = payload;
    return j;
}

inline Json global_json(const GlobalReport& g) {
    Json j;
    j["mode"] = (g.mode == GlobalMode::Strict) ? "strict" : "inferred";
    Json places = Json::array();
    for (const auto& r : g.reports) places.push_back(report_json(r));
    j["places"] = places;
    j["product_H"] = g.product_H;
    j["product_lambda"] = g.product_lambda;
    j["product_w"] = g.product_w;
    Json inf = Json::array();
    for (const auto& v : g.inferred_places) inf.push_back(place_json(v));
    j["inferred_places"] = inf;
    j["all_identities"] = g.all_identities;
    return j;
}

inline Json sturm_json(const SturmSequence& s) {
    Json j;
    Json polys = Json::array();
    for (const auto& P : s.polys) polys.push_back(P.str());
    j["chain"] = polys;
    Json consts = Json::array(), leads = Json::array();
    for (const auto& r : s.constants_at_zero) consts.push_back(r.str());
    for (const auto& r : s.leads) leads.push_back(r.str());
    j["constants_at_zero"] = consts;
    j["leads"] = leads;
    j["degenerate"] = s.degenerate;
    if (s.degenerate) {
        j["degenerate_index"] = s.degenerate_index;
        j["degenerate_reason"] = s.degenerate_reason;
    }
    j["squarefree"] = s.squarefree;
    return j;
}

inline Json mobius_json(const MobiusMatch& m, const NormalForm& nf) {
    Json j;
    j["A"] = m.A.str();
    j["B"] = m.B.str();
    j["C"] = m.C.str();
    j["D"] = m.D.str();
    j["branch"] = branch_name(m.branch);
    Json model;
    model["d"] = nf.d.str();
    switch (m.branch) {
        case MobiusBranch::General:
            model["form"] = "d*y^2 = x*f(x), x = 1 - (C/A)*x_old";
            model["f"] = nf.f_new->str();
            break;
        case MobiusBranch::QuadraticTwist:
            model["form"] = "y^2 = d*g1(x)";
            break;
        case MobiusBranch::XfForm:
            model["form"] = "d*y^2 = x*g1(x)";
            break;
    }
    j["model"] = model;
    return j;
}

}  // namespace parityq
