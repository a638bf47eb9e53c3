#include "tildeiso/serialize.hpp"

namespace tildeiso {

Json to_json(const EditOp& op, bool binary_alphabet) {
    Json j;
    j["op"] = op.to_string(binary_alphabet);
    j["kind"] = op.kind == OpKind::Swap ? "swap" : "replace";
    j["position"] = op.position();
    if (op.kind == OpKind::Replace) j["to"] = std::string(1, op.to);
    return j;
}

Json to_json(const WitnessVerdict& verdict) {
    Json j;
    j["f"] = verdict.f.str();
    j["u"] = verdict.u.str();
    j["v"] = verdict.v.str();
    j["u_free"] = verdict.u_free;
    j["v_free"] = verdict.v_free;
    j["distance"] = verdict.distance;
    j["no_free_transformation"] = verdict.no_free_transformation;
    j["passed"] = verdict.passed;
    j["op_sets_examined"] = verdict.op_sets_examined;
    Json blocked = Json::array();
    for (const BlockedBranch& b : verdict.blocking_evidence) {
        Json e;
        Json ops = Json::array();
        for (const EditOp& op : b.applied) ops.push_back(op.to_string());
        e["applied"] = std::move(ops);
        e["word"] = b.intermediate.str();
        e["f_position"] = b.f_index + 1;
        blocked.push_back(std::move(e));
    }
    j["blocked"] = std::move(blocked);
    return j;
}

Json to_json(const ErrorOverlap& overlap, const Word& f) {
    Json j;
    j["shift"] = overlap.shift;
    j["length"] = overlap.length;
    j["distance"] = overlap.distance;
    Json reals = Json::array();
    for (const OverlapRealization& real : overlap.realizations) {
        Json r;
        r["type"] = to_string(real.type);
        Json pos = Json::array();
        for (int idx : real.error_indices) pos.push_back(idx + 1);
        r["positions"] = std::move(pos);
        r["ops"] = to_string(real.op_set);
        if (overlap.distance == 2) {
            r["adjacent"] = real.adjacent;
            r["condition"] = condition_tilde(f, overlap.shift, real);
        }
        reals.push_back(std::move(r));
    }
    j["realizations"] = std::move(reals);
    return j;
}

Json to_json(const Construction& c) {
    Json j;
    j["kind"] = to_string(c.kind);
    j["variant"] = to_string(c.variant);
    j["shift"] = c.shift;
    j["overlap_type"] = to_string(c.overlap_type);
    Json pos = Json::array();
    for (int idx : c.error_indices) pos.push_back(idx + 1);
    j["positions"] = std::move(pos);
    if (c.third_op_index) {
        j["third_op_position"] = *c.third_op_index + 1;
        j["third_op_reconstructed"] = c.reconstructed_third;
    }
    j["pair"] = Json::array({c.first.str(), c.second.str()});
    j["verdict"] = to_json(c.verdict);
    return j;
}

Json to_json(const ClassificationReport& report) {
    Json j;
    j["word"] = report.f.str();
    j["length"] = report.f.size();
    j["ham_status"] = report.ham_status_string();
    j["tilde_status"] = report.tilde_status_string();
    j["max_len"] = report.max_len;
    j["prop2_consistent"] = report.prop2_consistent;
    Json evidence;
    if (report.construction) {
        evidence["kind"] = "construction";
        evidence["construction"] = to_json(*report.construction);
    } else if (report.brute_pair) {
        evidence["kind"] = "brute-force";
        evidence["pair"] = Json::array({report.brute_pair->first.str(), report.brute_pair->second.str()});
        if (report.brute_verdict) evidence["verdict"] = to_json(*report.brute_verdict);
    } else if (report.certificate) {
        evidence["kind"] = "exhaustion";
        evidence["max_len"] = report.certificate->max_len;
        evidence["pairs_checked"] = report.certificate->pairs_checked;
    } else {
        evidence["kind"] = "none";
    }
    j["evidence"] = std::move(evidence);
    Json overlaps = Json::array();
    for (const ErrorOverlap& eo : report.overlaps) overlaps.push_back(to_json(eo, report.f));
    j["overlaps"] = std::move(overlaps);
    return j;
}

std::string overlap_digest(const std::vector<ErrorOverlap>& overlaps) {
    std::string out;
    for (const ErrorOverlap& eo : overlaps) {
        if (!out.empty()) out += ' ';
        out += "r" + std::to_string(eo.shift) + ":q" + std::to_string(eo.distance);
        if (!eo.realizations.empty()) {
            out += ':';
            for (size_t i = 0; i < eo.realizations.size(); ++i) {
                if (i > 0) out += '/';
                out += to_string(eo.realizations[i].type);
            }
        } else if (eo.distance > 2) {
            out += ":higher";
        }
    }
    return out;
}

}  // namespace tildeiso
