#include "cslab/serialize.hpp"

#include <algorithm>
#include <sstream>

#include "cslab/errors.hpp"

namespace cslab {

std::string rational_string(const Rational& q) {
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Json partition_json(const Partition& p) {
    Json arr = Json::array();
    for (int part : p.parts())
        arr.push_back(part);
    return arr;
}

Json to_json(const SymFunc& f) {
    Json terms = Json::array();
    for (const auto& [index, coeff] : f.terms())
        terms.push_back(Json{{"partition", partition_json(index)}, {"coeff", rational_string(coeff)}});
    return Json{{"basis", std::string(1, basis_letter(f.basis()))}, {"degree", f.degree()}, {"terms", terms}};
}

SymFunc symfunc_from_json(const Json& j) {
    SymFunc f(parse_basis(j.at("basis").get<std::string>()), j.at("degree").get<int>());
    for (const auto& term : j.at("terms")) {
        std::vector<int> parts = term.at("partition").get<std::vector<int>>();
        const Json& c = term.at("coeff");
        Rational q = c.is_string() ? Rational(c.get<std::string>()) : Rational(c.get<long>());
        q.canonicalize();
        f.add_term(Partition(parts), q);
    }
    return f;
}

Json to_json(const SchurCoefficientTrace& trace) {
    Json tabloids = Json::array();
    for (const auto& t : trace.tabloids) {
        Json content = Json::array();
        for (int part : t.content.parts())
            content.push_back(part);
        tabloids.push_back(Json{{"content", content}, {"sign", t.sign}, {"count", t.semi_ordered_count.get_str()}});
    }
    return Json{{"shape", partition_json(trace.shape)},
                {"tabloids", tabloids},
                {"unrealizable_skipped", trace.unrealizable},
                {"total", trace.total.get_str()}};
}

namespace {

Json witness_json(const std::optional<Witness>& w) {
    if (!w)
        return nullptr;
    Json out{{"basis", std::string(1, basis_letter(w->basis))}, {"source", w->source}};
    out["partition"] = w->partition ? partition_json(*w->partition) : Json(nullptr);
    out["coeff"] = w->coeff ? Json(rational_string(*w->coeff)) : Json(nullptr);
    return out;
}

Json min_json(const std::optional<std::pair<Partition, Rational>>& m) {
    if (!m)
        return nullptr;
    return Json{{"partition", partition_json(m->first)}, {"coeff", rational_string(m->second)}};
}

}  // namespace

Json to_json(const PositivityReport& r) {
    Json screeners = Json::array();
    for (const auto& s : r.screeners)
        screeners.push_back(Json{{"name", s.name},
                                 {"basis", std::string(1, basis_letter(s.target))},
                                 {"passed", s.passed},
                                 {"detail", s.detail}});
    Json targeted = Json::array();
    for (const auto& [lambda, value] : r.schur_targeted)
        targeted.push_back(Json{{"partition", partition_json(lambda)}, {"coeff", value.get_str()}});
    return Json{{"graph", r.graph},
                {"order", r.order},
                {"e_positive", r.e_checked ? Json(verdict_name(r.e_positive)) : Json(nullptr)},
                {"schur_positive", r.s_checked ? Json(verdict_name(r.schur_positive)) : Json(nullptr)},
                {"e_witness", witness_json(r.e_witness)},
                {"s_witness", witness_json(r.s_witness)},
                {"e_min", min_json(r.e_min)},
                {"s_min", min_json(r.s_min)},
                {"schur_targeted", targeted},
                {"screeners", screeners},
                {"notes", r.notes}};
}

Json to_json(const SweepResult& sweep) {
    Json instances = Json::array();
    for (const auto& inst : sweep.instances) {
        Json params = Json::object();
        for (const auto& [k, v] : inst.params)
            params[k] = v;
        Json entry{{"params", params}, {"graph", inst.graph}};
        if (inst.error.empty())
            entry["report"] = to_json(inst.report);
        else
            entry["error"] = inst.error;
        instances.push_back(entry);
    }
    Json ranges = Json::array();
    for (const auto& r : sweep.ranges)
        ranges.push_back(Json{{"var", r.var}, {"lo", r.lo}, {"hi", r.hi}});
    return Json{{"family", sweep.family},
                {"ranges", ranges},
                {"positive", sweep.positive},
                {"schur_positive", sweep.schur_positive},
                {"bounds", sweep.bounds},
                {"instances", instances}};
}

Json to_json(const ConjectureReport& report) {
    auto instance_json = [](const ConjectureInstance& inst) {
        return Json{{"graph", inst.graph},
                    {"item", inst.item},
                    {"verdict", verdict_name(inst.verdict)},
                    {"witness", witness_json(inst.witness)}};
    };
    Json instances = Json::array();
    for (const auto& inst : report.instances)
        instances.push_back(instance_json(inst));
    return Json{{"id", report.id},
                {"statement", report.statement},
                {"consistent", report.consistent()},
                {"checked", report.instances.size()},
                {"unknown_at_cap", report.unknown},
                {"counterexample", report.counterexample ? instance_json(*report.counterexample) : Json(nullptr)},
                {"notes", report.notes},
                {"instances", instances}};
}

Json to_json(const SuiteReport& suite) {
    return Json{{"suite", suite.name},
                {"passed", suite.passed},
                {"checks", suite.checks},
                {"failures", suite.failures}};
}

std::string pretty(const SymFunc& f) {
    std::vector<std::pair<std::string, std::string>> rows;
    std::size_t width = 0;
    for (const auto& [index, coeff] : f.terms()) {
        rows.emplace_back(rational_string(coeff), std::string(1, basis_letter(f.basis())) + "_" + index.to_string());
        width = std::max(width, rows.back().first.size());
    }
    std::ostringstream out;
    for (const auto& [c, name] : rows)
        out << std::string(width - c.size(), ' ') << c << "  " << name << "\n";
    if (rows.empty())
        out << "0\n";
    return out.str();
}

std::string sweep_csv(const SweepResult& sweep) {
    std::ostringstream out;
    out << "params,e_verdict,e_witness_partition,e_witness_coeff,s_verdict,s_witness_partition,s_witness_coeff,"
           "screeners_failed\n";
    auto quote = [](const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos)
            return s;
        std::string out = "\"";
        for (char c : s)
            out += c == '"' ? std::string("\"\"") : std::string(1, c);
        return out + "\"";
    };
    auto witness_cols = [&](const std::optional<Witness>& w) {
        if (!w)
            return std::string(",");
        std::string part = w->partition ? quote(format_partition(*w->partition)) : "";
        std::string coeff = w->coeff ? rational_string(*w->coeff) : "";
        return part + "," + coeff;
    };
    for (const auto& inst : sweep.instances) {
        out << quote(sweep.params_label(inst)) << ",";
        if (!inst.error.empty()) {
            out << "error,,,error,,," << quote(inst.error) << "\n";
            continue;
        }
        const auto& r = inst.report;
        std::string failed;
        for (const auto& name : r.failed_screeners())
            failed += (failed.empty() ? "" : ";") + name;
        out << (r.e_checked ? verdict_name(r.e_positive) : "-") << "," << witness_cols(r.e_witness) << ","
            << (r.s_checked ? verdict_name(r.schur_positive) : "-") << "," << witness_cols(r.s_witness) << ","
            << quote(failed) << "\n";
    }
    return out.str();
}

}  // namespace cslab
