#include "zf/report.hpp"

#include <sstream>

#include <json.hpp>

namespace zf {

namespace {

using ordered = nlohmann::ordered_json;

ordered optional_number(const std::optional<long long>& v) { return v ? ordered(*v) : ordered(nullptr); }

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

std::string optional_text(const std::optional<long long>& v) { return v ? std::to_string(*v) : std::string(); }

} // namespace

std::string format_ids(std::span<const VertexId> ids) {
    std::string s = "[";
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(ids[i]);
    }
    return s + "]";
}

std::string report_json(std::span<const EvaluationRecord> records) {
    ordered arr = ordered::array();
    for (const auto& r : records) {
        ordered o;
        o["id"] = r.id;
        o["params"] = r.params;
        o["lhs"] = optional_number(r.lhs);
        o["rhs"] = optional_number(r.rhs);
        if (r.rhs_upper)
            o["rhs_upper"] = *r.rhs_upper;
        o["relation"] = std::string(to_string(r.relation));
        o["status"] = std::string(to_string(r.status));
        o["oracle_witness"] = r.oracle_witness;
        o["constructive_witness"] = r.constructive_witness ? ordered(*r.constructive_witness) : ordered(nullptr);
        ordered extra = ordered::object();
        for (const auto& [k, v] : r.extra)
            extra[k] = v;
        o["extra"] = extra;
        if (!r.note.empty())
            o["note"] = r.note;
        o["elapsed_ms"] = r.elapsed_ms;
        arr.push_back(std::move(o));
    }
    return arr.dump(2) + "\n";
}

std::string report_csv(std::span<const EvaluationRecord> records) {
    std::ostringstream out;
    out << "id,params,lhs,rhs,relation,status,elapsed_ms\n";
    for (const auto& r : records) {
        std::string rhs = optional_text(r.rhs);
        if (r.rhs_upper)
            rhs += ".." + std::to_string(*r.rhs_upper);
        out << csv_field(r.id) << ',' << csv_field(r.params) << ',' << optional_text(r.lhs) << ',' << rhs << ','
            << to_string(r.relation) << ',' << to_string(r.status) << ',' << r.elapsed_ms << '\n';
    }
    return out.str();
}

std::string report_text(const GridRun& run) {
    std::ostringstream out;
    for (const auto& r : run.records) {
        out << r.id << "  " << r.params << "  lhs=" << optional_text(r.lhs) << ' ' << to_string(r.relation)
            << " rhs=" << optional_text(r.rhs);
        if (r.rhs_upper)
            out << ".." << *r.rhs_upper;
        out << "  " << to_string(r.status);
        if (!r.note.empty())
            out << "  (" << r.note << ')';
        out << '\n';
    }
    out << "summary:";
    for (const auto& [s, n] : run.summary.by_status)
        out << ' ' << to_string(s) << '=' << n;
    out << " out_of_domain=" << run.summary.out_of_domain << '\n';
    return out.str();
}

} // namespace zf
