#include "report.hpp"

#include <sstream>
#include <variant>

namespace tricm::cli {

std::string dec(const BigInt& v) { return to_decimal(v); }
std::string dec(long long v) { return std::to_string(v); }
std::string dec(unsigned long long v) { return std::to_string(v); }
std::string dec(std::size_t v) { return std::to_string(v); }
std::string dec(int v) { return std::to_string(v); }
std::string dec(unsigned v) { return std::to_string(v); }

Json to_json(const FieldSpec& field) {
    Json j;
    j["char"] = dec(field.characteristic());
    j["field"] = field.name();
    return j;
}

Json to_json(const CmVerdict& v) {
    Json j = to_json(v.field);
    j["status"] = std::string(to_string(v.status));
    j["method"] = std::string(to_string(v.method));
    j["heuristic"] = v.heuristic;
    Json witnesses = Json::array();
    for (const auto& w : v.witnesses) {
        Json item;
        if (const auto* h = std::get_if<HomologyWitness>(&w)) {
            item["type"] = "homology";
            item["complex"] = h->complex;
            item["degree"] = dec(h->degree);
            item["dimension"] = dec(h->dimension);
        } else {
            const auto& s = std::get<HScreenWitness>(w);
            item["type"] = "h-screen";
            item["complex"] = s.complex;
            item["index"] = dec(s.index);
            item["value"] = dec(s.value);
        }
        witnesses.push_back(std::move(item));
    }
    j["witnesses"] = std::move(witnesses);
    return j;
}

Json to_json(const BettiTable& t) {
    Json j = to_json(t.field);
    j["heuristic"] = t.heuristic;
    Json dims = Json::array();
    for (auto d : t.dims) dims.push_back(dec(d));
    j["dims"] = std::move(dims);
    return j;
}

Json to_json(const RegularityVerdict& v) {
    Json j = to_json(v.field);
    j["status"] = std::string(to_string(v.status));
    j["failing_degree"] = v.failing_degree ? Json(dec(*v.failing_degree)) : Json(nullptr);
    j["certified_by_prime"] = v.certified_by_prime ? Json(dec(*v.certified_by_prime)) : Json(nullptr);
    Json rows = Json::array();
    for (const auto& d : v.per_degree) {
        Json row;
        row["degree"] = dec(d.degree);
        row["expected"] = dec(d.expected);
        row["actual"] = dec(d.actual);
        rows.push_back(std::move(row));
    }
    j["per_degree"] = std::move(rows);
    return j;
}

Json to_json(const HsopSequence& seq, const std::vector<std::string>& labels) {
    Json j;
    j["kind"] = std::string(to_string(seq.kind));
    j["variables"] = dec(seq.variable_count);
    Json forms = Json::array();
    for (const auto& f : seq.forms) {
        Json form;
        form["degree"] = dec(f.degree);
        form["term_count"] = dec(f.terms.size());
        form["text"] = render_form(f, labels);
        Json terms = Json::array();
        for (const auto& t : f.terms) terms.push_back(render_monomial(t, {}));
        form["terms"] = std::move(terms);
        forms.push_back(std::move(form));
    }
    j["forms"] = std::move(forms);
    return j;
}

Json integer_list(const std::vector<BigInt>& values) {
    Json out = Json::array();
    for (const auto& v : values) out.push_back(dec(v));
    return out;
}

std::string tuple_text(const std::vector<BigInt>& values) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < values.size(); ++i) out << (i ? ", " : "") << to_decimal(values[i]);
    out << ')';
    return out.str();
}

std::string tuple_text(const std::vector<std::size_t>& values) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < values.size(); ++i) out << (i ? ", " : "") << values[i];
    out << ')';
    return out.str();
}

std::string tuple_text(const Json& decimal_strings) {
    std::ostringstream out;
    out << '(';
    bool first = true;
    for (const auto& s : decimal_strings) {
        out << (first ? "" : ", ") << s.get<std::string>();
        first = false;
    }
    out << ')';
    return out.str();
}

Json without_timings(Json report) {
    if (report.is_object()) report.erase("timings");
    return report;
}

}  // namespace tricm::cli
