#include "skewclifford/json_io.hpp"

#include "skewclifford/errors.hpp"

namespace skcl {

Json rat_to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (j.is_string()) return Rat::parse(j.get<std::string>());
    throw ValidationError("expected a rational as \"p/q\" string or integer, got " + j.dump());
}

Json mat_to_json(const Mat& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(rat_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Mat mat_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw ValidationError("matrix must be a non-empty array of rows");
    int rows = static_cast<int>(j.size());
    if (!j[0].is_array()) throw ValidationError("matrix rows must be arrays");
    int cols = static_cast<int>(j[0].size());
    Mat m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        if (!j[static_cast<std::size_t>(r)].is_array() ||
            static_cast<int>(j[static_cast<std::size_t>(r)].size()) != cols)
            throw ValidationError("matrix rows have inconsistent lengths");
        for (int c = 0; c < cols; ++c)
            m.at(r, c) = rat_from_json(j[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
    }
    return m;
}

PresentationFile presentation_file_from_json(const Json& j) {
    if (!j.is_object()) throw ValidationError("presentation file must be a JSON object");
    if (!j.contains("mu") || !j.contains("b"))
        throw ValidationError("presentation file needs \"mu\" and \"b\" matrices");
    PresentationFile f{mat_from_json(j.at("mu")), mat_from_json(j.at("b")), std::nullopt};
    if (j.contains("n")) {
        if (!j.at("n").is_number_integer() || j.at("n").get<int>() != f.mu.rows())
            throw ValidationError("\"n\" does not match the matrix size");
    }
    if (j.contains("name")) {
        if (!j.at("name").is_string()) throw ValidationError("\"name\" must be a string");
        f.name = j.at("name").get<std::string>();
    }
    return f;
}

Json presentation_file_to_json(const Mat& mu, const Mat& b,
                               const std::optional<std::string>& name) {
    Json j;
    j["n"] = mu.rows();
    j["mu"] = mat_to_json(mu);
    j["b"] = mat_to_json(b);
    if (name) j["name"] = *name;
    return j;
}

Json word_to_json(const Word& w) {
    Json a = Json::array();
    for (int l : w.letters) a.push_back(l + 1);
    return a;
}

Json element_to_json(const Element& e) {
    Json a = Json::array();
    for (const auto& [w, c] : e.terms()) {
        Json t;
        t["word"] = word_to_json(w);
        t["coeff"] = rat_to_json(c);
        a.push_back(std::move(t));
    }
    return a;
}

Element element_from_json(const Json& j, int letters) {
    if (!j.is_array()) throw ValidationError("element must be an array of terms");
    Element e;
    for (const Json& t : j) {
        if (!t.is_object() || !t.contains("word") || !t.contains("coeff"))
            throw ValidationError("element term needs \"word\" and \"coeff\"");
        if (!t.at("word").is_array()) throw ValidationError("\"word\" must be an array of indices");
        Word w;
        for (const Json& l : t.at("word")) {
            if (!l.is_number_integer())
                throw ValidationError("word letters must be integers");
            int idx = l.get<int>();
            if (idx < 1 || idx > letters)
                throw ValidationError("generator index " + std::to_string(idx) +
                                      " out of range 1.." + std::to_string(letters));
            w.letters.push_back(idx - 1);
        }
        e.add_term(w, rat_from_json(t.at("coeff")));
    }
    return e;
}

Json star_report_to_json(const StarReport& r) {
    Json j;
    j["holds"] = r.holds;
    Json v = Json::array();
    for (const auto& viol : r.violations) v.push_back(Json::array({viol.i, viol.j, viol.k}));
    j["violations"] = std::move(v);
    return j;
}

Json consequences_to_json(const std::vector<LinearConsequence>& cs) {
    Json a = Json::array();
    for (const auto& lc : cs) {
        Json j;
        j["equation"] = eq_kind_str(lc.kind);
        j["indices"] = lc.indices;
        Json coeffs;
        for (const auto& [idx, c] : lc.coefficients) coeffs["x" + std::to_string(idx)] = rat_to_json(c);
        j["coefficients"] = std::move(coeffs);
        j["relation"] = lc.element().str() + " = 0";
        a.push_back(std::move(j));
    }
    return a;
}

Json tfae_to_json(const TfaeReport& r) {
    Json j;
    j["g-injective"] = r.g_injective;
    j["full-dimension"] = r.full_dimension;
    j["coefficients-vanish"] = r.coefficients_vanish;
    j["q-central"] = r.q_central;
    Json w;
    for (const auto& [k, v] : r.witnesses) w[k] = v;
    j["witnesses"] = std::move(w);
    return j;
}

Json reduction_to_json(const ReductionResult& r) {
    Json j;
    j["outcome"] = r.outcome == ReductionOutcome::Trivial ? "trivial" : "reduced";
    j["subset"] = r.subset;
    if (r.outcome == ReductionOutcome::Reduced) {
        j["mu-prime"] = mat_to_json(r.mu_prime);
        j["b-prime"] = mat_to_json(r.b_prime);
    }
    Json steps = Json::array();
    for (const auto& s : r.trace) {
        Json step;
        step["case"] = s.case_name;
        step["removed"] = s.removed;
        if (s.representative) step["representative"] = s.representative;
        step["detail"] = s.detail;
        steps.push_back(std::move(step));
    }
    j["trace"] = std::move(steps);
    return j;
}

Json graded_to_json(const GradedPresentation& g) {
    Json j;
    Json gens = Json::array();
    for (const auto& gen : g.generators) {
        Json e;
        e["name"] = gen.name;
        e["degree"] = gen.degree;
        gens.push_back(std::move(e));
    }
    j["generators"] = std::move(gens);
    Json rels = Json::array();
    for (const auto& rel : g.relations) {
        Json e;
        e["degree"] = rel.degree;
        e["terms"] = element_to_json(rel.element);
        rels.push_back(std::move(e));
    }
    j["relations"] = std::move(rels);
    return j;
}

Json partition_to_json(const PartitionResult& r) {
    Json j;
    Json ms = Json::array();
    for (const Mat& m : r.matrices) ms.push_back(mat_to_json(m));
    j["matrices"] = std::move(ms);
    j["case-trace"] = r.case_trace;
    return j;
}

Json violations_to_json(const std::vector<Violation>& vs) {
    Json a = Json::array();
    for (const auto& v : vs) {
        Json j;
        j["code"] = v.code;
        j["indices"] = v.indices;
        j["detail"] = v.detail;
        a.push_back(std::move(j));
    }
    return a;
}

}  // namespace skcl
