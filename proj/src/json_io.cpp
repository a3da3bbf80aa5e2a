#include "modrep/json_io.hpp"

#include <sstream>

namespace modrep {

namespace {

Json matrix_json(const IntMatrix& m) {
    Json out = Json::array();
    for (const auto& row : m) {
        Json r = Json::array();
        for (const auto& x : row) r.push_back(to_json(x));
        out.push_back(std::move(r));
    }
    return out;
}

Json partitions_json(const std::vector<Partition>& ps) {
    Json out = Json::array();
    for (const auto& p : ps) out.push_back(to_json(p));
    return out;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

}  // namespace

Json to_json(const mpz_class& x) {
    if (x.fits_slong_p()) return Json(x.get_si());
    return Json(x.get_str());
}

std::string rational_string(const Rational& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Json to_json(const Partition& lambda) { return Json(lambda.to_string()); }

Json to_json(const StandardTableau& t) {
    Json out = Json::array();
    for (const auto& row : t.rows()) out.push_back(Json(row));
    return out;
}

Json to_json(const LaurentPoly& f) {
    Json out = Json::object();
    for (const auto& [e, c] : f.coeffs()) out[std::to_string(e)] = to_json(c);
    return out;
}

Json to_json(const FockVector& v) {
    // Most dominant first, matching how tables are displayed.
    Json out = Json::object();
    for (auto it = v.terms().rbegin(); it != v.terms().rend(); ++it)
        out[it->first.to_string()] = to_json(it->second);
    return out;
}

Json to_json(const CanonicalBasisTable& table) {
    Json out;
    out["p"] = table.p;
    out["n"] = table.n;
    out["order"] = partitions_json(table.order);
    Json a = Json::object(), g = Json::object(), nm = Json::object();
    for (const auto& mu : table.order) {
        a[mu.to_string()] = to_json(table.A.at(mu));
        g[mu.to_string()] = to_json(table.G.at(mu));
        Json col = Json::object();
        for (const auto& lambda : table.order) {
            auto entry = table.n_entry(lambda, mu);
            if (!entry.is_zero()) col[lambda.to_string()] = to_json(entry);
        }
        nm[mu.to_string()] = std::move(col);
    }
    out["A"] = std::move(a);
    out["G"] = std::move(g);
    out["nmat"] = std::move(nm);
    return out;
}

Json to_json(const SeminormalVector& v) {
    Json out;
    out["shape"] = to_json(v.shape());
    Json terms = Json::array();
    for (const auto& [t, c] : v.coeffs()) {
        Json term;
        term["tableau"] = to_json(t);
        term["numerator"] = to_json(mpz_class(c.get_num()));
        term["denominator"] = to_json(mpz_class(c.get_den()));
        terms.push_back(std::move(term));
    }
    out["terms"] = std::move(terms);
    return out;
}

Json to_json(const GramReport& rep) {
    Json out;
    out["mu"] = to_json(rep.mu);
    out["tau"] = to_json(rep.tau);
    out["p"] = rep.p;
    out["basis_size_before_symmetrization"] = rep.basis_size_before_symmetrization;
    out["basis_size"] = rep.basis_size;
    Json gram = Json::array();
    for (const auto& row : rep.gram) {
        Json r = Json::array();
        for (const auto& x : row) r.push_back(rational_string(x));
        gram.push_back(std::move(r));
    }
    out["gram"] = std::move(gram);
    out["rank"] = rep.rank;
    return out;
}

Json to_json(const VerificationReport& rep) {
    Json out;
    out["p"] = rep.p;
    out["n"] = rep.n;
    out["outside_region"] = rep.outside_region;
    out["overall"] = rep.overall;
    out["order"] = partitions_json(rep.order);
    out["nmat1"] = matrix_json(rep.nmat1);
    out["amat"] = matrix_json(rep.amat);
    out["mmat"] = matrix_json(rep.mmat);
    Json checks = Json::array();
    for (const auto& c : rep.checks) {
        Json j;
        j["mu"] = to_json(c.mu);
        j["tau"] = to_json(c.tau);
        j["lhs"] = to_json(c.lhs);
        j["expected"] = c.expected;
        j["pass"] = c.pass;
        checks.push_back(std::move(j));
    }
    out["checks"] = std::move(checks);
    out["ladder_violations"] = partitions_json(rep.ladder_violations);
    Json neg = Json::array();
    for (const auto& [lambda, mu] : rep.negative_entries) neg.push_back(Json::array({to_json(lambda), to_json(mu)}));
    out["negative_entries"] = std::move(neg);
    out["nonnegative"] = rep.nonnegative();
    out["all_constant"] = rep.all_constant;
    if (rep.overall) {
        Json dec;
        dec["rows"] = partitions_json(rep.decomposition_rows);
        dec["columns"] = partitions_json(rep.order);
        dec["matrix"] = matrix_json(rep.decomposition);
        out["decomposition"] = std::move(dec);
    } else {
        out["decomposition"] = nullptr;
    }
    return out;
}

Json to_json(const ConsistencyResult& res) {
    Json out;
    out["ok"] = res.ok;
    out["diffs"] = res.diffs;
    return out;
}

std::string decomposition_csv(const VerificationReport& rep) {
    std::ostringstream os;
    os << "tau";
    for (const auto& mu : rep.order) os << ',' << csv_field(mu.to_string());
    os << '\n';
    for (std::size_t r = 0; r < rep.decomposition_rows.size(); ++r) {
        os << csv_field(rep.decomposition_rows[r].to_string());
        for (const auto& x : rep.decomposition[r]) os << ',' << x.get_str();
        os << '\n';
    }
    return os.str();
}

}  // namespace modrep
