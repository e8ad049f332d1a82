#include "arakzeta/field.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include "json.hpp"
#include <sstream>

#include "arakzeta/errors.hpp"

namespace arakzeta {

using json = nlohmann::json;

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

// Gram matrix of an ideal basis at x = 0 under the Arakelov metric.
Eigen::MatrixXd gram_at_zero(const NumberFieldData& F, const Eigen::MatrixXd& E) {
    Eigen::VectorXd w(F.degree_n);
    for (int v = 0; v < F.r1; ++v) w(v) = 1.0;
    for (int j = F.r1; j < F.degree_n; ++j) w(j) = 2.0;
    return E * w.asDiagonal() * E.transpose();
}

}  // namespace

NumberFieldData make_rationals() {
    NumberFieldData F;
    F.degree_n = 1;
    F.r1 = 1;
    F.r2 = 0;
    F.unit_rank_r = 0;
    F.disc_abs = 1.0;
    F.mu_count = 2;
    F.class_number_h = 1;
    F.regulator = 1.0;
    F.ideal_classes = {{1.0, Eigen::MatrixXd::Identity(1, 1)}};
    F.different_norm = 1.0;
    F.kappa = {{0, {0.0}}};
    F.discriminant = 1;
    return F;
}

void validate(const NumberFieldData& F) {
    const int n = F.degree_n;
    const int p = F.places();
    if (n < 1 || F.r1 < 0 || F.r2 < 0) throw InvariantError("degree", "n, r1, r2 must be non-negative with n >= 1");
    if (n != F.r1 + 2 * F.r2)
        throw InvariantError("degree", "n = " + std::to_string(n) + " but r1 + 2 r2 = " + std::to_string(F.r1 + 2 * F.r2));
    if (F.unit_rank_r != p - 1) throw InvariantError("unit_rank", "r must equal r1 + r2 - 1");
    if (!(F.disc_abs >= 1.0)) throw InvariantError("disc_abs", "must be >= 1");
    if (F.mu_count < 2 || F.mu_count % 2) throw InvariantError("mu_count", "must be even and >= 2");
    if (F.class_number_h < 1) throw InvariantError("class_number", "must be >= 1");
    if (!(F.regulator > 0.0)) throw InvariantError("regulator", "must be positive");
    if (F.unit_rank_r == 0 && std::abs(F.regulator - 1.0) > 1e-12)
        throw InvariantError("regulator", "unit rank 0 requires regulator 1, got " + fmt(F.regulator));
    if (std::abs(F.different_norm - F.disc_abs) > 1e-9 * F.disc_abs)
        throw InvariantError("different_norm", "N(d) must equal d_k");

    if (static_cast<int>(F.unit_logs.size()) != F.unit_rank_r)
        throw InvariantError("unit_logs", "expected " + std::to_string(F.unit_rank_r) + " unit-log vectors");
    for (const auto& u : F.unit_logs) {
        if (static_cast<int>(u.size()) != p) throw InvariantError("unit_logs", "each vector needs r1 + r2 entries");
        double s = 0.0, m = 1.0;
        for (double x : u) {
            if (!std::isfinite(x)) throw InvariantError("unit_logs", "non-finite entry");
            s += x;
            m = std::max(m, std::abs(x));
        }
        if (std::abs(s) > 1e-12 * m) throw InvariantError("unit_log_sum", "coordinate sum " + fmt(s) + " != 0");
    }
    if (F.unit_rank_r > 0) {
        const int r = F.unit_rank_r;
        Eigen::MatrixXd M(r, r);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) M(i, j) = F.unit_logs[i][j];
        const double det = std::abs(M.determinant());
        if (std::abs(det - F.regulator) > 1e-10 * std::max(1.0, F.regulator))
            throw InvariantError("regulator", "unit-log determinant " + fmt(det) + " != R = " + fmt(F.regulator) +
                                                  " (residual " + fmt(det - F.regulator) + ")");
    }

    if (static_cast<int>(F.ideal_classes.size()) != F.class_number_h)
        throw InvariantError("class_number", "number of ideal class bases differs from h");
    const double sqrt_d = std::sqrt(F.disc_abs);
    for (std::size_t c = 0; c < F.ideal_classes.size(); ++c) {
        const auto& I = F.ideal_classes[c];
        const std::string tag = "class " + std::to_string(c);
        if (I.embedding.rows() != n || I.embedding.cols() != n)
            throw InvariantError("embedding_shape", tag + ": embedding must be n x n");
        if (!I.embedding.allFinite()) throw InvariantError("embedding_shape", tag + ": non-finite entry");
        if (!(I.norm >= 1.0)) throw InvariantError("ideal_norm", tag + ": norm must be >= 1");
        if (c == 0 && std::abs(I.norm - 1.0) > 1e-12)
            throw InvariantError("principal_class", "first class must be the ring of integers (norm 1)");
        // Complex coordinates are (Re, Im); the Arakelov covolume carries 2^{r2}.
        const double cov = std::abs(I.embedding.determinant()) * std::ldexp(1.0, F.r2);
        const double want = I.norm * sqrt_d;
        if (std::abs(cov - want) > 1e-10 * want)
            throw InvariantError("covolume", tag + ": 2^r2 |det| = " + fmt(cov) + " but N(a) sqrt(d_k) = " + fmt(want));
        Eigen::LLT<Eigen::MatrixXd> llt(gram_at_zero(F, I.embedding));
        if (llt.info() != Eigen::Success) throw InvariantError("gram_spd", tag + ": Gram matrix at x = 0 is not SPD");
    }

    if (!F.kappa.empty()) {
        if (static_cast<int>(F.kappa.size()) != F.class_number_h)
            throw InvariantError("kappa_class", "pairing table needs one entry per class");
        for (const auto& k : F.kappa) {
            if (k.dual_class < 0 || k.dual_class >= F.class_number_h)
                throw InvariantError("kappa_class", "dual class index out of range");
            if (static_cast<int>(k.log_gamma.size()) != p)
                throw InvariantError("kappa_class", "log_gamma needs r1 + r2 entries");
        }
    }
}

namespace {

double real_of(const json& j, const char* what) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        std::size_t pos = 0;
        double v = 0.0;
        try {
            v = std::stod(s, &pos);
        } catch (...) {
            throw InputError(std::string("field file: cannot parse number for ") + what + ": '" + s + "'");
        }
        if (pos != s.size()) throw InputError(std::string("field file: trailing characters in ") + what);
        return v;
    }
    throw InputError(std::string("field file: expected a number for ") + what);
}

int int_of(const json& j, const char* what) {
    const double v = real_of(j, what);
    if (v != std::floor(v) || std::abs(v) > 1e9) throw InputError(std::string("field file: ") + what + " must be an integer");
    return static_cast<int>(v);
}

const json& need(const json& j, const char* key) {
    if (!j.contains(key)) throw InputError(std::string("field file: missing key '") + key + "'");
    return j.at(key);
}

}  // namespace

NumberFieldData parse_field_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("field file: JSON parse error: ") + e.what());
    }
    if (!j.is_object()) throw InputError("field file: top level must be an object");

    NumberFieldData F;
    F.degree_n = int_of(need(j, "degree"), "degree");
    F.r1 = int_of(need(j, "r1"), "r1");
    F.r2 = int_of(need(j, "r2"), "r2");
    F.unit_rank_r = F.r1 + F.r2 - 1;
    F.disc_abs = real_of(need(j, "disc_abs"), "disc_abs");
    F.mu_count = int_of(need(j, "mu_count"), "mu_count");
    F.class_number_h = int_of(need(j, "class_number"), "class_number");
    F.regulator = real_of(need(j, "regulator"), "regulator");
    F.different_norm = real_of(need(j, "different_norm"), "different_norm");
    if (j.contains("discriminant")) F.discriminant = static_cast<long long>(real_of(j.at("discriminant"), "discriminant"));

    const auto& ul = need(j, "unit_logs");
    if (!ul.is_array()) throw InputError("field file: unit_logs must be an array");
    for (const auto& row : ul) {
        if (!row.is_array()) throw InputError("field file: unit_logs rows must be arrays");
        std::vector<double> v;
        for (const auto& x : row) v.push_back(real_of(x, "unit_logs"));
        F.unit_logs.push_back(std::move(v));
    }

    const auto& ic = need(j, "ideal_classes");
    if (!ic.is_array()) throw InputError("field file: ideal_classes must be an array");
    const int n = F.degree_n;
    if (n < 1 || n > 64) throw InputError("field file: degree out of range");
    for (const auto& c : ic) {
        IdealLatticeBasis I;
        I.norm = real_of(need(c, "norm"), "norm");
        const auto& e = need(c, "embedding");
        if (!e.is_array()) throw InputError("field file: embedding must be an array");
        std::vector<double> flat;
        for (const auto& row : e) {
            if (row.is_array())
                for (const auto& x : row) flat.push_back(real_of(x, "embedding"));
            else
                flat.push_back(real_of(row, "embedding"));
        }
        if (static_cast<int>(flat.size()) != n * n) throw InputError("field file: embedding must have n*n entries");
        I.embedding.resize(n, n);
        for (int r = 0; r < n; ++r)
            for (int k = 0; k < n; ++k) I.embedding(r, k) = flat[r * n + k];
        F.ideal_classes.push_back(std::move(I));
    }

    if (j.contains("kappa_class")) {
        const auto& kc = j.at("kappa_class");
        if (!kc.is_array()) throw InputError("field file: kappa_class must be an array");
        F.kappa.assign(kc.size(), {});
        for (const auto& e : kc) {
            const int c = int_of(need(e, "class"), "class");
            if (c < 0 || c >= static_cast<int>(kc.size())) throw InputError("field file: kappa_class class index out of range");
            KappaPairing k;
            k.dual_class = int_of(need(e, "dual_class"), "dual_class");
            for (const auto& x : need(e, "log_gamma")) k.log_gamma.push_back(real_of(x, "log_gamma"));
            F.kappa[c] = std::move(k);
        }
    }

    validate(F);
    return F;
}

NumberFieldData load_field_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open field file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_field_json(ss.str());
}

std::string field_to_json(const NumberFieldData& F) {
    json j;
    j["degree"] = F.degree_n;
    j["r1"] = F.r1;
    j["r2"] = F.r2;
    j["disc_abs"] = F.disc_abs;
    j["mu_count"] = F.mu_count;
    j["class_number"] = F.class_number_h;
    j["regulator"] = F.regulator;
    j["different_norm"] = F.different_norm;
    if (F.discriminant != 0) j["discriminant"] = F.discriminant;
    j["unit_logs"] = F.unit_logs;
    json ic = json::array();
    for (const auto& I : F.ideal_classes) {
        json rows = json::array();
        for (Eigen::Index r = 0; r < I.embedding.rows(); ++r) {
            json row = json::array();
            for (Eigen::Index k = 0; k < I.embedding.cols(); ++k) row.push_back(I.embedding(r, k));
            rows.push_back(row);
        }
        ic.push_back({{"norm", I.norm}, {"embedding", rows}});
    }
    j["ideal_classes"] = ic;
    if (!F.kappa.empty()) {
        json kc = json::array();
        for (std::size_t c = 0; c < F.kappa.size(); ++c)
            kc.push_back({{"class", c}, {"dual_class", F.kappa[c].dual_class}, {"log_gamma", F.kappa[c].log_gamma}});
        j["kappa_class"] = kc;
    }
    return j.dump(2);
}

void save_field_file(const NumberFieldData& F, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write field file '" + path + "'");
    out << field_to_json(F) << '\n';
}

bool same_field_data(const NumberFieldData& a, const NumberFieldData& b) {
    if (a.degree_n != b.degree_n || a.r1 != b.r1 || a.r2 != b.r2 || a.unit_rank_r != b.unit_rank_r ||
        a.disc_abs != b.disc_abs || a.mu_count != b.mu_count || a.class_number_h != b.class_number_h ||
        a.regulator != b.regulator || a.different_norm != b.different_norm || a.unit_logs != b.unit_logs ||
        a.discriminant != b.discriminant || a.ideal_classes.size() != b.ideal_classes.size() ||
        a.kappa.size() != b.kappa.size())
        return false;
    for (std::size_t c = 0; c < a.ideal_classes.size(); ++c)
        if (a.ideal_classes[c].norm != b.ideal_classes[c].norm ||
            a.ideal_classes[c].embedding != b.ideal_classes[c].embedding)
            return false;
    for (std::size_t c = 0; c < a.kappa.size(); ++c)
        if (a.kappa[c].dual_class != b.kappa[c].dual_class || a.kappa[c].log_gamma != b.kappa[c].log_gamma) return false;
    return true;
}

}  // namespace arakzeta
