#include "qgauss/verify.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace qgauss {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Part summaries.  Matrix residuals locate the first nonzero entry in
// row-major order; element residuals carry the canonical form directly.
nlohmann::json matrix_part(const std::string& name, const OpMatrix& res) {
    nlohmann::json p;
    p["name"] = name;
    const auto loc = res.first_nonzero();
    p["zero"] = !loc.has_value();
    if (loc) {
        p["row"] = loc->first;
        p["col"] = loc->second;
        p["entry"] = res.at(loc->first, loc->second).str();
    }
    return p;
}

nlohmann::json element_part(const std::string& name, const AlgebraElement& res) {
    nlohmann::json p;
    p["name"] = name;
    p["zero"] = res.is_zero();
    if (!res.is_zero()) p["entry"] = res.str();
    return p;
}

// Shared tail: pass iff every part vanished.
void finish(VerificationReport& rep, nlohmann::json parts, Clock::time_point start) {
    bool pass = true;
    for (const auto& p : parts)
        if (!p.at("zero").get<bool>()) pass = false;
    rep.residual["parts"] = std::move(parts);
    rep.pass = pass;
    rep.wall_ms = ms_since(start);
}

LaurentPoly qvar_of(const SignaturePtr& sig) {
    return LaurentPoly::variable(sig->vars(), "q");
}

// x_i^2 x_j - q^(s) (q + q^-1) x_i x_j x_i + q^(2s) x_j x_i^2 with s = +-1.
AlgebraElement serre_residual(const AlgebraElement& xi, const AlgebraElement& xj,
                              const LaurentPoly& q, int sign) {
    const LaurentPoly qs = q.pow(sign);
    const LaurentPoly mid = qs * (q + q.pow(-1));
    return xi * xi * xj - (xi * xj * xi).scale(mid) + (xj * xi * xi).scale(qs.pow(2));
}

}  // namespace

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json j;
    j["check"] = check;
    j["n"] = n;
    j["bindings"] = bindings;
    j["residual"] = residual;
    j["pass"] = pass;
    return j;
}

VerificationReport VerificationReport::from_json(const nlohmann::json& j) {
    VerificationReport rep;
    rep.check = j.at("check").get<std::string>();
    rep.n = j.at("n").get<int>();
    rep.bindings = j.at("bindings");
    rep.residual = j.at("residual");
    rep.pass = j.at("pass").get<bool>();
    return rep;
}

VerificationReport check_rtt(const RMatrix& r, const OpMatrix& t) {
    const auto start = Clock::now();
    VerificationReport rep;
    rep.check = "rtt";
    rep.n = r.n;
    rep.bindings["coefficients"] = "formal";

    nlohmann::json parts = nlohmann::json::array();
    parts.push_back(matrix_part("R T1 T2 = T2 T1 R", rtt_residual(r.grid, t)));
    finish(rep, std::move(parts), start);
    return rep;
}

VerificationReport check_gauss(const RMatrix& r, const GaussTriple& triple) {
    const auto start = Clock::now();
    VerificationReport rep;
    rep.check = "gauss";
    rep.n = triple.n;
    rep.bindings["coefficients"] = "formal";

    const GaussFactors f = identified_factors(triple);
    const PolyMatrix rd = derived_parts(r).diag;
    const std::size_t nn = static_cast<std::size_t>(triple.n) * triple.n;
    const PolyMatrix one = PolyMatrix::identity(r.grid.vars(), nn);

    nlohmann::json parts = nlohmann::json::array();
    parts.push_back(matrix_part("(1.7) R T1(-) T2(-) = T2(-) T1(-) R",
                                rtt_residual(r.grid, triple.tminus)));
    parts.push_back(matrix_part("(1.7) R T1(+) T2(+) = T2(+) T1(+) R",
                                rtt_residual(r.grid, triple.tplus)));
    parts.push_back(matrix_part("(1.7) identified minus factor",
                                rtt_residual(r.grid, f.t_minus)));
    parts.push_back(matrix_part("(1.7) identified plus factor",
                                rtt_residual(r.grid, f.t_plus)));
    parts.push_back(matrix_part("(1.8) Rd T1(+) T2(-) = T2(-) T1(+) Rd",
                                rtt_mixed_residual(rd, f.t_plus, f.t_minus)));
    parts.push_back(matrix_part("(1.9) Rd TD1 T2(-) = T2(-) TD1 Rd",
                                rtt_mixed_residual(rd, f.t_d, f.t_minus)));
    parts.push_back(matrix_part("(1.10) Rd T1(+) TD2 = TD2 T1(+) Rd",
                                rtt_mixed_residual(rd, f.t_plus, f.t_d)));
    parts.push_back(matrix_part("(1.11) TL1 TU2 = TU2 TL1",
                                rtt_mixed_residual(one, f.t_l, f.t_u)));
    finish(rep, std::move(parts), start);
    return rep;
}

VerificationReport check_serre_and_qcomm(const GaussTriple& triple) {
    const auto start = Clock::now();
    if (triple.n < 3)
        throw std::invalid_argument("check_serre_and_qcomm: needs n >= 3");

    VerificationReport rep;
    rep.check = "serre";
    rep.n = triple.n;
    rep.bindings["coefficients"] = "formal";
    rep.residual["sign_pairing"] =
        "j = i+1 takes the upper signs: x_i x_j = q^2 x_j x_i and "
        "x_i^2 x_j - q (q + q^-1) x_i x_j x_i + q^2 x_j x_i^2 = 0; "
        "j = i-1 inverts the exponents; both factors pair the same way";

    const LaurentPoly q = qvar_of(triple.sig);
    const LaurentPoly q2 = q.pow(2);
    const int n = triple.n;

    // Simple-root entries: e_i = t^(+)_{i,i+1}, f_i = t^(-)_{i+1,i}.
    std::vector<AlgebraElement> e, fl;
    for (int i = 1; i < n; ++i) {
        e.push_back(triple.tplus.at(i - 1, i));
        fl.push_back(triple.tminus.at(i, i - 1));
    }

    nlohmann::json parts = nlohmann::json::array();
    auto tag = [](const std::string& head, int i, int j) {
        return head + " (" + std::to_string(i) + "," + std::to_string(j) + ")";
    };

    for (int i = 1; i < n - 1; ++i) {
        const int j = i + 1;
        const AlgebraElement& a = e[i - 1];
        const AlgebraElement& b = e[j - 1];
        const AlgebraElement& c = fl[i - 1];
        const AlgebraElement& d = fl[j - 1];
        parts.push_back(element_part(tag("qcomm plus", i, j), a * b - (b * a).scale(q2)));
        parts.push_back(element_part(tag("qcomm minus", i, j), c * d - (d * c).scale(q2)));
        parts.push_back(element_part(tag("serre plus", i, j), serre_residual(a, b, q, +1)));
        parts.push_back(element_part(tag("serre plus", j, i), serre_residual(b, a, q, -1)));
        parts.push_back(element_part(tag("serre minus", i, j), serre_residual(c, d, q, +1)));
        parts.push_back(element_part(tag("serre minus", j, i), serre_residual(d, c, q, -1)));
    }
    for (int i = 1; i < n - 1; ++i)
        for (int j = i + 2; j < n; ++j) {
            parts.push_back(element_part(tag("commute plus", i, j),
                                         commutator(e[i - 1], e[j - 1])));
            parts.push_back(element_part(tag("commute minus", i, j),
                                         commutator(fl[i - 1], fl[j - 1])));
        }
    finish(rep, std::move(parts), start);
    return rep;
}

VerificationReport check_qdet_and_diagonal(const GaussTriple& triple) {
    const auto start = Clock::now();
    VerificationReport rep;
    rep.check = "qdet";
    rep.n = triple.n;
    rep.bindings["coefficients"] = "formal";

    const LaurentPoly q = qvar_of(triple.sig);
    const AlgebraElement one = AlgebraElement::one(triple.sig);

    AlgebraElement prod_minus = one;
    AlgebraElement prod_plus = one;
    for (int i = 0; i < triple.n; ++i) {
        prod_minus = prod_minus * triple.tminus.at(i, i);
        prod_plus = prod_plus * triple.tplus.at(i, i);
    }

    nlohmann::json parts = nlohmann::json::array();
    parts.push_back(element_part("qdet(T) = 1", qdet(assemble_T(triple), q) - one));
    parts.push_back(element_part("prod t_ii(-) = 1", prod_minus - one));
    parts.push_back(element_part("prod t_ii(+) = 1", prod_plus - one));
    finish(rep, std::move(parts), start);
    return rep;
}

VerificationReport check_inverse_relations(const GaussTriple& triple, const RMatrix& r) {
    const auto start = Clock::now();
    VerificationReport rep;
    rep.check = "inverse";
    rep.n = triple.n;
    rep.bindings["coefficients"] = "formal";

    const OpMatrix inv_minus = triangular_inverse(triple.tminus, Triangle::lower);
    const OpMatrix inv_plus = triangular_inverse(triple.tplus, Triangle::upper);

    // R S2 S1 = S1 S2 R is the plain relation for the flip-conjugated grid.
    const PolyMatrix p = derived_parts(r).perm;
    const PolyMatrix prp = p * r.grid * p;

    nlohmann::json parts = nlohmann::json::array();
    parts.push_back(matrix_part("R S2 S1 = S1 S2 R for S = inverse of T(-)",
                                rtt_residual(prp, inv_minus)));
    parts.push_back(matrix_part("R S2 S1 = S1 S2 R for S = inverse of T(+)",
                                rtt_residual(prp, inv_plus)));
    finish(rep, std::move(parts), start);
    return rep;
}

int suite_threads() {
    if (const char* env = std::getenv("QGAUSS_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<int>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

std::vector<VerificationReport> run_suite(const std::vector<CheckFn>& checks) {
    std::vector<std::optional<VerificationReport>> slots(checks.size());
    std::vector<std::exception_ptr> errors(checks.size());
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= checks.size()) return;
            try {
                slots[i] = checks[i]();
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };

    const std::size_t workers =
        std::min<std::size_t>(static_cast<std::size_t>(suite_threads()),
                              std::max<std::size_t>(checks.size(), 1));
    std::vector<std::thread> pool;
    for (std::size_t i = 1; i < workers; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    for (const auto& err : errors)
        if (err) std::rethrow_exception(err);

    std::vector<VerificationReport> out;
    out.reserve(checks.size());
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

}  // namespace qgauss
