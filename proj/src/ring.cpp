#include "qgauss/ring.hpp"
#include <cctype>

#include <sstream>
#include <stdexcept>

namespace qgauss {

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty())
            throw std::invalid_argument("VarSet: empty variable name");
        for (std::size_t j = i + 1; j < names_.size(); ++j)
            if (names_[i] == names_[j])
                throw std::invalid_argument("VarSet: duplicate variable '" + names_[i] + "'");
    }
}

std::shared_ptr<const VarSet> VarSet::make(std::vector<std::string> names) {
    return std::make_shared<const VarSet>(std::move(names));
}

bool VarSet::contains(std::string_view name) const {
    for (const auto& n : names_)
        if (n == name) return true;
    return false;
}

std::size_t VarSet::index(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    throw std::invalid_argument("VarSet: unknown variable '" + std::string(name) + "'");
}

void LaurentPoly::require_vars() const {
    if (!vars_)
        throw std::logic_error("LaurentPoly: use of a default-constructed element");
}

void LaurentPoly::require_same_vars(const LaurentPoly& rhs) const {
    require_vars();
    rhs.require_vars();
    if (vars_ != rhs.vars_ && *vars_ != *rhs.vars_)
        throw std::invalid_argument("LaurentPoly: mismatched variable sets");
}

void LaurentPoly::insert_term(ExpVec exps, Int c) {
    if (c == 0) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(std::move(exps), std::move(c));
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::zero(VarSetPtr vars) {
    if (!vars) throw std::invalid_argument("LaurentPoly: null VarSet");
    LaurentPoly p;
    p.vars_ = std::move(vars);
    return p;
}

LaurentPoly LaurentPoly::constant(VarSetPtr vars, Int c) {
    LaurentPoly p = zero(std::move(vars));
    p.insert_term(ExpVec(p.vars_->size(), 0), std::move(c));
    return p;
}

LaurentPoly LaurentPoly::variable(VarSetPtr vars, std::string_view name, int exp) {
    LaurentPoly p = zero(std::move(vars));
    ExpVec e(p.vars_->size(), 0);
    e[p.vars_->index(name)] = exp;
    p.insert_term(std::move(e), 1);
    return p;
}

LaurentPoly LaurentPoly::monomial(VarSetPtr vars, ExpVec exps, Int coeff) {
    LaurentPoly p = zero(std::move(vars));
    if (exps.size() != p.vars_->size())
        throw std::invalid_argument("LaurentPoly: exponent vector length mismatch");
    p.insert_term(std::move(exps), std::move(coeff));
    return p;
}

bool LaurentPoly::is_one() const {
    if (terms_.size() != 1) return false;
    const auto& [e, c] = *terms_.begin();
    if (c != 1) return false;
    for (int k : e)
        if (k != 0) return false;
    return true;
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    for (int k : terms_.begin()->first)
        if (k != 0) return false;
    return true;
}

Int LaurentPoly::constant_value() const {
    require_vars();
    if (terms_.empty()) return 0;
    if (!is_constant())
        throw std::domain_error("LaurentPoly: not a constant: " + str());
    return terms_.begin()->second;
}

Int LaurentPoly::coeff(const ExpVec& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Int(0) : it->second;
}

LaurentPoly LaurentPoly::operator-() const {
    require_vars();
    LaurentPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
    require_same_vars(rhs);
    LaurentPoly r = *this;
    for (const auto& [e, c] : rhs.terms_) r.insert_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const {
    require_same_vars(rhs);
    LaurentPoly r = *this;
    for (const auto& [e, c] : rhs.terms_) r.insert_term(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
    require_same_vars(rhs);
    LaurentPoly r = zero(vars_);
    const std::size_t m = vars_->size();
    ExpVec sum(m, 0);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : rhs.terms_) {
            for (std::size_t i = 0; i < m; ++i) sum[i] = e1[i] + e2[i];
            r.insert_term(sum, c1 * c2);
        }
    }
    return r;
}

bool LaurentPoly::operator==(const LaurentPoly& rhs) const {
    require_same_vars(rhs);
    return terms_ == rhs.terms_;
}

LaurentPoly LaurentPoly::pow(long k) const {
    require_vars();
    if (k < 0) return inverse().pow(-k);
    LaurentPoly acc = constant(vars_, 1);
    LaurentPoly base = *this;
    unsigned long e = static_cast<unsigned long>(k);
    while (e > 0) {
        if (e & 1UL) acc = acc * base;
        base = (e >>= 1UL) ? base * base : base;
    }
    return acc;
}

LaurentPoly LaurentPoly::inverse() const {
    require_vars();
    if (terms_.size() != 1)
        throw std::domain_error("LaurentPoly: inverse of a non-monomial: " + str());
    const auto& [e, c] = *terms_.begin();
    if (c != 1 && c != -1)
        throw std::domain_error("LaurentPoly: inverse needs a unit coefficient, got " + c.str());
    ExpVec ne(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) ne[i] = -e[i];
    LaurentPoly r = zero(vars_);
    r.insert_term(std::move(ne), c);  // (+-1)^-1 == +-1
    return r;
}

LaurentPoly LaurentPoly::substitute(std::string_view name, const LaurentPoly& replacement) const {
    require_same_vars(replacement);
    if (replacement.terms_.size() != 1)
        throw std::invalid_argument("LaurentPoly: substitute needs a single-term replacement, got " +
                                    replacement.str());
    const std::size_t vi = vars_->index(name);
    const auto& [re, rc] = *replacement.terms_.begin();
    LaurentPoly out = zero(vars_);
    ExpVec ne(vars_->size(), 0);
    for (const auto& [e, c] : terms_) {
        const int k = e[vi];
        for (std::size_t i = 0; i < ne.size(); ++i) ne[i] = e[i] + k * re[i];
        ne[vi] -= k;  // the variable itself vanishes; re may reintroduce it
        Int nc = c;
        if (k != 0) {
            if (rc == 1) {
                // common case, nothing to do
            } else if (rc == -1) {
                if (k % 2 != 0) nc = -nc;
            } else if (k > 0) {
                Int f = 1;
                for (int t = 0; t < k; ++t) f *= rc;
                nc *= f;
            } else {
                throw std::domain_error(
                    "LaurentPoly: substitute with negative exponent needs a unit coefficient");
            }
        }
        out.insert_term(ne, std::move(nc));
    }
    return out;
}

LaurentPoly LaurentPoly::substitute_poly(std::string_view name, const LaurentPoly& replacement) const {
    require_same_vars(replacement);
    const std::size_t vi = vars_->index(name);
    LaurentPoly out = zero(vars_);
    for (const auto& [e, c] : terms_) {
        const int k = e[vi];
        if (k < 0)
            throw std::domain_error("LaurentPoly: substitute_poly hit a negative exponent of '" +
                                    std::string(name) + "'");
        ExpVec rest = e;
        rest[vi] = 0;
        out = out + monomial(vars_, std::move(rest), c) * replacement.pow(k);
    }
    return out;
}

LaurentPoly LaurentPoly::derive_at_one(std::string_view name, const Rat& slope) const {
    require_vars();
    const std::size_t vi = vars_->index(name);
    // First aggregate sum(k * coeff) per residual monomial, then apply the
    // slope once; individual terms may contribute non-integral halves that
    // cancel in the aggregate.
    std::map<ExpVec, Int> agg;
    for (const auto& [e, c] : terms_) {
        if (e[vi] == 0) continue;
        ExpVec rest = e;
        rest[vi] = 0;
        agg[std::move(rest)] += Int(e[vi]) * c;
    }
    LaurentPoly out = zero(vars_);
    for (auto& [e, s] : agg) {
        Rat scaled = Rat(s) * slope;
        if (boost::multiprecision::denominator(scaled) != 1)
            throw std::domain_error("LaurentPoly: derive_at_one produced the non-integral coefficient " +
                                    rat_str(scaled));
        out.insert_term(e, Int(boost::multiprecision::numerator(scaled)));
    }
    return out;
}

LaurentPoly LaurentPoly::div_exact(const LaurentPoly& divisor) const {
    require_same_vars(divisor);
    if (divisor.is_zero())
        throw std::domain_error("LaurentPoly: division by zero");
    LaurentPoly quot = zero(vars_);
    LaurentPoly rem = *this;
    // Lexicographically largest term of the divisor.  The order respects
    // exponent addition, so exact division strips one quotient term per step.
    const auto& [de, dc] = *divisor.terms_.rbegin();
    const std::size_t m = vars_->size();
    // Exactness caps the step count by the quotient's term count; anything
    // beyond this bound means the division cannot be exact.
    std::size_t budget = 4 * (terms_.size() + 1) * (divisor.terms_.size() + 1) + 64;
    while (!rem.is_zero()) {
        if (budget-- == 0)
            throw std::domain_error("LaurentPoly: non-exact division (no finite quotient)");
        const auto& [re, rc] = *rem.terms_.rbegin();
        if (rc % dc != 0)
            throw std::domain_error("LaurentPoly: non-exact division, coefficient " + rc.str() +
                                    " not divisible by " + dc.str());
        ExpVec qe(m);
        for (std::size_t i = 0; i < m; ++i) qe[i] = re[i] - de[i];
        LaurentPoly t = monomial(vars_, std::move(qe), rc / dc);
        quot = quot + t;
        rem = rem - t * divisor;
    }
    return quot;
}

nlohmann::json LaurentPoly::to_json() const {
    require_vars();
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : terms_)
        terms.push_back({{"exp", e}, {"coeff", c.str()}});
    return {{"vars", vars_->names()}, {"terms", std::move(terms)}};
}

LaurentPoly LaurentPoly::from_json(const nlohmann::json& j, VarSetPtr vars) {
    const auto names = j.at("vars").get<std::vector<std::string>>();
    if (vars) {
        if (vars->names() != names)
            throw std::invalid_argument("LaurentPoly: JSON variable list does not match the VarSet");
    } else {
        vars = VarSet::make(names);
    }
    LaurentPoly p = zero(std::move(vars));
    for (const auto& t : j.at("terms")) {
        ExpVec e = t.at("exp").get<ExpVec>();
        if (e.size() != p.vars_->size())
            throw std::invalid_argument("LaurentPoly: JSON exponent vector length mismatch");
        p.insert_term(std::move(e), Int(t.at("coeff").get<std::string>()));
    }
    return p;
}

std::string LaurentPoly::str() const {
    if (!vars_) return "<unset>";
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest term first reads like handwritten algebra.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Int a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool has_var = false;
        std::ostringstream vpart;
        bool vfirst = true;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!vfirst) vpart << "*";
            vfirst = false;
            vpart << vars_->name(i);
            if (e[i] != 1) vpart << "^" << e[i];
            has_var = true;
        }
        if (!has_var) {
            os << a.str();
        } else {
            if (a != 1) os << a.str() << "*";
            os << vpart.str();
        }
    }
    return os.str();
}

namespace {

void trim(std::string_view& s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
}

}  // namespace

LaurentPoly parse_monomial(const VarSetPtr& vars, std::string_view text) {
    std::string_view rest = text;
    trim(rest);
    Int coeff = 1;
    if (!rest.empty() && (rest.front() == '-' || rest.front() == '+')) {
        if (rest.front() == '-') coeff = -1;
        rest.remove_prefix(1);
        trim(rest);
    }
    if (rest.empty())
        throw std::invalid_argument("parse_monomial: empty input");
    ExpVec exps(vars->size(), 0);
    while (true) {
        std::size_t cut = rest.find('*');
        std::string_view factor = cut == std::string_view::npos ? rest : rest.substr(0, cut);
        trim(factor);
        if (factor.empty())
            throw std::invalid_argument("parse_monomial: empty factor in '" + std::string(text) + "'");
        if (std::isdigit(static_cast<unsigned char>(factor.front()))) {
            coeff *= Int(std::string(factor));
        } else {
            std::size_t caret = factor.find('^');
            std::string_view name = caret == std::string_view::npos ? factor : factor.substr(0, caret);
            trim(name);
            int exp = 1;
            if (caret != std::string_view::npos) {
                std::string_view etext = factor.substr(caret + 1);
                trim(etext);
                try {
                    exp = std::stoi(std::string(etext));
                } catch (const std::exception&) {
                    throw std::invalid_argument("parse_monomial: bad exponent in '" +
                                                std::string(factor) + "'");
                }
            }
            exps[vars->index(name)] += exp;
        }
        if (cut == std::string_view::npos) break;
        rest.remove_prefix(cut + 1);
    }
    return LaurentPoly::monomial(vars, std::move(exps), std::move(coeff));
}

std::string rat_str(const Rat& r) {
    if (boost::multiprecision::denominator(r) == 1)
        return boost::multiprecision::numerator(r).str();
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

}  // namespace qgauss
