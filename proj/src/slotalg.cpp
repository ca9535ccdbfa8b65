#include "qgauss/slotalg.hpp"

#include <sstream>
#include <stdexcept>

namespace qgauss {

AlgebraSignature::AlgebraSignature(VarSetPtr vars, std::vector<SlotSpec> slots)
    : vars_(std::move(vars)), slots_(std::move(slots)) {
    if (!vars_) throw std::invalid_argument("AlgebraSignature: null VarSet");
    comm_exp_.resize(slots_.size());
    comm_sign_.resize(slots_.size());
    for (std::size_t s = 0; s < slots_.size(); ++s) {
        const SlotSpec& sp = slots_[s];
        if (sp.comm.size() != sp.xgen.size())
            throw std::invalid_argument("AlgebraSignature: comm table rows != X generators");
        comm_exp_[s].resize(sp.xgen.size());
        comm_sign_[s].resize(sp.xgen.size());
        for (std::size_t g = 0; g < sp.xgen.size(); ++g) {
            if (sp.comm[g].size() != sp.torus.size())
                throw std::invalid_argument("AlgebraSignature: comm table cols != torus generators");
            for (std::size_t m = 0; m < sp.torus.size(); ++m) {
                const LaurentPoly& c = sp.comm[g][m];
                if (!c.vars() || (*c.vars() != *vars_))
                    throw std::invalid_argument("AlgebraSignature: commutation scalar over wrong VarSet");
                if (!c.is_monomial())
                    throw std::invalid_argument("AlgebraSignature: commutation scalar must be a monomial");
                const auto& [e, k] = *c.terms().begin();
                if (k != 1 && k != -1)
                    throw std::invalid_argument("AlgebraSignature: commutation scalar must be a unit");
                comm_exp_[s][g].push_back(e);
                comm_sign_[s][g].push_back(k == 1 ? 1 : -1);
            }
        }
    }
}

std::shared_ptr<const AlgebraSignature> AlgebraSignature::make(VarSetPtr vars,
                                                               std::vector<SlotSpec> slots) {
    return std::make_shared<const AlgebraSignature>(std::move(vars), std::move(slots));
}

bool AlgebraSignature::operator==(const AlgebraSignature& rhs) const {
    if (*vars_ != *rhs.vars_ || slots_.size() != rhs.slots_.size()) return false;
    for (std::size_t s = 0; s < slots_.size(); ++s) {
        const SlotSpec& a = slots_[s];
        const SlotSpec& b = rhs.slots_[s];
        if (a.name != b.name || a.torus != b.torus || a.xgen != b.xgen) return false;
        for (std::size_t g = 0; g < a.xgen.size(); ++g)
            for (std::size_t m = 0; m < a.torus.size(); ++m)
                if (a.comm[g][m] != b.comm[g][m]) return false;
    }
    return true;
}

nlohmann::json AlgebraSignature::to_json() const {
    nlohmann::json js = nlohmann::json::array();
    for (const auto& sp : slots_) {
        nlohmann::json jc = nlohmann::json::array();
        for (const auto& row : sp.comm) {
            nlohmann::json jr = nlohmann::json::array();
            for (const auto& c : row) jr.push_back(c.str());
            jc.push_back(std::move(jr));
        }
        js.push_back({{"name", sp.name}, {"torus", sp.torus}, {"xgen", sp.xgen},
                      {"comm", std::move(jc)}});
    }
    return {{"vars", vars_->names()}, {"slots", std::move(js)}};
}

bool SlotWord::trivial() const {
    for (int t : torus)
        if (t != 0) return false;
    for (int p : x)
        if (p != 0) return false;
    return true;
}

void AlgebraElement::require_sig() const {
    if (!sig_) throw std::logic_error("AlgebraElement: use of a default-constructed element");
}

void AlgebraElement::require_same_sig(const AlgebraElement& rhs) const {
    require_sig();
    rhs.require_sig();
    if (sig_ != rhs.sig_ && *sig_ != *rhs.sig_)
        throw std::invalid_argument("AlgebraElement: mismatched signatures");
}

void AlgebraElement::insert_term(Word w, LaurentPoly c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(std::move(w), std::move(c));
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AlgebraElement AlgebraElement::zero(SignaturePtr sig) {
    if (!sig) throw std::invalid_argument("AlgebraElement: null signature");
    AlgebraElement e;
    e.sig_ = std::move(sig);
    return e;
}

AlgebraElement AlgebraElement::one(SignaturePtr sig) {
    if (!sig) throw std::invalid_argument("AlgebraElement: null signature");
    LaurentPoly c = LaurentPoly::constant(sig->vars(), 1);
    return scalar(std::move(sig), std::move(c));
}

AlgebraElement AlgebraElement::scalar(SignaturePtr sig, LaurentPoly c) {
    AlgebraElement e = zero(std::move(sig));
    if (!c.vars() || *c.vars() != *e.sig_->vars())
        throw std::invalid_argument("AlgebraElement: scalar over the wrong VarSet");
    Word w(e.sig_->slot_count());
    for (std::size_t s = 0; s < w.size(); ++s) {
        w[s].torus.assign(e.sig_->slot(s).torus.size(), 0);
        w[s].x.assign(e.sig_->slot(s).xgen.size(), 0);
    }
    e.insert_term(std::move(w), std::move(c));
    return e;
}

AlgebraElement AlgebraElement::torus_gen(SignaturePtr sig, std::size_t slot, std::size_t m,
                                         int exp) {
    AlgebraElement e = one(std::move(sig));
    Word w = e.terms_.begin()->first;
    LaurentPoly c = e.terms_.begin()->second;
    if (slot >= w.size() || m >= w[slot].torus.size())
        throw std::invalid_argument("AlgebraElement: torus generator index out of range");
    w[slot].torus[m] = exp;
    e.terms_.clear();
    e.insert_term(std::move(w), std::move(c));
    return e;
}

AlgebraElement AlgebraElement::x_gen(SignaturePtr sig, std::size_t slot, std::size_t g, int pow) {
    AlgebraElement e = one(std::move(sig));
    Word w = e.terms_.begin()->first;
    LaurentPoly c = e.terms_.begin()->second;
    if (slot >= w.size() || g >= w[slot].x.size())
        throw std::invalid_argument("AlgebraElement: X generator index out of range");
    if (pow < 0) throw std::invalid_argument("AlgebraElement: negative X power");
    w[slot].x[g] = pow;
    e.terms_.clear();
    e.insert_term(std::move(w), std::move(c));
    return e;
}

AlgebraElement AlgebraElement::make(SignaturePtr sig, Word w, LaurentPoly c) {
    AlgebraElement e = zero(std::move(sig));
    if (w.size() != e.sig_->slot_count())
        throw std::invalid_argument("AlgebraElement: word has the wrong slot count");
    for (std::size_t s = 0; s < w.size(); ++s) {
        if (w[s].torus.size() != e.sig_->slot(s).torus.size() ||
            w[s].x.size() != e.sig_->slot(s).xgen.size())
            throw std::invalid_argument("AlgebraElement: slot word shape mismatch");
        for (int p : w[s].x)
            if (p < 0) throw std::invalid_argument("AlgebraElement: negative X power");
    }
    if (!c.vars() || *c.vars() != *e.sig_->vars())
        throw std::invalid_argument("AlgebraElement: coefficient over the wrong VarSet");
    e.insert_term(std::move(w), std::move(c));
    return e;
}

bool AlgebraElement::is_one() const {
    if (terms_.size() != 1) return false;
    const auto& [w, c] = *terms_.begin();
    if (!c.is_one()) return false;
    for (const auto& sw : w)
        if (!sw.trivial()) return false;
    return true;
}

AlgebraElement AlgebraElement::operator-() const {
    require_sig();
    AlgebraElement r = *this;
    for (auto& [w, c] : r.terms_) c = -c;
    return r;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& rhs) const {
    require_same_sig(rhs);
    AlgebraElement r = *this;
    for (const auto& [w, c] : rhs.terms_) r.insert_term(w, c);
    return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& rhs) const {
    require_same_sig(rhs);
    AlgebraElement r = *this;
    for (const auto& [w, c] : rhs.terms_) r.insert_term(w, -c);
    return r;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& rhs) const {
    require_same_sig(rhs);
    AlgebraElement r = zero(sig_);
    const std::size_t nvars = sig_->vars()->size();
    const std::size_t nslots = sig_->slot_count();
    ExpVec shift(nvars, 0);
    for (const auto& [w1, c1] : terms_) {
        for (const auto& [w2, c2] : rhs.terms_) {
            // scalar picked up moving every X power of w1 right past the
            // torus monomial of w2, slot by slot
            std::fill(shift.begin(), shift.end(), 0);
            int sign = 1;
            Word w(nslots);
            for (std::size_t s = 0; s < nslots; ++s) {
                const SlotWord& a = w1[s];
                const SlotWord& b = w2[s];
                for (std::size_t g = 0; g < a.x.size(); ++g) {
                    if (a.x[g] == 0) continue;
                    for (std::size_t m = 0; m < b.torus.size(); ++m) {
                        if (b.torus[m] == 0) continue;
                        const int e = -a.x[g] * b.torus[m];
                        const ExpVec& ce = sig_->comm_exp(s, g, m);
                        for (std::size_t i = 0; i < nvars; ++i) shift[i] += e * ce[i];
                        if (sig_->comm_sign(s, g, m) < 0 && (e & 1)) sign = -sign;
                    }
                }
                SlotWord sw;
                sw.torus.resize(a.torus.size());
                for (std::size_t m = 0; m < a.torus.size(); ++m)
                    sw.torus[m] = a.torus[m] + b.torus[m];
                sw.x.resize(a.x.size());
                for (std::size_t g = 0; g < a.x.size(); ++g) sw.x[g] = a.x[g] + b.x[g];
                w[s] = std::move(sw);
            }
            LaurentPoly c = c1 * c2 * LaurentPoly::monomial(sig_->vars(), shift, sign);
            r.insert_term(std::move(w), std::move(c));
        }
    }
    return r;
}

bool AlgebraElement::operator==(const AlgebraElement& rhs) const {
    require_same_sig(rhs);
    return terms_ == rhs.terms_;
}

AlgebraElement AlgebraElement::scale(const LaurentPoly& c) const {
    require_sig();
    AlgebraElement r = zero(sig_);
    for (const auto& [w, k] : terms_) r.insert_term(w, k * c);
    return r;
}

AlgebraElement AlgebraElement::pow(long k) const {
    require_sig();
    if (k < 0) return inverse().pow(-k);
    AlgebraElement acc = one(sig_);
    AlgebraElement base = *this;
    unsigned long e = static_cast<unsigned long>(k);
    while (e > 0) {
        if (e & 1UL) acc = acc * base;
        base = (e >>= 1UL) ? base * base : base;
    }
    return acc;
}

AlgebraElement AlgebraElement::inverse() const {
    require_sig();
    if (terms_.size() != 1)
        throw std::domain_error("AlgebraElement: inverse of a sum: " + str());
    const auto& [w, c] = *terms_.begin();
    Word nw(w.size());
    for (std::size_t s = 0; s < w.size(); ++s) {
        for (int p : w[s].x)
            if (p != 0)
                throw std::domain_error("AlgebraElement: inverse of a word with X factors: " + str());
        nw[s].x.assign(w[s].x.size(), 0);
        nw[s].torus.resize(w[s].torus.size());
        for (std::size_t m = 0; m < w[s].torus.size(); ++m) nw[s].torus[m] = -w[s].torus[m];
    }
    AlgebraElement r = zero(sig_);
    r.insert_term(std::move(nw), c.inverse());
    return r;
}

AlgebraElement AlgebraElement::subst_coeff(std::string_view name,
                                           const LaurentPoly& replacement) const {
    require_sig();
    AlgebraElement r = zero(sig_);
    for (const auto& [w, c] : terms_) r.insert_term(w, c.substitute(name, replacement));
    return r;
}

AlgebraElement AlgebraElement::subst_coeff_poly(std::string_view name,
                                                const LaurentPoly& replacement) const {
    require_sig();
    AlgebraElement r = zero(sig_);
    for (const auto& [w, c] : terms_) r.insert_term(w, c.substitute_poly(name, replacement));
    return r;
}

AlgebraElement AlgebraElement::div_coeff_exact(const LaurentPoly& divisor) const {
    require_sig();
    AlgebraElement r = zero(sig_);
    for (const auto& [w, c] : terms_) r.insert_term(w, c.div_exact(divisor));
    return r;
}

std::vector<bool> AlgebraElement::support() const {
    require_sig();
    std::vector<bool> sup(sig_->slot_count(), false);
    for (const auto& [w, c] : terms_)
        for (std::size_t s = 0; s < w.size(); ++s)
            if (!w[s].trivial()) sup[s] = true;
    return sup;
}

nlohmann::json AlgebraElement::to_json() const {
    require_sig();
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [w, c] : terms_) {
        nlohmann::json jw = nlohmann::json::array();
        for (const auto& sw : w) jw.push_back({{"torus", sw.torus}, {"x", sw.x}});
        terms.push_back({{"word", std::move(jw)}, {"coeff", c.to_json()}});
    }
    return {{"terms", std::move(terms)}};
}

std::string AlgebraElement::str() const {
    if (!sig_) return "<unset>";
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first_term = true;
    for (const auto& [w, c] : terms_) {
        if (!first_term) os << " + ";
        first_term = false;
        os << "(" << c.str() << ")";
        bool all_trivial = true;
        std::ostringstream ws;
        bool first_slot = true;
        for (std::size_t s = 0; s < w.size(); ++s) {
            if (!first_slot) ws << " (x) ";
            first_slot = false;
            const SlotSpec& sp = sig_->slot(s);
            bool empty = true;
            for (std::size_t m = 0; m < w[s].torus.size(); ++m) {
                if (w[s].torus[m] == 0) continue;
                if (!empty) ws << "*";
                ws << sp.torus[m];
                if (w[s].torus[m] != 1) ws << "^" << w[s].torus[m];
                empty = false;
            }
            for (std::size_t g = 0; g < w[s].x.size(); ++g) {
                if (w[s].x[g] == 0) continue;
                if (!empty) ws << "*";
                ws << sp.xgen[g];
                if (w[s].x[g] != 1) ws << "^" << w[s].x[g];
                empty = false;
            }
            if (empty) ws << "1";
            else all_trivial = false;
        }
        if (!all_trivial) os << " " << ws.str();
    }
    return os.str();
}

AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b) {
    return a * b - b * a;
}

}  // namespace qgauss
