#include "qgauss/climit.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace qgauss {
namespace {

Int binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int b = 1;
    for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

Rat int_pow(const Rat& base, int e) {
    Rat r = 1;
    for (int i = 0; i < e; ++i) r = r * base;
    return r;
}

}  // namespace

ClSignature::ClSignature(std::vector<ClSlotSpec> slots) : slots_(std::move(slots)) {
    if (slots_.empty()) throw std::invalid_argument("ClSignature: need at least one slot");
    for (const auto& s : slots_) {
        if (s.shift.size() != s.xgen.size())
            throw std::invalid_argument("ClSignature: shift table rows must match X count");
        for (const auto& row : s.shift)
            if (row.size() != s.hgen.size())
                throw std::invalid_argument("ClSignature: shift table cols must match H count");
    }
}

std::shared_ptr<const ClSignature> ClSignature::make(std::vector<ClSlotSpec> slots) {
    return std::make_shared<const ClSignature>(std::move(slots));
}

bool ClSignature::operator==(const ClSignature& rhs) const {
    if (slots_.size() != rhs.slots_.size()) return false;
    for (std::size_t s = 0; s < slots_.size(); ++s) {
        const auto& a = slots_[s];
        const auto& b = rhs.slots_[s];
        if (a.name != b.name || a.hgen != b.hgen || a.xgen != b.xgen || a.shift != b.shift)
            return false;
    }
    return true;
}

nlohmann::json ClSignature::to_json() const {
    nlohmann::json slots = nlohmann::json::array();
    for (const auto& s : slots_)
        slots.push_back(
            {{"name", s.name}, {"hgen", s.hgen}, {"xgen", s.xgen}, {"shift", s.shift}});
    return {{"slots", std::move(slots)}};
}

ClSigPtr classical_signature(const SignaturePtr& sig, const std::string& qname) {
    if (!sig) throw std::invalid_argument("classical_signature: null signature");
    const std::size_t qidx = sig->vars()->index(qname);
    std::vector<ClSlotSpec> slots;
    for (std::size_t s = 0; s < sig->slot_count(); ++s) {
        const SlotSpec& sp = sig->slot(s);
        ClSlotSpec c;
        c.name = sp.name;
        for (const auto& t : sp.torus)
            c.hgen.push_back(t.front() == 'K' ? "H~" + t.substr(1) : "h_" + t);
        c.xgen = sp.xgen;
        c.shift.resize(sp.xgen.size());
        for (std::size_t g = 0; g < sp.xgen.size(); ++g)
            for (std::size_t m = 0; m < sp.torus.size(); ++m) {
                const ExpVec& e = sig->comm_exp(s, g, m);
                for (std::size_t i = 0; i < e.size(); ++i)
                    if (i != qidx && e[i] != 0)
                        throw std::domain_error(
                            "classical_signature: commutation scalar is not a power of " + qname);
                if (sig->comm_sign(s, g, m) != 1)
                    throw std::domain_error(
                        "classical_signature: negative commutation scalar has no h=0 limit");
                c.shift[g].push_back(e[qidx]);
            }
        slots.push_back(std::move(c));
    }
    return ClSignature::make(std::move(slots));
}

bool ClSlotWord::trivial() const {
    for (int e : h)
        if (e != 0) return false;
    for (int e : x)
        if (e != 0) return false;
    return true;
}

void ClElement::require_sig() const {
    if (!sig_) throw std::logic_error("ClElement: use of a default-constructed element");
}

void ClElement::require_same_sig(const ClElement& rhs) const {
    require_sig();
    rhs.require_sig();
    if (sig_ != rhs.sig_ && *sig_ != *rhs.sig_)
        throw std::invalid_argument("ClElement: mismatched signatures");
}

void ClElement::insert_term(ClWord w, Rat c) {
    if (c == 0) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(std::move(w), std::move(c));
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ClElement ClElement::zero(ClSigPtr sig) {
    if (!sig) throw std::invalid_argument("ClElement: null signature");
    ClElement e;
    e.sig_ = std::move(sig);
    return e;
}

ClElement ClElement::one(ClSigPtr sig) { return scalar(std::move(sig), 1); }

ClElement ClElement::scalar(ClSigPtr sig, Rat c) {
    ClElement e = zero(std::move(sig));
    ClWord w(e.sig_->slot_count());
    for (std::size_t s = 0; s < e.sig_->slot_count(); ++s) {
        w[s].h.assign(e.sig_->slot(s).hgen.size(), 0);
        w[s].x.assign(e.sig_->slot(s).xgen.size(), 0);
    }
    e.insert_term(std::move(w), std::move(c));
    return e;
}

ClElement ClElement::h_gen(ClSigPtr sig, std::size_t slot, std::size_t m) {
    ClElement e = one(std::move(sig));
    ClWord w = e.terms_.begin()->first;
    w.at(slot).h.at(m) = 1;
    e.terms_.clear();
    e.insert_term(std::move(w), 1);
    return e;
}

ClElement ClElement::x_gen(ClSigPtr sig, std::size_t slot, std::size_t g) {
    ClElement e = one(std::move(sig));
    ClWord w = e.terms_.begin()->first;
    w.at(slot).x.at(g) = 1;
    e.terms_.clear();
    e.insert_term(std::move(w), 1);
    return e;
}

ClElement ClElement::make(ClSigPtr sig, ClWord w, Rat c) {
    ClElement e = zero(std::move(sig));
    if (w.size() != e.sig_->slot_count())
        throw std::invalid_argument("ClElement: word has the wrong slot count");
    for (std::size_t s = 0; s < w.size(); ++s) {
        if (w[s].h.size() != e.sig_->slot(s).hgen.size() ||
            w[s].x.size() != e.sig_->slot(s).xgen.size())
            throw std::invalid_argument("ClElement: slot word has the wrong shape");
        for (int p : w[s].h)
            if (p < 0) throw std::invalid_argument("ClElement: negative H power");
        for (int p : w[s].x)
            if (p < 0) throw std::invalid_argument("ClElement: negative X power");
    }
    e.insert_term(std::move(w), std::move(c));
    return e;
}

ClElement ClElement::operator-() const {
    require_sig();
    ClElement r = zero(sig_);
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

ClElement ClElement::operator+(const ClElement& rhs) const {
    require_same_sig(rhs);
    ClElement r = *this;
    for (const auto& [w, c] : rhs.terms_) r.insert_term(w, c);
    return r;
}

ClElement ClElement::operator-(const ClElement& rhs) const { return *this + (-rhs); }

ClElement ClElement::operator*(const ClElement& rhs) const {
    require_same_sig(rhs);
    ClElement r = zero(sig_);
    const std::size_t slots = sig_->slot_count();

    for (const auto& [w1, c1] : terms_) {
        for (const auto& [w2, c2] : rhs.terms_) {
            // Partial words with their accumulated coefficients; each slot
            // appends its own binomial expansion of X^r H^a = (H - rc)^a X^r.
            std::vector<std::pair<ClWord, Rat>> acc = {{ClWord{}, c1 * c2}};
            for (std::size_t s = 0; s < slots; ++s) {
                const ClSlotSpec& sp = sig_->slot(s);
                const ClSlotWord& a = w1[s];
                const ClSlotWord& b = w2[s];

                std::vector<std::pair<ClSlotWord, Rat>> local = {
                    {ClSlotWord{a.h, {}}, Rat(1)}};
                for (std::size_t m = 0; m < sp.hgen.size(); ++m) {
                    Rat shift = 0;
                    for (std::size_t g = 0; g < sp.xgen.size(); ++g)
                        shift += Rat(a.x[g]) * sp.shift[g][m];
                    std::vector<std::pair<ClSlotWord, Rat>> next;
                    for (const auto& [sw, sc] : local) {
                        for (int k = 0; k <= b.h[m]; ++k) {
                            ClSlotWord nw = sw;
                            nw.h[m] += k;
                            next.emplace_back(std::move(nw),
                                              sc * Rat(binom(b.h[m], k)) *
                                                  int_pow(-shift, b.h[m] - k));
                        }
                    }
                    local = std::move(next);
                }
                for (auto& [sw, sc] : local) {
                    sw.x = a.x;
                    for (std::size_t g = 0; g < sp.xgen.size(); ++g) sw.x[g] += b.x[g];
                }

                std::vector<std::pair<ClWord, Rat>> merged;
                merged.reserve(acc.size() * local.size());
                for (const auto& [pw, pc] : acc)
                    for (const auto& [sw, sc] : local) {
                        if (sc == 0) continue;
                        ClWord nw = pw;
                        nw.push_back(sw);
                        merged.emplace_back(std::move(nw), pc * sc);
                    }
                acc = std::move(merged);
            }
            for (auto& [w, c] : acc) r.insert_term(std::move(w), std::move(c));
        }
    }
    return r;
}

bool ClElement::operator==(const ClElement& rhs) const {
    require_same_sig(rhs);
    return terms_ == rhs.terms_;
}

ClElement ClElement::scale(const Rat& c) const {
    require_sig();
    ClElement r = zero(sig_);
    if (c == 0) return r;
    for (const auto& [w, coeff] : terms_) r.terms_.emplace(w, coeff * c);
    return r;
}

nlohmann::json ClElement::to_json() const {
    require_sig();
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [w, c] : terms_) {
        nlohmann::json jw = nlohmann::json::array();
        for (const auto& sw : w) jw.push_back({{"h", sw.h}, {"x", sw.x}});
        terms.push_back({{"word", std::move(jw)}, {"coeff", rat_str(c)}});
    }
    return {{"terms", std::move(terms)}};
}

std::string ClElement::str() const {
    if (!sig_) return "<unset>";
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first_term = true;
    for (const auto& [w, c] : terms_) {
        if (!first_term) os << " + ";
        first_term = false;
        os << "(" << rat_str(c) << ")";
        bool all_trivial = true;
        std::ostringstream ws;
        bool first_slot = true;
        for (std::size_t s = 0; s < w.size(); ++s) {
            if (!first_slot) ws << " (x) ";
            first_slot = false;
            const ClSlotSpec& sp = sig_->slot(s);
            bool empty = true;
            for (std::size_t m = 0; m < w[s].h.size(); ++m) {
                if (w[s].h[m] == 0) continue;
                if (!empty) ws << "*";
                ws << sp.hgen[m];
                if (w[s].h[m] != 1) ws << "^" << w[s].h[m];
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

ClElement commutator(const ClElement& a, const ClElement& b) { return a * b - b * a; }

ClMatrix::ClMatrix(ClSigPtr sig, std::size_t rows, std::size_t cols)
    : sig_(std::move(sig)), rows_(rows), cols_(cols) {
    if (!sig_) throw std::invalid_argument("ClMatrix: null signature");
    if (rows_ == 0 || cols_ == 0) throw std::invalid_argument("ClMatrix: empty dimensions");
    a_.assign(rows_ * cols_, ClElement::zero(sig_));
}

bool ClMatrix::operator==(const ClMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) return false;
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != rhs.a_[i]) return false;
    return true;
}

nlohmann::json ClMatrix::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < rows_; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < cols_; ++j) row.push_back(at(i, j).to_json());
        rows.push_back(std::move(row));
    }
    return {{"rows", rows_}, {"cols", cols_}, {"entries", std::move(rows)}};
}

}  // namespace qgauss
