#pragma once

// The relation-checking suite.  Each check expands one family of asserted
// identities to canonical form and reports the exact residual: either every
// part is identically zero or the report carries the location and canonical
// form of the first nonzero entry.  There are no tolerances anywhere; a
// check passes exactly when its residuals vanish as elements of the slot
// algebra.

#include <functional>

#include "qgauss/jimbo.hpp"

namespace qgauss {

// Result of one check.  `residual` holds a "parts" array, one object per
// relation in the family: {"name", "zero"} when the part vanished, plus
// "row"/"col"/"entry" (or just "entry" for element-valued parts) when it did
// not.  Wall time is measured but deliberately kept out of the serialized
// form so that identical jobs serialize to identical bytes; callers that
// want timings read the field directly.
struct VerificationReport {
    std::string check;
    int n = 0;
    nlohmann::json bindings = nlohmann::json::object();
    nlohmann::json residual = nlohmann::json::object();
    bool pass = false;
    double wall_ms = 0.0;  // not serialized

    nlohmann::json to_json() const;
    static VerificationReport from_json(const nlohmann::json& j);

    bool operator==(const VerificationReport& rhs) const {
        return check == rhs.check && n == rhs.n && bindings == rhs.bindings &&
               residual == rhs.residual && pass == rhs.pass;
    }
};

// R T_1 T_2 = T_2 T_1 R for one matrix.
VerificationReport check_rtt(const RMatrix& r, const OpMatrix& t);

// The five Gauss-generator families: same-sign RTT for both triangular
// factors (raw and with the identified diagonal), the three R_d relations
// of the mixed and diagonal factors, and entrywise commutation of the
// unipotent factors.  R_d comes from derived_parts(r).
VerificationReport check_gauss(const RMatrix& r, const GaussTriple& triple);

// q-commutation and Serre cubics for the simple-root entries t^(+)_{i,i+1}
// and t^(-)_{i+1,i}.  The usual statement leaves the sign pairing in
// "q^(+-2) for j = i +- 1" implicit; the resolved pairing (j = i+1 takes
// the upper sign in both the commutation rule and the Serre cubic) is
// recorded in the report.  Requires n >= 3; below that the family is empty.
VerificationReport check_serre_and_qcomm(const GaussTriple& triple);

// qdet(T) = 1 and the product of either diagonal equal to 1.
VerificationReport check_qdet_and_diagonal(const GaussTriple& triple);

// Inverses of the triangular factors.  An invertible RTT matrix's inverse
// satisfies the order-swapped relation R S_2 S_1 = S_1 S_2 R with the same
// R, which is the plain relation for the flip-conjugated grid; the check
// expands that form and the report names it explicitly.
VerificationReport check_inverse_relations(const GaussTriple& triple, const RMatrix& r);

// Number of worker threads the suite uses: QGAUSS_THREADS when set to a
// positive integer, otherwise the hardware concurrency, never less than 1.
int suite_threads();

// Runs independent checks concurrently and returns their reports in
// submission order, so aggregation is deterministic regardless of
// scheduling.  A check that throws has its exception rethrown after all
// workers finish, again picking the first failure in submission order.
using CheckFn = std::function<VerificationReport()>;
std::vector<VerificationReport> run_suite(const std::vector<CheckFn>& checks);

}  // namespace qgauss
