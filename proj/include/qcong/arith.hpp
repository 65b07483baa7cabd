#pragma once

#include "qcong/check.hpp"
#include "qcong/ints.hpp"

#include <vector>

namespace qcong {

// A value p^v * u with u a unit modulo p^t (or zero). Multiplication adds
// valuations and multiplies units; division cancels them. The represented
// value is known modulo p^{t+v}.
struct ValuedResidue {
    long long p = 0;
    int t = 0;
    bool zero = false;
    long long v = 0;
    Int u = 1;
};

// Streams C(2k, k+d) for k = |d|, |d|+1, ... as ValuedResidues at precision t:
// the step multiplies by (2k+1)(2k+2) and divides by (k+1+d)(k+1-d), each
// factored into p-power times unit. Terms with k < |d| vanish.
class BinomTracker {
public:
    BinomTracker(long long p, int t, long long d = 0);

    long long k() const noexcept { return k_; }
    const ValuedResidue& value() const noexcept { return vr_; }
    void advance();

    // Represented value mod p^T; requires T <= t.
    Int residue(int T) const;

private:
    long long d_;
    long long k_;
    Int pt_;
    ValuedResidue vr_;

    void mul_factor(long long x);
    void div_factor(long long x);
};

Int valued_residue_mod(const ValuedResidue& vr, int T);

// Exact C(2k, k), k = 0, 1, ... by the integer recurrence; the cross-check
// oracle for the tracker and the workhorse for composite moduli.
class ExactCentralStream {
public:
    long long k() const noexcept { return k_; }
    const Int& value() const noexcept { return c_; }
    void advance();

private:
    long long k_ = 0;
    Int c_ = 1;
};

// Per-m agreement report between the two primality-criterion sums and actual
// primality of 4m-1 / 4m+1.
struct PrimalitySweepReport {
    long long m_max = 0;
    long long checked = 0;
    long long skipped = 0;
    long long disagreements = 0;
    std::vector<CheckResult> results;
};

PrimalitySweepReport sweep_primality_criterion(long long m_max);

// The integer-side check registry (st-*, ssz, newconj2, conj*).
std::vector<RegEntry> integer_checks();

} // namespace qcong
