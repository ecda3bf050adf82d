#pragma once

namespace spseq {

// Kahan compensated accumulator. Keeps the absolute rounding error of a
// long sum near one ulp of the result instead of growing with the term count.
class KahanSum {
public:
    void add(double v) {
        const double y = v - compensation_;
        const double t = sum_ + y;
        compensation_ = (t - sum_) - y;
        sum_ = t;
    }

    KahanSum& operator+=(double v) {
        add(v);
        return *this;
    }

    double value() const { return sum_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

}  // namespace spseq
