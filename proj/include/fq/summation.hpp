#pragma once

namespace fq {

// Kahan compensated accumulator.
class KahanSum {
public:
    void add(double x)
    {
        const double y = x - comp_;
        const double t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }

    KahanSum &operator+=(double x)
    {
        add(x);
        return *this;
    }

    double value() const { return sum_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

} // namespace fq
