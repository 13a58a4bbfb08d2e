#pragma once

#include <cstdint>
#include <stdexcept>

namespace bsk {

/// Prime-field scalar for the fast modular equality pre-check. Carries its
/// modulus so values stay self-contained; mixing moduli is a logic error.
class Fp {
  public:
    Fp() : v_(0), p_(0) {}
    Fp(std::uint64_t v, std::uint64_t p) : v_(v % p), p_(p) {}

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    friend Fp operator+(Fp a, Fp b) {
        a.check(b);
        a.v_ = (a.v_ + b.v_) % a.p_;
        return a;
    }
    friend Fp operator-(Fp a, Fp b) {
        a.check(b);
        a.v_ = (a.v_ + a.p_ - b.v_) % a.p_;
        return a;
    }
    friend Fp operator*(Fp a, Fp b) {
        a.check(b);
        a.v_ = static_cast<std::uint64_t>((static_cast<__uint128_t>(a.v_) * b.v_) % a.p_);
        return a;
    }
    Fp operator-() const { return Fp(p_ - v_, p_); }
    Fp inv() const {
        if (v_ == 0) throw std::domain_error("Fp: inverse of zero");
        return pow(p_ - 2);
    }
    friend Fp operator/(Fp a, Fp b) { return a * b.inv(); }
    Fp pow(std::uint64_t e) const {
        Fp r(1, p_), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }
    Fp pow_signed(long e) const { return e >= 0 ? pow(e) : inv().pow(-e); }

    friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_ && a.p_ == b.p_; }

  private:
    void check(const Fp& o) const {
        if (p_ != o.p_) throw std::logic_error("Fp: modulus mismatch");
    }
    std::uint64_t v_;
    std::uint64_t p_;
};

}  // namespace bsk
