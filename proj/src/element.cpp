#include "bsk/element.hpp"

#include <sstream>

namespace bsk {

void Element::add(const Word& w, const RatFunc& coeff) {
    if (w.strands() != n_) throw std::invalid_argument("Element::add: strand count mismatch");
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Element Element::operator-() const {
    Element r(n_);
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

Element& Element::operator+=(const Element& o) {
    if (n_ != o.n_) throw std::invalid_argument("Element sum: strand count mismatch");
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    if (n_ != o.n_) throw std::invalid_argument("Element difference: strand count mismatch");
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

Element operator*(const Element& a, const Element& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("Element product: strand count mismatch");
    Element r(a.n_);
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) r.add(wa * wb, ca * cb);
    return r;
}

Element Element::scaled(const RatFunc& r) const {
    Element out(n_);
    if (r.is_zero()) return out;
    for (const auto& [w, c] : terms_) out.terms_.emplace(w, c * r);
    return out;
}

std::string Element::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (c.is_one() && !w.empty()) {
            os << w.to_string();
        } else {
            os << c.to_string() << " * " << w.to_string();
        }
    }
    return os.str();
}

SubstImages identity_images(int n) {
    SubstImages s;
    s.images[kX1] = Word(n, {kX1});
    s.images[kY1] = Word(n, {kY1});
    for (int i = 1; i <= n - 1; ++i) s.images[sigma_letter(i)] = Word(n, {sigma_letter(i)});
    return s;
}

Word substitute(const Word& w, const SubstImages& images) {
    std::vector<Letter> out;
    for (Letter l : w.letters()) {
        Letter pos = l > 0 ? l : static_cast<Letter>(-l);
        auto it = images.images.find(pos);
        if (it == images.images.end())
            throw std::invalid_argument("substitute: missing image for a generator");
        Word img = l > 0 ? it->second : it->second.inverse();
        out.insert(out.end(), img.letters().begin(), img.letters().end());
    }
    return Word(w.strands(), std::move(out));
}

Element substitute(const Element& e, const SubstImages& images) {
    Element r(e.strands());
    for (const auto& [w, c] : e.terms()) r.add(substitute(w, images), c);
    return r;
}

}  // namespace bsk
