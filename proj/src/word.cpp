#include "bsk/word.hpp"

#include <sstream>
#include <stdexcept>

namespace bsk {

std::vector<Letter> free_reduce(const std::vector<Letter>& raw) {
    std::vector<Letter> out;
    out.reserve(raw.size());
    for (Letter l : raw) {
        if (l == 0) throw std::invalid_argument("word letter code 0");
        if (!out.empty() && out.back() == static_cast<Letter>(-l))
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

void check_letters(int n, const std::vector<Letter>& letters) {
    for (Letter l : letters) {
        Letter a = l > 0 ? l : static_cast<Letter>(-l);
        if (a == 0 || a > static_cast<Letter>(1 + n))
            throw std::out_of_range("word letter out of range for strand count");
    }
}

Word::Word(int n, std::vector<Letter> letters) : n_(n), letters_(free_reduce(letters)) {
    check_letters(n, letters_);
}

Word Word::inverse() const {
    std::vector<Letter> inv(letters_.rbegin(), letters_.rend());
    for (Letter& l : inv) l = static_cast<Letter>(-l);
    Word w;
    w.n_ = n_;
    w.letters_ = std::move(inv);  // already reduced
    return w;
}

Word operator*(const Word& a, const Word& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("word product: strand count mismatch");
    std::vector<Letter> cat = a.letters_;
    cat.insert(cat.end(), b.letters_.begin(), b.letters_.end());
    Word w;
    w.n_ = a.n_;
    w.letters_ = free_reduce(cat);
    return w;
}

Word gen_xy(int i, XY which, int n) {
    if (i < 1 || i > n) throw std::out_of_range("gen_xy: index out of range");
    std::vector<Letter> w{which == XY::x ? kX1 : kY1};
    for (int k = 1; k < i; ++k) {
        Letter s = sigma_letter(k);
        if (which == XY::x) s = static_cast<Letter>(-s);
        w.insert(w.begin(), s);
        w.push_back(s);
    }
    return Word(n, std::move(w));
}

Word named_word(NamedWord which, int n, int i) {
    std::vector<Letter> w;
    switch (which) {
        case NamedWord::P:
            for (int k = n - 1; k >= 1; --k) w.push_back(static_cast<Letter>(-sigma_letter(k)));
            w.insert(w.end(), {kX1, kY1, static_cast<Letter>(-kX1), static_cast<Letter>(-kY1)});
            for (int k = 1; k <= n - 1; ++k) w.push_back(static_cast<Letter>(-sigma_letter(k)));
            break;
        case NamedWord::beta_n:
            for (int k = 1; k <= n - 1; ++k) w.push_back(sigma_letter(k));
            for (int k = n - 1; k >= 1; --k) w.push_back(sigma_letter(k));
            break;
        case NamedWord::delta_i:
            if (i < 1 || i > n) throw std::out_of_range("delta_i: index out of range");
            for (int k = i - 1; k >= 1; --k) w.push_back(sigma_letter(k));
            for (int k = 1; k <= i - 1; ++k) w.push_back(sigma_letter(k));
            break;
        case NamedWord::commutator_x1y1:
            w = {kX1, kY1, static_cast<Letter>(-kX1), static_cast<Letter>(-kY1)};
            break;
    }
    return Word(n, std::move(w));
}

std::string Word::to_string() const {
    if (letters_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (Letter l : letters_) {
        if (!first) os << " ";
        first = false;
        Letter a = l > 0 ? l : static_cast<Letter>(-l);
        if (a == kX1) os << "x1";
        else if (a == kY1) os << "y1";
        else os << "s" << sigma_index(a);
        if (l < 0) os << "^-1";
    }
    return os.str();
}

Word parse_word(const std::string& text, int n) {
    std::istringstream is(text);
    std::vector<Letter> letters;
    std::string tok;
    while (is >> tok) {
        if (tok == "1") continue;
        int power = 1;
        auto caret = tok.find('^');
        std::string base = tok;
        if (caret != std::string::npos) {
            base = tok.substr(0, caret);
            power = std::stoi(tok.substr(caret + 1));
        }
        Letter code;
        if (base == "x1") code = kX1;
        else if (base == "y1") code = kY1;
        else if (base.size() >= 2 && base[0] == 's') code = sigma_letter(std::stoi(base.substr(1)));
        else throw std::invalid_argument("unknown word token: " + tok);
        if (power == 0) continue;
        Letter l = power > 0 ? code : static_cast<Letter>(-code);
        for (int k = 0; k < (power > 0 ? power : -power); ++k) letters.push_back(l);
    }
    return Word(n, std::move(letters));
}

}  // namespace bsk
