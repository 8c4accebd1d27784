#include "pnn/rational.h"
#include "pnn/point.h"

#include <cctype>
#include <cstdlib>

namespace pnn {

std::optional<Coordinate> parse_decimal(const std::string& text) {
    if (text.empty()) return std::nullopt;
    std::size_t i = 0;
    bool neg = false;
    if (text[i] == '+' || text[i] == '-') {
        neg = text[i] == '-';
        ++i;
    }
    std::string intpart, fracpart;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        intpart.push_back(text[i++]);
    if (i < text.size() && text[i] == '.') {
        ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            fracpart.push_back(text[i++]);
    }
    if (i != text.size()) return std::nullopt;
    if (intpart.empty() && fracpart.empty()) return std::nullopt;

    mpz_class num(intpart.empty() ? std::string("0") : intpart);
    mpz_class den(1);
    for (char c : fracpart) {
        num *= 10;
        num += c - '0';
        den *= 10;
    }
    Coordinate v(num, den);
    v.canonicalize();
    if (neg) v = -v;
    return v;
}

std::string decimal_string(const Coordinate& v) {
    mpz_class num = v.get_num();
    mpz_class den = v.get_den();
    if (den == 1) return num.get_str();

    // Strip factors of 2 and 5; if anything else remains, fall back to n/d.
    mpz_class d = den;
    unsigned twos = 0, fives = 0;
    while (mpz_divisible_ui_p(d.get_mpz_t(), 2)) {
        d /= 2;
        ++twos;
    }
    while (mpz_divisible_ui_p(d.get_mpz_t(), 5)) {
        d /= 5;
        ++fives;
    }
    if (d != 1) return num.get_str() + "/" + den.get_str();

    unsigned k = twos > fives ? twos : fives;
    for (unsigned i = fives; i < k; ++i) num *= 5;
    for (unsigned i = twos; i < k; ++i) num *= 2;
    bool neg = num < 0;
    if (neg) num = -num;
    std::string digits = num.get_str();
    if (digits.size() <= k) digits.insert(0, k + 1 - digits.size(), '0');
    std::string out = digits.substr(0, digits.size() - k) + "." + digits.substr(digits.size() - k);
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
    return neg ? "-" + out : out;
}

double approx(const Coordinate& v) { return v.get_d(); }

bool fits_int64(const Coordinate& v, std::int64_t& out) {
    if (v.get_den() != 1) return false;
    const mpz_class& n = v.get_num();
    if (!n.fits_slong_p()) return false;
    long l = n.get_si();
    out = static_cast<std::int64_t>(l);
    return true;
}

bool nearer(const ExactPoint& q, const ExactPoint& a, const ExactPoint& b) {
    Coordinate da = dist2(q, a);
    Coordinate db = dist2(q, b);
    int c = cmp(da, db);
    if (c != 0) return c < 0;
    return a < b;
}

}  // namespace pnn
