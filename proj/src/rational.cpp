#include "grsk/rational.hpp"

namespace grsk {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational: division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::from_string(std::string_view s) {
    // Accept "p", "p/q" and, as a convenience for hand-written inputs,
    // plain integers with surrounding whitespace.
    size_t begin = s.find_first_not_of(" \t");
    size_t end = s.find_last_not_of(" \t");
    if (begin == std::string_view::npos) throw std::invalid_argument("rational: empty string");
    std::string text(s.substr(begin, end - begin + 1));

    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("rational: cannot parse '" + text + "'");
    if (q.get_den() == 0) throw std::invalid_argument("rational: zero denominator in '" + text + "'");
    q.canonicalize();
    return Rational(std::move(q));
}

std::string Rational::to_string() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    bool invert = e < 0;
    unsigned long k = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    if (invert && base.is_zero()) throw std::domain_error("rational: 0 to negative power");
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.q_.get_num().get_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), base.q_.get_den().get_mpz_t(), k);
    mpq_class out(num, den);
    out.canonicalize();
    Rational r(std::move(out));
    if (invert) return Rational(1) / r;
    return r;
}

}  // namespace grsk
