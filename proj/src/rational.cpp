#include "autoseq/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace autoseq {

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    q_ = mpq_class(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
    q_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    mpq_class q;
    if (text.empty() || q.set_str(text, 10) != 0) throw std::invalid_argument("malformed rational '" + text + "'");
    if (q.get_den() == 0) throw std::invalid_argument("malformed rational '" + text + "'");
    q.canonicalize();
    return Rational(q);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    q_ /= o.q_;
    return *this;
}

std::int64_t Rational::to_int64() const {
    if (!is_integer()) throw std::domain_error("rational " + str() + " is not an integer");
    const mpz_class& n = q_.get_num();
    if (!n.fits_slong_p()) throw std::overflow_error("rational " + str() + " does not fit in 64 bits");
    return n.get_si();
}

std::string Rational::str() const { return q_.get_num().get_str() + "/" + q_.get_den().get_str(); }

std::ostream& operator<<(std::ostream& out, const Rational& r) { return out << r.str(); }

}  // namespace autoseq
