#include "cfalg/rational.hpp"

#include <cctype>
#include <ostream>

#include "cfalg/errors.hpp"

namespace cfalg {

namespace {

Integer parse_integer(const std::string& text) {
    if (text.empty()) throw ParseError("empty integer in rational literal");
    std::size_t start = (text[0] == '+' || text[0] == '-') ? 1 : 0;
    if (start == text.size()) throw ParseError("sign without digits in rational literal");
    for (std::size_t i = start; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError("invalid rational literal: '" + text + "'");
    }
    Integer magnitude(text.substr(start), 10);
    return text[0] == '-' ? Integer(-magnitude) : magnitude;
}

}  // namespace

Rational::Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw BuildError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    std::size_t begin = text.find_first_not_of(" \t");
    std::size_t end = text.find_last_not_of(" \t");
    if (begin == std::string::npos) throw ParseError("empty rational literal");
    std::string body = text.substr(begin, end - begin + 1);

    std::size_t slash = body.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(body), Integer(1));
    Integer num = parse_integer(body.substr(0, slash));
    Integer den = parse_integer(body.substr(slash + 1));
    if (den == 0) throw ParseError("rational literal with zero denominator: '" + body + "'");
    return Rational(num, den);
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::inverse() const {
    if (is_zero()) throw BuildError("inverse of zero");
    mpq_class inv = 1 / v_;
    return Rational(std::move(inv));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw BuildError("division by zero");
    v_ /= o.v_;
    return *this;
}

Rational operator-(const Rational& a) {
    mpq_class neg = -a.v_;
    return Rational(std::move(neg));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace cfalg
