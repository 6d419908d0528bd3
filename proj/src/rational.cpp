#include "cy3check/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace cy3 {

ZZ floor_z(const QQ& q) {
    ZZ out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return out;
}

ZZ ceil_z(const QQ& q) {
    ZZ out;
    mpz_cdiv_q(out.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return out;
}

ZZ round_half_into(const QQ& q) {
    // ceil(q - 1/2): unique n with q - n in (-1/2, 1/2].
    return ceil_z(q - QQ(1, 2));
}

QQ parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    // Accept an optional sign, digits, optionally "/" and more digits.
    std::size_t i = 0;
    auto digits_from = [&](std::size_t start) {
        std::size_t j = start;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        return j;
    };
    if (text[i] == '+' || text[i] == '-') ++i;
    std::size_t num_end = digits_from(i);
    if (num_end == i) throw std::invalid_argument("malformed rational literal: " + text);
    if (num_end != text.size()) {
        if (text[num_end] != '/') throw std::invalid_argument("malformed rational literal: " + text);
        std::size_t den_start = num_end + 1;
        std::size_t den_end = digits_from(den_start);
        if (den_end == den_start || den_end != text.size())
            throw std::invalid_argument("malformed rational literal: " + text);
    }
    QQ value;
    // GMP's reader does not take a leading '+'.
    const std::string body = (text[0] == '+') ? text.substr(1) : text;
    if (value.set_str(body, 10) != 0) throw std::invalid_argument("malformed rational literal: " + text);
    if (value.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    value.canonicalize();
    return value;
}

std::string format_rational(const QQ& q) {
    return q.get_str();
}

bool is_integer(const QQ& q) {
    return q.get_den() == 1;
}

ZZ to_integer(const QQ& q) {
    if (!is_integer(q)) throw std::invalid_argument("expected an integer, got " + format_rational(q));
    return q.get_num();
}

ZZ floor_div_step(const QQ& q, const QQ& step) {
    if (step <= 0) throw std::invalid_argument("step must be positive");
    return floor_z(q / step);
}

ZZ ceil_div_step(const QQ& q, const QQ& step) {
    if (step <= 0) throw std::invalid_argument("step must be positive");
    return ceil_z(q / step);
}

QQ abs_q(const QQ& q) {
    return q < 0 ? QQ(-q) : q;
}

}  // namespace cy3
