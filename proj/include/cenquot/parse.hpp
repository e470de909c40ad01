#ifndef CENQUOT_PARSE_HPP
#define CENQUOT_PARSE_HPP

#include <cctype>
#include <string>
#include <string_view>

#include "cenquot/ring.hpp"

namespace cenquot {

// Text grammar shared by the CLI and fixtures:
//   expression := term (('+'|'-') term)*
//   term       := integer ('*'? var ('^' natural)?)* | var ('^' natural)?
//   var        := 'x' | 'y'
// Whitespace is ignored.  Examples: "24x^5+8x^4+4x^2", "40x^3", "-7".
class PolynomialParser {
  public:
    PolynomialParser(std::string_view text, RingDescriptor ring) : text_(text), ring_(ring) {}

    UfdElement parse() {
        UfdElement out(ring_);
        skip_ws();
        if (at_end()) throw parse_error("empty expression", pos_);
        bool negative = consume_sign();
        out = out + parse_term(negative);
        while (true) {
            skip_ws();
            if (at_end()) break;
            char c = text_[pos_];
            if (c != '+' && c != '-') throw parse_error(std::string("expected '+' or '-', got '") + c + "'", pos_);
            ++pos_;
            out = out + parse_term(c == '-');
        }
        return out;
    }

  private:
    std::string_view text_;
    RingDescriptor ring_;
    std::size_t pos_ = 0;

    bool at_end() const { return pos_ >= text_.size(); }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool consume_sign() {
        skip_ws();
        if (!at_end() && (text_[pos_] == '+' || text_[pos_] == '-')) {
            bool neg = text_[pos_] == '-';
            ++pos_;
            return neg;
        }
        return false;
    }

    UfdElement parse_term(bool negative) {
        skip_ws();
        if (at_end()) throw parse_error("expected term", pos_);
        Int coeff = 1;
        bool saw_any = false;
        if (std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            coeff = parse_natural();
            saw_any = true;
        }
        Mono mono;
        while (true) {
            skip_ws();
            std::size_t before = pos_;
            if (!at_end() && text_[pos_] == '*') {
                ++pos_;
                skip_ws();
            }
            if (at_end() || (text_[pos_] != 'x' && text_[pos_] != 'y')) {
                pos_ = before;
                break;
            }
            char var = text_[pos_++];
            unsigned e = 1;
            skip_ws();
            if (!at_end() && text_[pos_] == '^') {
                ++pos_;
                skip_ws();
                if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    throw parse_error("expected exponent after '^'", pos_);
                Int n = parse_natural();
                if (n > 64) throw parse_error("exponent too large", pos_);
                e = static_cast<unsigned>(n);
            }
            if (var == 'x')
                mono.dx += e;
            else
                mono.dy += e;
            saw_any = true;
        }
        if (!saw_any) throw parse_error("expected integer or variable", pos_);
        if (mono.dy > 0 && !ring_.bivariate())
            throw parse_error("variable 'y' not available in " + ring_.name(), pos_);
        if (mono.dx > 0 && ring_.kind == RingKind::Integers)
            throw parse_error("variable 'x' not available in Z", pos_);
        return UfdElement::term(ring_, negative ? -coeff : coeff, mono);
    }

    Int parse_natural() {
        Int v = 0;
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        if (pos_ == start) throw parse_error("expected number", pos_);
        return v;
    }
};

inline UfdElement parse_element(std::string_view text, const RingDescriptor& ring) {
    return PolynomialParser(text, ring).parse();
}

}  // namespace cenquot

#endif
