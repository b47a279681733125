#include "segrecalc/monomial.hpp"

namespace segrecalc {

int TermOrder::compare_grevlex_range(const Monomial& a, const Monomial& b, int lo, int hi) {
    std::uint32_t da = 0, db = 0;
    for (int i = lo; i < hi; ++i) {
        da += a.exponent(i);
        db += b.exponent(i);
    }
    if (da != db) return da < db ? -1 : 1;
    // Equal degree: the monomial with the smaller exponent at the rightmost
    // difference is the larger one.
    for (int i = hi - 1; i >= lo; --i) {
        std::uint16_t ea = a.exponent(i), eb = b.exponent(i);
        if (ea != eb) return ea < eb ? 1 : -1;
    }
    return 0;
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
    const int n = a.nvars();
    switch (kind_) {
        case Kind::Grevlex:
            return compare_grevlex_range(a, b, 0, n);
        case Kind::Lex:
            for (int i = 0; i < n; ++i) {
                std::uint16_t ea = a.exponent(i), eb = b.exponent(i);
                if (ea != eb) return ea < eb ? -1 : 1;
            }
            return 0;
        case Kind::Block: {
            int c = compare_grevlex_range(a, b, 0, block_);
            if (c != 0) return c;
            return compare_grevlex_range(a, b, block_, n);
        }
    }
    return 0;
}

const char* TermOrder::name() const {
    switch (kind_) {
        case Kind::Grevlex: return "grevlex";
        case Kind::Lex: return "lex";
        case Kind::Block: return "block-elimination";
    }
    return "?";
}

}  // namespace segrecalc
