#include "format.hpp"

#include <sstream>

namespace dictlp::cli {

std::string variable_name(Side side, std::size_t index) {
    return (side == Side::Primal ? "x" : "y") + std::to_string(index);
}

namespace {

// Appends "<constant><terms>" where the constant is skipped if `omit_zero`
// holds and it is zero with at least one nonzero term present.
void write_affine(std::ostream& os, Side side, const Rational& constant, const std::vector<Rational>& coefs,
                  const std::vector<std::size_t>& vars, bool omit_zero) {
    bool any_term = false;
    for (const auto& c : coefs) any_term = any_term || !c.is_zero();

    bool first = true;
    if (!(omit_zero && constant.is_zero() && any_term)) {
        os << constant;
        first = false;
    }
    for (std::size_t k = 0; k < coefs.size(); ++k) {
        const Rational& c = coefs[k];
        if (c.is_zero()) continue;
        if (first)
            os << (c.is_negative() ? "-" : "");
        else
            os << (c.is_negative() ? " - " : " + ");
        const Rational mag = c.abs();
        if (mag != Rational(1)) os << mag;
        os << variable_name(side, vars[k]);
        first = false;
    }
}

}  // namespace

std::string format_dictionary(const Dictionary& d) {
    std::ostringstream os;
    const Side side = d.side();
    std::vector<Rational> coefs(d.cols());
    for (std::size_t r = 0; r < d.rows(); ++r) {
        for (std::size_t k = 0; k < d.cols(); ++k) coefs[k] = -d.coefficients()(r, k);
        os << variable_name(side, d.basis()[r]) << " = ";
        write_affine(os, side, d.constants()[r], coefs, d.nonbasis(), false);
        os << '\n';
    }
    os << (side == Side::Primal ? "z" : "-w") << " = ";
    write_affine(os, side, d.objective_value(), std::vector<Rational>(d.objective().begin(), d.objective().end()),
                 d.nonbasis(), true);
    os << '\n';
    return os.str();
}

}  // namespace dictlp::cli
