#pragma once

// Text formats used by the command line.
//
// Schwartz-Bruhat functions, one directive per line (';' also separates):
//
//   term <C>                               start an elementary term C * (...)
//   real <degree> <c>                      add c e^{-pi x^2} H_degree(x sqrt(2 pi))
//   ball <p> <coef> <center> <k> [<freq>]  add coef chi_p(freq x) 1_{center + p^k Z_p}
//   end                                    optional terminator
//
// Complex numbers are "re" or "re,im"; p-adic coefficients are exact:
// "q" or "q@phase" for q e^{2 pi i phase}. Named shortcuts: "vacuum",
// "state:<n>".

#include <string>
#include <string_view>

#include "adelic/bruhat.hpp"

namespace adelic {

Complex parseComplex(std::string_view text);
Cyclotomic parseCoefficient(std::string_view text);
SchwartzBruhat parseSchwartzBruhat(std::string_view text);
std::string formatSchwartzBruhat(const SchwartzBruhat& phi);

/// Shortest form with 15 significant digits: "a+bi" or "a-bi".
std::string formatComplex(Complex z);
std::string formatReal(double x);

}  // namespace adelic
