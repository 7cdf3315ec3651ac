#pragma once

#include <string>

#include "toric/fan.hpp"
#include "toric/group.hpp"
#include "toric/hori_vafa.hpp"
#include "toric/lg.hpp"
#include "toric/polytope.hpp"
#include "toric/state_space.hpp"

namespace toric {

// Exact JSON serialization: integers travel as numbers (strings once they
// outgrow 64 bits), rationals always as "p/q" strings. Readers accept both
// forms and throw ParseError on malformed documents. Output key order is
// deterministic.

std::string polynomial_to_json(const InvertiblePolynomial& w);
InvertiblePolynomial polynomial_from_json(const std::string& text);

std::string group_to_json(const DiagonalGroup& g);

std::string superpotential_to_json(const LaurentSuperpotential& w);
LaurentSuperpotential superpotential_from_json(const std::string& text);

std::string state_space_to_json(const GradedStateSpace& s);

std::string polytope_to_json(const Polytope& p);
Polytope polytope_from_json(const std::string& text);

std::string fan_to_json(const Fan& f);
Fan fan_from_json(const std::string& text);

}  // namespace toric
