#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "escalier/lex_game.hpp"
#include "escalier/mul_matrices.hpp"
#include "escalier/separators.hpp"

namespace escalier {

using Json = nlohmann::ordered_json;

// points file: {"field":"rational"|"fp:<p>","n":<int>,"points":[["1","0","3/2"],...]}
struct InputData {
    std::size_t n = 0;
    FieldSpec field = FieldSpec::rationals();
    PointSet points;
};

InputData load_points_json(std::istream& in);
// one point per row, header "x1,..,xn"; the field comes from the caller
InputData load_points_csv(std::istream& in, const FieldSpec& field);

Json barcode_to_json(const BarCode& b);
BarCode barcode_from_json(const Json& j, std::size_t nvars);

// accepts "x1^2*x3" strings or raw exponent arrays [2,0,1]
Term term_from_json(const Json& j, std::size_t nvars);

Json table_to_json(const EscalierTable& t);
Json matrix_to_json(const Matrix& m);
Json terms_to_json(const std::vector<Term>& terms);
Json points_to_json(const PointSet& points);
Json polynomial_to_json(const Polynomial& p);
Json separator_to_json(const Separator& s);

// full session state: points, matrix, bar code, field
Json state_to_json(const GameState& st);
GameState state_from_json(const Json& j);

} // namespace escalier
