#include "escalier/json_io.hpp"

#include <istream>
#include <sstream>

namespace escalier {

namespace {

PointSet parse_point_rows(const Json& rows, std::size_t n, const FieldSpec& field) {
    PointSet points;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        const std::string where = "point " + std::to_string(i + 1);
        if (!row.is_array() || row.size() != n)
            throw ParseError(where + " has " + std::to_string(row.size()) +
                             " coordinates, expected " + std::to_string(n));
        std::vector<Scalar> coords;
        coords.reserve(n);
        for (std::size_t k = 0; k < row.size(); ++k) {
            const auto& c = row[k];
            try {
                if (c.is_number_integer())
                    coords.push_back(Scalar::from_int(c.get<long>(), field));
                else if (c.is_string())
                    coords.push_back(parse_scalar(c.get<std::string>(), field));
                else
                    throw ParseError("coordinates must be integers or strings");
            } catch (const std::exception& e) {
                throw ParseError(where + ", coordinate " + std::to_string(k + 1) + ": " + e.what());
            }
        }
        points.emplace_back(std::move(coords));
    }
    return points;
}

} // namespace

InputData load_points_json(std::istream& in) {
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad JSON input: ") + e.what());
    }
    InputData data;
    if (!j.contains("n") || !j["n"].is_number_unsigned() || j["n"].get<std::size_t>() < 1)
        throw ParseError("input needs a positive \"n\"");
    data.n = j["n"].get<std::size_t>();
    data.field = j.contains("field") ? FieldSpec::parse(j["field"].get<std::string>())
                                     : FieldSpec::rationals();
    if (!j.contains("points") || !j["points"].is_array())
        throw ParseError("input needs a \"points\" array");
    data.points = parse_point_rows(j["points"], data.n, data.field);
    return data;
}

InputData load_points_csv(std::istream& in, const FieldSpec& field) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty CSV input");
    auto split = [](const std::string& s) {
        std::vector<std::string> cells;
        std::string cur;
        for (char c : s) {
            if (c == ',') {
                cells.push_back(cur);
                cur.clear();
            } else if (c != '\r' && c != ' ') {
                cur += c;
            }
        }
        cells.push_back(cur);
        return cells;
    };
    const auto header = split(line);
    InputData data;
    data.n = header.size();
    data.field = field;
    for (std::size_t k = 0; k < header.size(); ++k)
        if (header[k] != "x" + std::to_string(k + 1))
            throw ParseError("CSV header must be x1,..,xn");
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") continue;
        const auto cells = split(line);
        if (cells.size() != data.n) throw ParseError("CSV row width mismatch: " + line);
        std::vector<Scalar> coords;
        coords.reserve(data.n);
        for (const auto& c : cells) coords.push_back(parse_scalar(c, field));
        data.points.emplace_back(std::move(coords));
    }
    return data;
}

namespace {

Json bar_to_json(const BarCode::Bar& bar, std::size_t rows_left) {
    Json j = Json::array();
    if (rows_left == 0) {
        for (int p : bar.pts) j.push_back(p);
        return j;
    }
    for (const auto& s : bar.sub) j.push_back(bar_to_json(s, rows_left - 1));
    return j;
}

BarCode::Bar bar_from_json(const Json& j, std::size_t rows_left) {
    BarCode::Bar bar;
    if (!j.is_array()) throw ParseError("bar code node must be an array");
    if (rows_left == 0) {
        for (const auto& p : j) {
            if (!p.is_number_integer()) throw ParseError("1-bar entries must be point indices");
            bar.pts.push_back(p.get<int>());
        }
        return bar;
    }
    for (const auto& s : j) bar.sub.push_back(bar_from_json(s, rows_left - 1));
    return bar;
}

} // namespace

Json barcode_to_json(const BarCode& b) {
    Json j = Json::array();
    for (const auto& bar : b.top_bars()) j.push_back(bar_to_json(bar, b.nvars() - 1));
    return j;
}

BarCode barcode_from_json(const Json& j, std::size_t nvars) {
    if (!j.is_array()) throw ParseError("bar code must be an array");
    std::vector<BarCode::Bar> bars;
    for (const auto& b : j) bars.push_back(bar_from_json(b, nvars - 1));
    return BarCode::from_bars(nvars, std::move(bars));
}

Term term_from_json(const Json& j, std::size_t nvars) {
    if (j.is_string()) return parse_term(j.get<std::string>(), nvars);
    if (j.is_array()) {
        if (j.size() != nvars)
            throw ParseError("exponent vector of length " + std::to_string(j.size()) +
                             ", expected " + std::to_string(nvars));
        std::vector<std::uint32_t> exps;
        exps.reserve(nvars);
        for (const auto& e : j) {
            if (!e.is_number_unsigned()) throw ParseError("exponents must be non-negative integers");
            exps.push_back(e.get<std::uint32_t>());
        }
        return Term(std::move(exps));
    }
    throw ParseError("a term is a string or an exponent array");
}

Json table_to_json(const EscalierTable& t) {
    Json j = Json::array();
    for (std::size_t i = 1; i <= t.rows(); ++i) j.push_back(t.row(i));
    return j;
}

Json matrix_to_json(const Matrix& m) {
    Json j = Json::array();
    for (const auto& row : m) {
        Json r = Json::array();
        for (const auto& c : row) r.push_back(c.to_string());
        j.push_back(std::move(r));
    }
    return j;
}

Json terms_to_json(const std::vector<Term>& terms) {
    Json j = Json::array();
    for (const auto& t : terms) j.push_back(t.to_string());
    return j;
}

Json points_to_json(const PointSet& points) {
    Json j = Json::array();
    for (const auto& p : points) {
        Json row = Json::array();
        for (const auto& c : p.coords()) row.push_back(c.to_string());
        j.push_back(std::move(row));
    }
    return j;
}

Json polynomial_to_json(const Polynomial& p) {
    Json j = Json::object();
    for (const auto& [t, c] : p.coefficients()) j[t.to_string()] = c.to_string();
    return j;
}

Json separator_to_json(const Separator& s) {
    Json j = Json::object();
    j["owner"] = s.owner();
    Json factors = Json::array();
    for (const auto& f : s.factors()) {
        Json e = Json::object();
        e["variable"] = f.variable;
        e["root"] = f.root.to_string();
        e["scale"] = f.scale.to_string();
        factors.push_back(std::move(e));
    }
    j["factors"] = std::move(factors);
    j["expanded"] = polynomial_to_json(s.expand());
    return j;
}

Json state_to_json(const GameState& st) {
    Json j = Json::object();
    j["field"] = st.field().to_string();
    j["n"] = st.nvars();
    j["points"] = points_to_json(st.points());
    j["m"] = table_to_json(st.table());
    j["barcode"] = barcode_to_json(st.barcode());
    return j;
}

GameState state_from_json(const Json& j) {
    if (!j.contains("field") || !j.contains("n") || !j.contains("points"))
        throw ParseError("state needs \"field\", \"n\" and \"points\"");
    const FieldSpec field = FieldSpec::parse(j["field"].get<std::string>());
    const std::size_t n = j["n"].get<std::size_t>();
    const PointSet points = parse_point_rows(j["points"], n, field);

    GameState st(n, field);
    for (const auto& p : points) st.add_point(p);

    // stored results must agree with the replayed ones
    if (j.contains("m") && table_to_json(st.table()) != j["m"])
        throw InconsistentStateError("stored matrix does not match its points");
    if (j.contains("barcode") && barcode_to_json(st.barcode()) != j["barcode"])
        throw InconsistentStateError("stored bar code does not match its points");
    return st;
}

} // namespace escalier
