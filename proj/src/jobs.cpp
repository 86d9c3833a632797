#include "escalier/jobs.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

namespace escalier {

namespace {

InputData load_input(const JobConfig& config) {
    std::optional<FieldSpec> forced;
    if (config.field_override) forced = FieldSpec::parse(*config.field_override);

    std::ifstream file;
    std::istream* in = &std::cin;
    if (config.input_path != "-") {
        file.open(config.input_path);
        if (!file) throw ParseError("cannot open input: " + config.input_path);
        in = &file;
    }
    InputData data;
    if (config.format == "csv") {
        if (!forced) throw ParseError("csv input needs --field");
        data = load_points_csv(*in, *forced);
    } else if (config.format == "json") {
        data = load_points_json(*in);
        if (forced) {
            // re-read coordinates under the forced field
            std::ostringstream oss;
            oss << points_to_json(data.points);
            InputData redo;
            redo.n = data.n;
            redo.field = *forced;
            for (const auto& p : data.points) {
                std::vector<Scalar> coords;
                for (const auto& c : p.coords())
                    coords.push_back(parse_scalar(c.to_string(), *forced));
                redo.points.emplace_back(std::move(coords));
            }
            data = std::move(redo);
        }
    } else {
        throw ParseError("unknown format: " + config.format);
    }
    if (data.points.empty()) throw ParseError("at least one point required");
    validate_point_set(data.points, data.n, data.field);
    return data;
}

bool wants(const JobConfig& config, const std::string& what) {
    return std::find(config.outputs.begin(), config.outputs.end(), what) != config.outputs.end();
}

Json run_outputs(const JobConfig& config, const InputData& data) {
    GameState state(data.n, data.field);
    SeparatorFamily seps(data.n, data.field);
    MulState mats(data.n, data.field);
    const bool need_seps = wants(config, "separators");
    const bool need_mats = wants(config, "matrices") || wants(config, "groebner");
    for (const auto& p : data.points) {
        state.add_point(p);
        if (need_seps) seps.add_point(state.trie(), state.points());
        if (need_mats) mats.add_point(state.points(), state.table());
    }

    Json out = Json::object();
    out["n"] = data.n;
    out["field"] = data.field.to_string();
    out["count"] = data.points.size();
    if (wants(config, "escalier")) out["escalier"] = terms_to_json(state.escalier());
    if (wants(config, "correspondence")) {
        out["correspondence"] = terms_to_json(state.correspondence());
        out["m"] = table_to_json(state.table());
    }
    if (wants(config, "barcode")) out["barcode"] = barcode_to_json(state.barcode());
    if (wants(config, "starset")) out["starset"] = terms_to_json(state.barcode().star_set());
    if (need_seps) {
        Json arr = Json::array();
        for (const auto& s : seps.all()) arr.push_back(separator_to_json(s));
        out["separators"] = std::move(arr);
    }
    if (wants(config, "matrices")) {
        Json m = Json::object();
        m["B"] = matrix_to_json(mats.eval_matrix());
        m["C"] = matrix_to_json(mats.inverse_matrix());
        Json d = Json::array(), a = Json::array();
        for (std::size_t h = 1; h <= data.n; ++h) {
            d.push_back(matrix_to_json(mats.d_matrix(h)));
            a.push_back(matrix_to_json(mats.as_matrix(h)));
        }
        m["D"] = std::move(d);
        m["A"] = std::move(a);
        if (config.check) {
            const std::size_t N = data.points.size();
            auto minus = [](Matrix a, const Matrix& b) {
                for (std::size_t i = 0; i < a.size(); ++i)
                    for (std::size_t j = 0; j < a.size(); ++j) a[i][j] -= b[i][j];
                return a;
            };
            Json residuals = Json::object();
            residuals["B*C-I"] = matrix_to_json(
                minus(matrix_product(mats.eval_matrix(), mats.inverse_matrix(), data.field),
                      identity_matrix(N, data.field)));
            for (std::size_t h = 1; h <= data.n; ++h) {
                const std::string hs = std::to_string(h);
                residuals["A" + hs + "*B-D" + hs] = matrix_to_json(minus(
                    matrix_product(mats.as_matrix(h), mats.eval_matrix(), data.field),
                    mats.d_matrix(h)));
                Matrix scaled = mats.eval_matrix();
                for (std::size_t k = 0; k < N; ++k)
                    for (std::size_t j = 0; j < N; ++j)
                        scaled[k][j] *= data.points[j].coord(h);
                residuals["D" + hs + "-diag(x" + hs + ")*B"] =
                    matrix_to_json(minus(mats.d_matrix(h), scaled));
                for (std::size_t k = h + 1; k <= data.n; ++k) {
                    const std::string ks = std::to_string(k);
                    residuals["A" + hs + "*A" + ks + "-A" + ks + "*A" + hs] = matrix_to_json(
                        minus(matrix_product(mats.as_matrix(h), mats.as_matrix(k), data.field),
                              matrix_product(mats.as_matrix(k), mats.as_matrix(h), data.field)));
                }
            }
            m["residuals"] = std::move(residuals);
        }
        out["matrices"] = std::move(m);
    }
    if (wants(config, "groebner")) {
        const auto star = state.barcode().star_set();
        const auto basis = state.correspondence(); // row order of C
        const auto polys = mats.groebner_border(star, basis, state.points());
        Json arr = Json::array();
        for (std::size_t k = 0; k < polys.size(); ++k) {
            Json g = Json::object();
            g["lead"] = star[k].to_string();
            g["poly"] = polynomial_to_json(polys[k]);
            arr.push_back(std::move(g));
        }
        out["groebner"] = std::move(arr);
    }
    return out;
}

} // namespace

bool VerifyReport::all_passed() const {
    return std::all_of(entries.begin(), entries.end(), [](const Entry& e) { return e.passed; });
}

VerifyReport verify_instance(std::size_t nvars, const FieldSpec& field, const PointSet& points) {
    VerifyReport report;
    auto check = [&](const std::string& name, bool ok, std::string detail = "") {
        report.entries.push_back({name, ok, std::move(detail)});
    };

    GameState state(nvars, field);
    SeparatorFamily seps(nvars, field);
    MulState mats(nvars, field);
    for (const auto& p : points) {
        state.add_point(p);
        seps.add_point(state.trie(), state.points());
        mats.add_point(state.points(), state.table());
        state.barcode().validate_structure();
    }
    const std::size_t N = points.size();

    const auto phi = state.correspondence();
    const auto esc = state.escalier();
    check("escalier-size", esc.size() == N);
    check("order-ideal", is_order_ideal(esc));
    check("admissible", state.barcode().is_admissible());
    check("barcode-reconstruction", state.barcode().reconstruct_terms() == esc);
    check("write-once", state.table().write_count() == N * nvars,
          std::to_string(state.table().write_count()));

    // reference agreement
    const auto cm = cerlienco_mureddu(nvars, points);
    bool cm_match = cm.size() == phi.size();
    for (std::size_t i = 0; cm_match && i < cm.size(); ++i) cm_match = cm[i] == phi[i];
    check("inductive-reference", cm_match);
    const auto bm = bm_escalier(nvars, points);
    check("rank-reference", bm == esc);

    // star set against the divisor-quotient membership test
    const auto star = state.barcode().star_set();
    const auto gens = minimal_generators(esc, nvars);
    std::vector<Term> fi;
    {
        // F(I) = terms outside N whose quotient by their least variable lies in N
        std::set<std::vector<std::uint32_t>> inside;
        for (const auto& t : esc) inside.insert(t.exponents());
        std::set<std::vector<std::uint32_t>> cand;
        for (const auto& t : esc)
            for (std::size_t i = 1; i <= nvars; ++i) {
                const Term m = t.times_var(i);
                if (inside.count(m.exponents())) continue;
                const auto mv = m.min_variable();
                if (inside.count(m.quotient_by_var(*mv).exponents())) cand.insert(m.exponents());
            }
        for (const auto& e : cand) fi.emplace_back(e);
        fi = lex_sorted(std::move(fi));
    }
    check("star-set", star == fi);
    bool gens_in_star = true;
    for (const auto& g : gens)
        if (std::find(star.begin(), star.end(), g) == star.end()) gens_in_star = false;
    check("star-contains-generators", gens_in_star);

    // separators: exact Kronecker property
    bool delta_ok = true;
    for (std::size_t i = 1; i <= N && delta_ok; ++i)
        for (std::size_t j = 1; j <= N && delta_ok; ++j) {
            const Scalar v = seps.at((int)i).evaluate(points[j - 1]);
            const Scalar want = i == j ? Scalar::one(field) : Scalar::zero(field);
            if (v != want) delta_ok = false;
        }
    check("separators-delta", delta_ok);

    // matrix identities
    check("B*C=I", matrix_equal(matrix_product(mats.eval_matrix(), mats.inverse_matrix(), field),
                                identity_matrix(N, field)));
    bool d_ok = true, comm_ok = true;
    for (std::size_t h = 1; h <= nvars; ++h) {
        if (!matrix_equal(matrix_product(mats.as_matrix(h), mats.eval_matrix(), field),
                          mats.d_matrix(h)))
            d_ok = false;
        for (std::size_t k = h + 1; k <= nvars; ++k) {
            if (!matrix_equal(matrix_product(mats.as_matrix(h), mats.as_matrix(k), field),
                              matrix_product(mats.as_matrix(k), mats.as_matrix(h), field)))
                comm_ok = false;
        }
    }
    check("A*B=D", d_ok);
    check("A-commute", comm_ok);

    // border polynomials vanish on the whole set
    const auto polys = mats.groebner_border(star, phi, points);
    bool vanish = true;
    for (const auto& g : polys)
        for (const auto& p : points)
            if (!g.evaluate(p).is_zero()) vanish = false;
    check("groebner-vanishing", vanish);

    return report;
}

PointSet random_point_set(std::size_t count, std::size_t nvars, long coord_range,
                          const FieldSpec& field, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dist(-coord_range, coord_range);
    std::set<std::vector<std::string>> seen;
    PointSet points;
    std::size_t guard = 0;
    while (points.size() < count) {
        if (++guard > 1000 * count + 1000)
            throw InconsistentStateError("cannot draw enough distinct points");
        std::vector<Scalar> coords;
        std::vector<std::string> key;
        for (std::size_t k = 0; k < nvars; ++k) {
            coords.push_back(Scalar::from_int(dist(rng), field));
            key.push_back(coords.back().to_string());
        }
        if (!seen.insert(key).second) continue;
        points.emplace_back(std::move(coords));
    }
    return points;
}

namespace {

int run_bench(const JobConfig& config, std::ostream& out) {
    const FieldSpec field = config.field_override ? FieldSpec::parse(*config.field_override)
                                                  : FieldSpec::prime_field(32003);
    out << "N,n,r,wall_ms,trie_ops,bar_ops\n";
    for (std::size_t size : config.bench_sizes) {
        long range = config.bench_coord_range;
        if (field.kind() == FieldKind::PrimeField)
            range = std::max<long>(range, (long)std::min<std::uint64_t>(field.modulus() / 2, 1 << 20));
        const PointSet points = random_point_set(size, config.bench_nvars, range, field, config.seed);
        const auto start = std::chrono::steady_clock::now();
        GameState st = GameState::full_run(config.bench_nvars, field, points);
        const auto stop = std::chrono::steady_clock::now();
        // r: the widest fan-out of any node
        std::size_t r = 0;
        for (std::size_t lv = 0; lv < st.nvars(); ++lv)
            for (std::size_t u = 0; u < st.trie().level_width(lv); ++u)
                r = std::max(r,
                             st.trie().children({(std::uint32_t)lv, (std::uint32_t)u}).size());
        out << points.size() << "," << config.bench_nvars << "," << r << ","
            << std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count() << ","
            << st.trie().op_count() << "," << st.barcode().op_count() << "\n";
    }
    return 0;
}

} // namespace

int run_job(const JobConfig& config, std::ostream& out, std::ostream& err) {
    try {
        switch (config.mode) {
        case JobConfig::Mode::Bench:
            return run_bench(config, out);
        case JobConfig::Mode::Verify: {
            const InputData data = load_input(config);
            const VerifyReport report = verify_instance(data.n, data.field, data.points);
            Json j = Json::object();
            for (const auto& e : report.entries) j[e.name] = e.passed ? "pass" : "fail";
            out << j.dump(2) << "\n";
            if (!report.all_passed()) {
                err << "invariant violation\n";
                return 2;
            }
            return 0;
        }
        case JobConfig::Mode::ExportState: {
            const InputData data = load_input(config);
            GameState st = GameState::full_run(data.n, data.field, data.points);
            out << state_to_json(st).dump(2) << "\n";
            return 0;
        }
        case JobConfig::Mode::Resume: {
            std::ifstream sf(config.state_path);
            if (!sf) throw ParseError("cannot open state: " + config.state_path);
            Json js;
            try {
                js = Json::parse(sf);
            } catch (const nlohmann::json::exception& e) {
                throw ParseError(std::string("bad state JSON: ") + e.what());
            }
            GameState st = state_from_json(js);
            const InputData more = load_input(config);
            if (more.n != st.nvars() || more.field != st.field())
                throw DimensionMismatchError("appended points do not match the state");
            for (const auto& p : more.points) st.add_point(p);
            out << state_to_json(st).dump(2) << "\n";
            return 0;
        }
        case JobConfig::Mode::Run: {
            if (config.outputs.empty()) throw ParseError("no outputs requested");
            const InputData data = load_input(config);
            out << run_outputs(config, data).dump(2) << "\n";
            return 0;
        }
        }
        return 1;
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << "\n";
        return 1;
    } catch (const DuplicatePointError& e) {
        err << "input error: " << e.what() << "\n";
        return 1;
    } catch (const DimensionMismatchError& e) {
        err << "input error: " << e.what() << "\n";
        return 1;
    } catch (const FieldMismatchError& e) {
        err << "input error: " << e.what() << "\n";
        return 1;
    } catch (const DivisionByZeroError& e) {
        err << "input error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace escalier
